#pragma once

#include "brackets/demos.hpp"
#include "brackets/oracle.hpp"
#include "brackets/script/interpreter.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

namespace brackets::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2, kEvalError = 3 };

struct CliConfig {
  script::Format format = script::Format::Text;
  bool color = false;
};

namespace detail {

inline std::string paint(const CliConfig& cfg, const std::string& text, const char* code) {
  return cfg.color ? std::string("\x1b[") + code + "m" + text + "\x1b[0m" : text;
}

inline std::pair<int, int> parse_ring(const std::string& spec) {
  auto comma = spec.find(',');
  auto bad = [&] { return CLI::ValidationError("--ring", "expected n,d but got '" + spec + "'"); };
  if (comma == std::string::npos)
    throw bad();
  try {
    std::size_t used1 = 0, used2 = 0;
    std::string a = spec.substr(0, comma), b = spec.substr(comma + 1);
    int n = std::stoi(a, &used1), d = std::stoi(b, &used2);
    if (used1 != a.size() || used2 != b.size())
      throw bad();
    return {n, d};
  } catch (const std::logic_error&) {
    throw bad();
  }
}

inline std::string ring_call(int n, int d) {
  return "bracketRing(" + std::to_string(n) + ", " + std::to_string(d) + ")";
}

inline void print_transcript(std::ostream& out, const std::vector<script::TranscriptEntry>& entries,
                             const CliConfig& cfg) {
  if (cfg.format == script::Format::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : entries)
      arr.push_back({{"statement", e.statement}, {"value", script::to_json(e.value)}});
    out << arr.dump() << "\n";
    return;
  }
  for (const auto& e : entries)
    out << "> " << e.statement << "\n" << script::render_text(e.value) << "\n";
}

inline const GCExpression& gc_value(const script::Session& s, const std::string& name) {
  return std::get<GCExpression>(*s.lookup(name));
}

inline int demo_desargues(std::ostream& out, const CliConfig& cfg) {
  script::Session s;
  auto entries = s.run(demos::kDesargues);
  const auto& last = std::get<GCExpression>(entries.back().value);
  bool ok = last.is_zero();
  if (cfg.format == script::Format::Json) {
    nlohmann::ordered_json j;
    j["np"] = script::to_json(gc_value(s, "np"));
    j["nl"] = script::to_json(gc_value(s, "nl"));
    j["identity_verified"] = ok;
    out << j.dump() << "\n";
    return ok ? kOk : kFalse;
  }
  print_transcript(out, entries, cfg);
  out << "\n";
  out << "np = " << render(gc_value(s, "np")) << "\n";
  out << "nl = " << render(gc_value(s, "nl")) << "\n";
  if (ok)
    out << paint(cfg, "IDENTITY VERIFIED: straighten([abc][def]·np − 2·nl) = 0", "32") << "\n";
  else
    out << paint(cfg, "IDENTITY FAILED: straighten([abc][def]·np − 2·nl) = " + render(last), "31")
        << "\n";
  return ok ? kOk : kFalse;
}

inline constexpr std::uint64_t kTransversalSeed = 20230601;

inline int demo_transversals(std::ostream& out, const CliConfig& cfg) {
  script::Session s;
  auto entries = s.run(demos::kTransversals);
  const auto& ring = s.context()->brackets();
  auto poly = [&](const char* name) { return *as_bracket_poly(gc_value(s, name)); };
  Poly a = poly("A"), b = poly("B"), c = poly("C"), disc = poly("disc");

  std::mt19937_64 rng(kTransversalSeed);
  auto pts = oracle::random_assignment(ring, rng);
  Rational value = oracle::evaluate(disc, ring, pts);
  bool ok = !disc.is_zero() && value != 0;

  if (cfg.format == script::Format::Json) {
    nlohmann::ordered_json j;
    j["l^2"] = script::poly_json(a, ring.order());
    j["l*m"] = script::poly_json(b, ring.order());
    j["m^2"] = script::poly_json(c, ring.order());
    j["disc"] = script::poly_json(disc, ring.order());
    j["disc_at_random_configuration"] = to_string(value);
    j["seed"] = kTransversalSeed;
    j["transversals"] = ok ? "two" : "degenerate";
    out << j.dump() << "\n";
    return ok ? kOk : kFalse;
  }
  print_transcript(out, entries, cfg);
  out << "\n";
  out << "coefficient of l^2: " << ring.render(a) << "\n";
  out << "coefficient of l*m: " << ring.render(b) << "\n";
  out << "coefficient of m^2: " << ring.render(c) << "\n";
  out << "disc = (l*m)^2 - 4*(l^2)*(m^2) = " << ring.render(disc) << "\n";
  out << "disc at random configuration (seed " << kTransversalSeed << "): " << to_string(value)
      << "\n";
  out << "two transversals: disc != 0\n";
  out << "one transversal: disc = 0 with some coefficient nonzero\n";
  out << "infinitely many transversals: all three coefficients vanish\n";
  if (ok)
    out << paint(cfg, "GENERIC CASE: disc is a nonzero bracket polynomial, two transversals", "32")
        << "\n";
  else
    out << paint(cfg, "UNEXPECTED: disc vanishes", "31") << "\n";
  return ok ? kOk : kFalse;
}

inline int repl(std::istream& in, std::ostream& out, std::ostream& err, const CliConfig& cfg) {
  script::Session s;
  std::string line;
  while (true) {
    err << "gc> " << std::flush;
    if (!std::getline(in, line))
      break;
    try {
      for (const auto& e : s.run(line)) {
        if (cfg.format == script::Format::Json)
          out << script::to_json(e.value).dump() << "\n";
        else
          out << script::render_text(e.value) << "\n";
      }
    } catch (const Error& e) {
      err << paint(cfg, std::string("error: ") + e.what(), "31") << "\n";
    }
  }
  err << "\n";
  return kOk;
}

} // namespace detail

// Runs one CLI invocation and returns the process exit code.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                    std::istream& in) {
  CLI::App app{"Bracket rings, straightening and Grassmann-Cayley algebra", "gcbrackets"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string format = "text";
  if (const char* env = std::getenv("GCBRACKETS_FORMAT"))
    format = env;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--color", cfg.color, "Colorize status lines");

  auto* repl_cmd = app.add_subcommand("repl", "Interactive session");

  std::string file;
  auto* run_cmd = app.add_subcommand("run", "Run a .gc script");
  run_cmd->add_option("file", file, "Script path")->required();

  std::string ring_spec;
  std::vector<std::string> words;
  auto* straighten_cmd = app.add_subcommand("straighten", "Normal form of a bracket polynomial");
  straighten_cmd->footer("Arguments after the options are joined into one expression.");
  straighten_cmd->add_option("--ring", ring_spec, "n,d")->required();
  straighten_cmd->allow_extras();

  auto* prove_cmd = app.add_subcommand("prove", "Decide A == B in the bracket ring");
  prove_cmd->add_option("--ring", ring_spec, "n,d")->required();
  prove_cmd->allow_extras();

  std::string demo_name;
  auto* demo_cmd = app.add_subcommand("demo", "Built-in demonstrations");
  demo_cmd->add_option("name", demo_name, "desargues or transversals")
      ->required()
      ->check(CLI::IsMember({"desargues", "transversals"}));

  std::pair<int, int> ring{0, 0};
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!ring_spec.empty())
      ring = detail::parse_ring(ring_spec);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  cfg.format = format == "json" ? script::Format::Json : script::Format::Text;

  // Expression words bypass option parsing so "[a,b]" is not read as a CLI11 array.
  for (auto* cmd : {straighten_cmd, prove_cmd})
    if (*cmd)
      words = cmd->remaining();
  if ((*straighten_cmd || *prove_cmd) && words.empty()) {
    err << "error: missing expression\n";
    return kUsage;
  }

  std::string text;
  for (const auto& w : words)
    text += (text.empty() ? "" : " ") + w;

  try {
    if (*repl_cmd)
      return detail::repl(in, out, err, cfg);

    if (*run_cmd) {
      if (!std::filesystem::is_regular_file(file)) {
        err << "error: cannot open script '" << file << "'\n";
        return kUsage;
      }
      script::Session s;
      detail::print_transcript(out, script::run_script_file(file, s), cfg);
      return kOk;
    }

    if (*straighten_cmd) {
      script::Session s;
      s.run(detail::ring_call(ring.first, ring.second));
      auto v = s.evaluate("normalForm(" + text + ")");
      out << script::render(v, cfg.format) << "\n";
      return kOk;
    }

    if (*prove_cmd) {
      auto pos = text.find("==");
      if (pos == std::string::npos || text.find("==", pos + 2) != std::string::npos) {
        err << "error: prove expects exactly one '=='\n";
        return kUsage;
      }
      script::Session s;
      s.run(detail::ring_call(ring.first, ring.second));
      auto v = s.evaluate("proveEqual(" + text.substr(0, pos) + ", " + text.substr(pos + 2) + ")");
      bool equal = std::get<bool>(v);
      if (cfg.format == script::Format::Json)
        out << nlohmann::ordered_json{{"equal", equal}}.dump() << "\n";
      else
        out << detail::paint(cfg, equal ? "EQUAL" : "NOT EQUAL", equal ? "32" : "31") << "\n";
      return equal ? kOk : kFalse;
    }

    if (*demo_cmd)
      return demo_name == "desargues" ? detail::demo_desargues(out, cfg)
                                      : detail::demo_transversals(out, cfg);
  } catch (const Error& e) {
    err << detail::paint(cfg, std::string("error: ") + e.what(), "31") << "\n";
    return kEvalError;
  }
  return kUsage;
}

} // namespace brackets::cli
