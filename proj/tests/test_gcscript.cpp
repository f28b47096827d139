#include "brackets/demos.hpp"
#include "brackets/script/interpreter.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace brackets;
using namespace brackets::script;

namespace {

std::vector<TokenKind> kinds(std::string_view text) {
  std::vector<TokenKind> out;
  for (const auto& t : tokenize(text))
    out.push_back(t.kind);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string eval_text(Session& s, std::string_view src) { return render_text(s.evaluate(src)); }

// Random expression source built from the grammar.
std::string random_expr(std::mt19937_64& rng, int depth) {
  static const char* atoms[] = {"a", "b", "p2", "7", "[a b c]", "[1 2 3]", "[abc]"};
  static const char* ops[] = {" + ", " - ", "*", " ^ "};
  std::uniform_int_distribution<int> choice(0, depth > 0 ? 5 : 0);
  switch (choice(rng)) {
  case 0: return atoms[std::uniform_int_distribution<int>(0, 6)(rng)];
  case 1: return "-" + random_expr(rng, depth - 1);
  case 2: return "(" + random_expr(rng, depth - 1) + ")";
  case 3: return "normalForm(" + random_expr(rng, depth - 1) + ")";
  default:
    return random_expr(rng, depth - 1) + ops[std::uniform_int_distribution<int>(0, 3)(rng)] +
           random_expr(rng, depth - 1);
  }
}

} // namespace

TEST(Tokenize, Examples) {
  using K = TokenKind;
  EXPECT_EQ(kinds("[1 4 5]"), (std::vector<K>{K::LBracket, K::Int, K::Int, K::Int, K::RBracket, K::End}));
  auto toks = tokenize("a*d ^ b*e");
  EXPECT_EQ(kinds("a*d ^ b*e"),
            (std::vector<K>{K::Ident, K::Star, K::Ident, K::Caret, K::Ident, K::Star, K::Ident, K::End}));
  EXPECT_EQ(toks[0].lexeme, "a");
  EXPECT_EQ(toks[6].lexeme, "e");
  try {
    tokenize("x <- 3 @");
    FAIL();
  } catch (const SourceError& e) {
    EXPECT_EQ(e.kind(), Error::Kind::Lex);
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 8u);
  }
}

TEST(Tokenize, CommentsKeywordsAndNewlines) {
  using K = TokenKind;
  EXPECT_EQ(kinds("normalForm(x) # done\ny"),
            (std::vector<K>{K::Keyword, K::LParen, K::Ident, K::RParen, K::Newline, K::Ident, K::End}));
  EXPECT_EQ(kinds("f(\n)"), (std::vector<K>{K::Ident, K::LParen, K::RParen, K::End}));
  EXPECT_EQ(kinds("a..f"), (std::vector<K>{K::Ident, K::DotDot, K::Ident, K::End}));
}

TEST(Tokenize, PositionsIncrease) {
  auto toks = tokenize(demos::kTransversals);
  for (std::size_t i = 1; i < toks.size(); ++i) {
    EXPECT_GT(toks[i].offset, toks[i - 1].offset);
    EXPECT_TRUE(toks[i].line > toks[i - 1].line ||
                (toks[i].line == toks[i - 1].line && toks[i].column > toks[i - 1].column));
  }
}

TEST(Parse, Precedence) {
  auto n = parse("a*d ^ b*e");
  EXPECT_EQ(n->kind, Node::Kind::Meet);
  EXPECT_EQ(render(*n), "((a * d) ^ (b * e))");
  EXPECT_EQ(render(*parse("[1 4 5] * [1 5 6] * [2 3 4]")), "(([1 4 5] * [1 5 6]) * [2 3 4])");
  auto call = parse("normalForm(p ^ q)");
  EXPECT_EQ(call->kind, Node::Kind::Call);
  EXPECT_EQ(call->text, "normalForm");
  ASSERT_EQ(call->children.size(), 1u);
  EXPECT_EQ(call->children[0]->kind, Node::Kind::Meet);
  EXPECT_EQ(render(*parse("-a*b + c ^ d - e")), "(((-a * b) + (c ^ d)) - e)");
  EXPECT_EQ(render(*parse("a - b - c")), "((a - b) - c)");
}

TEST(Parse, SyntaxErrorsCarryPositions) {
  for (const char* bad : {"a +", "(a * b", "[a b", "gc(a..)", "x = = y", "a b"}) {
    try {
      parse(bad);
      ADD_FAILURE() << bad;
    } catch (const SourceError& e) {
      EXPECT_EQ(e.kind(), Error::Kind::Syntax) << bad;
      EXPECT_GE(e.column(), 1u);
      EXPECT_NE(std::string(e.what()).find("expected"), std::string::npos);
    }
  }
}

TEST(Parse, RenderFixpoint) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    std::string src = random_expr(rng, 4);
    auto first = parse(src);
    auto second = parse(render(*first));
    EXPECT_TRUE(same_tree(*first, *second)) << src;
    EXPECT_EQ(render(*second), render(*first));
  }
}

TEST(Evaluate, SessionExamples) {
  Session s;
  s.run("gc(a..f,3)");
  EXPECT_EQ(eval_text(s, "normalForm((a*d ^ b*e) ^ (c*f))"),
            "[bdf]*[ace]-[bef]*[acd]-[cdf]*[abe]-[def]*[abc]");
  EXPECT_EQ(eval_text(s, "a*a"), "0");
  EXPECT_EQ(eval_text(s, "a*d ^ b*e"), "[bde]*a+[abe]*d");
  EXPECT_EQ(eval_text(s, "[1 2 3] - [a b c]"), "0");
  EXPECT_EQ(eval_text(s, "[b a c]"), "-[abc]");

  Session b;
  b.run("bracketRing(4,2)");
  EXPECT_EQ(eval_text(b, "proveEqual([1 2]*[3 4] - [1 3]*[2 4] + [1 4]*[2 3], 0)"), "true");
  EXPECT_EQ(eval_text(b, "proveEqual([1 2]*[3 4], [1 3]*[2 4])"), "false");
  EXPECT_EQ(eval_text(b, "[21] - [2 1]"), "0");
  EXPECT_EQ(eval_text(b, "[31]"), "-[13]");
  EXPECT_EQ(eval_text(b, "psi([1 2])"), "x_1_1*x_2_2-x_1_2*x_2_1");
  EXPECT_EQ(eval_text(b, "toBrackets(psi([1 3]*[2 4]))"), "[24]*[13]");
  EXPECT_EQ(eval_text(b, "toBrackets(x_1_1)"), "not in the bracket ring; remainder x_1_1");
  EXPECT_EQ(eval_text(b, "toBrackets(x_1_1*x_2_2 - x_1_2*x_2_1)"), "[12]");
  EXPECT_EQ(eval_text(b, "factor(6*[1 2]*[1 2])"), "{6, [12], [12]}");
}

TEST(Evaluate, Bindings) {
  Session s;
  s.run("gc(a..d, 2, {l})");
  EXPECT_EQ(eval_text(s, "x = l*a + b"), "l*a+b");
  EXPECT_EQ(eval_text(s, "x ^ c"), "[bc]+l*[ac]");
  EXPECT_EQ(eval_text(s, "coefficients(x ^ c)"), "{l => [ac], 1 => [bc]}");
  EXPECT_EQ(eval_text(s, "coefficient(x ^ c, l)"), "[ac]");
  EXPECT_THROW(s.evaluate("a = b"), Error);
  s.run("gc(p1..p4, 2)");
  EXPECT_EQ(eval_text(s, "p1*p2"), "p1*p2");
  EXPECT_THROW(s.evaluate("x"), Error);
}

TEST(Evaluate, Errors) {
  auto kind_of = [](Session& s, const char* src) {
    try {
      s.evaluate(src);
    } catch (const Error& e) {
      return e.kind();
    }
    return Error::Kind::Context;
  };
  Session none;
  EXPECT_EQ(kind_of(none, "a*b"), Error::Kind::Eval);
  Session s;
  s.run("gc(a..f, 3)");
  EXPECT_EQ(kind_of(s, "zz"), Error::Kind::Name);
  EXPECT_EQ(kind_of(s, "a ^ b"), Error::Kind::Degree);
  EXPECT_EQ(kind_of(s, "[a b q]"), Error::Kind::Name);
  EXPECT_EQ(kind_of(s, "[a b]"), Error::Kind::Domain);
  EXPECT_EQ(kind_of(s, "factor(a*b)"), Error::Kind::Degree);
  EXPECT_EQ(kind_of(s, "normalForm(a, b)"), Error::Kind::Eval);
}

TEST(RunScript, EmptyScript) {
  Session s;
  EXPECT_TRUE(run_script("", s).empty());
  EXPECT_TRUE(run_script("# only a comment\n\n", s).empty());
}

TEST(RunScript, ErrorsCarryStatementIndex) {
  Session s;
  try {
    run_script("gc(a..c, 2)\na*b\nq*a", s);
    FAIL();
  } catch (const ScriptError& e) {
    EXPECT_EQ(e.statement(), 3u);
    EXPECT_EQ(e.kind(), Error::Kind::Name);
  }
}

TEST(RunScript, Desargues) {
  Session s;
  auto t = run_script(demos::kDesargues, s);
  ASSERT_FALSE(t.empty());
  EXPECT_EQ(t.back().statement, "normalForm([abc]*[def]*np2 - 2*nl)");
  EXPECT_EQ(render_text(t.back().value), "0");
}

TEST(RunScript, Transversals) {
  Session s;
  auto t = run_script(demos::kTransversals, s);
  auto it = std::find_if(t.begin(), t.end(),
                         [](const auto& e) { return e.statement == "coefficients(formula)"; });
  ASSERT_NE(it, t.end());
  const auto& c = std::get<CoefficientsValue>(it->value);
  ASSERT_EQ(c.entries.size(), 3u);
  std::vector<std::string> monos;
  for (const auto& e : c.entries)
    monos.push_back(render_monomial(e.monomial, *c.ring->vars()));
  EXPECT_EQ(monos, (std::vector<std::string>{"m^2", "l*m", "l^2"}));
  EXPECT_NE(render_text(t.back().value), "0");
}

TEST(RunScript, Deterministic) {
  auto transcript = [](std::string_view src) {
    Session s;
    std::string out;
    for (const auto& e : run_script(src, s))
      out += e.statement + "\n" + render(e.value, Format::Text) + "\n" +
             render(e.value, Format::Json) + "\n";
    return out;
  };
  EXPECT_EQ(transcript(demos::kDesargues), transcript(demos::kDesargues));
  EXPECT_EQ(transcript(demos::kTransversals), transcript(demos::kTransversals));
}

TEST(RunScript, ShippedScriptsMatchBuiltIns) {
  std::string dir = GCBRACKETS_SOURCE_DIR "/scripts/";
  EXPECT_EQ(read_file(dir + "desargues.gc"), demos::kDesargues);
  EXPECT_EQ(read_file(dir + "transversals.gc"), demos::kTransversals);
  Session s;
  EXPECT_EQ(run_script_file(dir + "desargues.gc", s).size(), run_script(demos::kDesargues, s).size());
}

TEST(Render, JsonShape) {
  Session s;
  s.run("gc(a..f, 3)");
  auto zero = to_json(s.evaluate("a*a"));
  EXPECT_EQ(zero["degree"], 0);
  EXPECT_TRUE(zero["terms"].empty());
  auto pt = to_json(s.evaluate("a*d ^ b*e"));
  EXPECT_EQ(pt["degree"], 1);
  ASSERT_EQ(pt["terms"].size(), 2u);
  EXPECT_EQ(pt["terms"][0]["blade"], nlohmann::json::array({"a"}));
  EXPECT_EQ(pt["terms"][0]["coeff"]["terms"][0]["monomial"]["[bde]"], 1);
  EXPECT_EQ(pt["terms"][0]["coeff"]["terms"][0]["num"], "1");
  EXPECT_EQ(pt["terms"][0]["coeff"]["terms"][0]["den"], "1");
  // round trip through an external reader
  auto big = s.evaluate("123456789012345678901234567890*[abc]");
  auto reread = nlohmann::json::parse(render(big, Format::Json));
  EXPECT_EQ(reread["terms"][0]["coeff"]["terms"][0]["num"], "123456789012345678901234567890");
  EXPECT_EQ(reread, nlohmann::json::parse(to_json(big).dump()));
}
