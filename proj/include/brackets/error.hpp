#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brackets {

// Base of every error raised by the engine. The kind lets callers (the CLI in
// particular) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
public:
  enum class Kind {
    Context,     // operands from different rings
    Domain,      // index or size out of range
    Name,        // unknown or duplicate symbol
    Degree,      // grading violated (meet, top_to_bracket)
    EmptyInput,  // e.g. leading term of zero
    Unsupported, // input outside an operation's domain
    Binding,     // unbound parameter during numeric evaluation
    Lex,
    Syntax,
    Eval,
  };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

// Errors produced by the script front end carry a 1-based source position.
class SourceError : public Error {
public:
  SourceError(Kind kind, const std::string& what, std::size_t line, std::size_t column)
      : Error(kind, what + " at line " + std::to_string(line) + ", column " +
                        std::to_string(column)),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace brackets
