#pragma once

#include "brackets/error.hpp"

#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace brackets::script {

enum class TokenKind {
  Ident,
  Int,
  Keyword,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Star,
  Caret,
  Plus,
  Minus,
  Comma,
  Assign,
  DotDot,
  Semi,
  Newline,
  End,
};

inline const char* token_name(TokenKind k) {
  switch (k) {
  case TokenKind::Ident: return "identifier";
  case TokenKind::Int: return "integer";
  case TokenKind::Keyword: return "command";
  case TokenKind::LBracket: return "'['";
  case TokenKind::RBracket: return "']'";
  case TokenKind::LBrace: return "'{'";
  case TokenKind::RBrace: return "'}'";
  case TokenKind::LParen: return "'('";
  case TokenKind::RParen: return "')'";
  case TokenKind::Star: return "'*'";
  case TokenKind::Caret: return "'^'";
  case TokenKind::Plus: return "'+'";
  case TokenKind::Minus: return "'-'";
  case TokenKind::Comma: return "','";
  case TokenKind::Assign: return "'='";
  case TokenKind::DotDot: return "'..'";
  case TokenKind::Semi: return "';'";
  case TokenKind::Newline: return "end of line";
  case TokenKind::End: return "end of input";
  }
  return "?";
}

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t offset; // byte offset into the source
  std::size_t line;   // 1-based
  std::size_t column; // 1-based
};

inline constexpr std::array<std::string_view, 9> kCommands = {
    "gc",  "bracketRing", "normalForm", "factor",     "coefficients",
    "psi", "toBrackets",  "proveEqual", "coefficient",
};

inline bool is_command(std::string_view word) {
  for (auto c : kCommands)
    if (c == word)
      return true;
  return false;
}

// Newlines inside (), [] or {} are whitespace; elsewhere they end a statement.
inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  int depth = 0;
  auto push = [&](TokenKind k, std::size_t start, std::size_t len, std::size_t c) {
    out.push_back({k, std::string(text.substr(start, len)), start, line, c});
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      if (depth == 0)
        push(TokenKind::Newline, i, 1, col);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n')
        ++i;
      continue;
    }
    std::size_t start = i, start_col = col;
    auto advance = [&](std::size_t n) {
      i += n;
      col += n;
    };
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        advance(1);
      push(TokenKind::Int, start, i - start, start_col);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        advance(1);
      auto word = text.substr(start, i - start);
      push(is_command(word) ? TokenKind::Keyword : TokenKind::Ident, start, i - start, start_col);
      continue;
    }
    if (ch == '<' && i + 1 < text.size() && text[i + 1] == '-') {
      advance(2);
      push(TokenKind::Assign, start, 2, start_col);
      continue;
    }
    if (ch == '.' && i + 1 < text.size() && text[i + 1] == '.') {
      advance(2);
      push(TokenKind::DotDot, start, 2, start_col);
      continue;
    }
    TokenKind kind;
    switch (ch) {
    case '[': kind = TokenKind::LBracket; ++depth; break;
    case ']': kind = TokenKind::RBracket; --depth; break;
    case '{': kind = TokenKind::LBrace; ++depth; break;
    case '}': kind = TokenKind::RBrace; --depth; break;
    case '(': kind = TokenKind::LParen; ++depth; break;
    case ')': kind = TokenKind::RParen; --depth; break;
    case '*': kind = TokenKind::Star; break;
    case '^': kind = TokenKind::Caret; break;
    case '+': kind = TokenKind::Plus; break;
    case '-': kind = TokenKind::Minus; break;
    case ',': kind = TokenKind::Comma; break;
    case '=': kind = TokenKind::Assign; break;
    case ';': kind = TokenKind::Semi; break;
    default:
      throw SourceError(Error::Kind::Lex, std::string("illegal character '") + ch + "'", line, col);
    }
    if (depth < 0)
      depth = 0;
    advance(1);
    push(kind, start, 1, start_col);
  }
  out.push_back({TokenKind::End, "", text.size(), line, col});
  return out;
}

} // namespace brackets::script
