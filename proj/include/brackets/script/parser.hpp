#pragma once
/*
 * Grammar (EBNF).  Binding strength, tightest first: unary minus, '*' (join),
 * '^' (meet), '+'/'-'.  All binary operators associate to the left.
 *
 *   script     = { [ statement ] ( ";" | NEWLINE ) } [ statement ] END ;
 *   statement  = IDENT ( "=" | "<-" ) expr | expr ;
 *   expr       = meet { ( "+" | "-" ) meet } ;
 *   meet       = join { "^" join } ;
 *   join       = unary { "*" unary } ;
 *   unary      = "-" unary | primary ;
 *   primary    = INT | IDENT | bracket | list | call | "(" expr ")" ;
 *   bracket    = "[" item { [ "," ] item } "]" ;       item = INT | IDENT ;
 *   list       = "{" [ IDENT { "," IDENT } ] "}" ;
 *   call       = COMMAND "(" [ arg { "," arg } ] ")" ;
 *   arg        = IDENT ".." IDENT | expr ;
 */

#include "brackets/script/lexer.hpp"

#include <memory>

namespace brackets::script {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Kind {
    BracketLiteral, // items
    Ident,          // text
    Int,            // text (decimal digits)
    Neg,
    Add,
    Sub,
    Join,
    Meet,
    Call,   // text = command, children = args
    Assign, // text = target, children = {value}
    Range,  // items = {first, last}
    List,   // items
  };

  Kind kind;
  std::string text;
  std::vector<std::string> items;
  std::vector<NodePtr> children;
  std::size_t line = 0;
  std::size_t column = 0;
};

// Structural equality, positions ignored.
inline bool same_tree(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.text != b.text || a.items != b.items ||
      a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!same_tree(*a.children[i], *b.children[i]))
      return false;
  return true;
}

// Fully parenthesized source text that parses back to the same tree.
inline std::string render(const Node& n) {
  auto join_items = [](const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
      out += (i ? sep : "") + items[i];
    return out;
  };
  auto binary = [&](const char* op) {
    return "(" + render(*n.children[0]) + " " + op + " " + render(*n.children[1]) + ")";
  };
  switch (n.kind) {
  case Node::Kind::BracketLiteral: return "[" + join_items(n.items, " ") + "]";
  case Node::Kind::Ident:
  case Node::Kind::Int: return n.text;
  case Node::Kind::Neg: return "-" + render(*n.children[0]);
  case Node::Kind::Add: return binary("+");
  case Node::Kind::Sub: return binary("-");
  case Node::Kind::Join: return binary("*");
  case Node::Kind::Meet: return binary("^");
  case Node::Kind::Call: {
    std::string out = n.text + "(";
    for (std::size_t i = 0; i < n.children.size(); ++i)
      out += (i ? ", " : "") + render(*n.children[i]);
    return out + ")";
  }
  case Node::Kind::Assign: return n.text + " = " + render(*n.children[0]);
  case Node::Kind::Range: return n.items[0] + ".." + n.items[1];
  case Node::Kind::List: return "{" + join_items(n.items, ", ") + "}";
  }
  return {};
}

struct Statement {
  NodePtr node;
  std::size_t begin; // source byte range
  std::size_t end;
};

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  std::vector<Statement> parse_script() {
    std::vector<Statement> out;
    while (!at(TokenKind::End)) {
      if (at(TokenKind::Newline) || at(TokenKind::Semi)) {
        ++pos_;
        continue;
      }
      std::size_t begin = peek().offset;
      NodePtr stmt = statement();
      std::size_t end = toks_[pos_ - 1].offset + toks_[pos_ - 1].lexeme.size();
      if (!at(TokenKind::End) && !at(TokenKind::Newline) && !at(TokenKind::Semi))
        fail("';' or end of line");
      out.push_back({std::move(stmt), begin, end});
    }
    return out;
  }

  // A single expression statement with nothing after it.
  NodePtr parse_single() {
    while (at(TokenKind::Newline))
      ++pos_;
    NodePtr n = statement();
    while (at(TokenKind::Newline) || at(TokenKind::Semi))
      ++pos_;
    if (!at(TokenKind::End))
      fail("end of input");
    return n;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(TokenKind k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End || t.kind == TokenKind::Newline
                            ? token_name(t.kind)
                            : "'" + t.lexeme + "'";
    throw SourceError(Error::Kind::Syntax, "expected " + expected + ", found " + found, t.line,
                      t.column);
  }

  const Token& expect(TokenKind k) {
    if (!at(k))
      fail(token_name(k));
    return toks_[pos_++];
  }

  NodePtr make(Node::Kind kind, const Token& at_tok, std::vector<NodePtr> children = {},
               std::string text = {}) const {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->text = std::move(text);
    n->children = std::move(children);
    n->line = at_tok.line;
    n->column = at_tok.column;
    return n;
  }

  NodePtr statement() {
    if (at(TokenKind::Ident) && at(TokenKind::Assign, 1)) {
      const Token& name = toks_[pos_];
      pos_ += 2;
      return make(Node::Kind::Assign, name, {expr()}, name.lexeme);
    }
    return expr();
  }

  NodePtr expr() {
    NodePtr lhs = meet_level();
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      const Token& op = toks_[pos_++];
      auto kind = op.kind == TokenKind::Plus ? Node::Kind::Add : Node::Kind::Sub;
      lhs = make(kind, op, {lhs, meet_level()});
    }
    return lhs;
  }

  NodePtr meet_level() {
    NodePtr lhs = join_level();
    while (at(TokenKind::Caret)) {
      const Token& op = toks_[pos_++];
      lhs = make(Node::Kind::Meet, op, {lhs, join_level()});
    }
    return lhs;
  }

  NodePtr join_level() {
    NodePtr lhs = unary();
    while (at(TokenKind::Star)) {
      const Token& op = toks_[pos_++];
      lhs = make(Node::Kind::Join, op, {lhs, unary()});
    }
    return lhs;
  }

  NodePtr unary() {
    if (at(TokenKind::Minus)) {
      const Token& op = toks_[pos_++];
      return make(Node::Kind::Neg, op, {unary()});
    }
    return primary();
  }

  NodePtr primary() {
    const Token& t = peek();
    switch (t.kind) {
    case TokenKind::Int:
      ++pos_;
      return make(Node::Kind::Int, t, {}, t.lexeme);
    case TokenKind::Ident:
      ++pos_;
      return make(Node::Kind::Ident, t, {}, t.lexeme);
    case TokenKind::LParen: {
      ++pos_;
      NodePtr inner = expr();
      expect(TokenKind::RParen);
      return inner;
    }
    case TokenKind::LBracket: {
      ++pos_;
      auto n = std::const_pointer_cast<Node>(make(Node::Kind::BracketLiteral, t));
      while (true) {
        if (at(TokenKind::Int) || at(TokenKind::Ident))
          n->items.push_back(toks_[pos_++].lexeme);
        else
          fail("bracket entry");
        if (at(TokenKind::Comma))
          ++pos_;
        if (at(TokenKind::RBracket))
          break;
      }
      ++pos_;
      return n;
    }
    case TokenKind::LBrace: {
      ++pos_;
      auto n = std::const_pointer_cast<Node>(make(Node::Kind::List, t));
      if (!at(TokenKind::RBrace)) {
        n->items.push_back(expect(TokenKind::Ident).lexeme);
        while (at(TokenKind::Comma)) {
          ++pos_;
          n->items.push_back(expect(TokenKind::Ident).lexeme);
        }
      }
      expect(TokenKind::RBrace);
      return n;
    }
    case TokenKind::Keyword: {
      ++pos_;
      expect(TokenKind::LParen);
      std::vector<NodePtr> args;
      if (!at(TokenKind::RParen)) {
        args.push_back(argument());
        while (at(TokenKind::Comma)) {
          ++pos_;
          args.push_back(argument());
        }
      }
      expect(TokenKind::RParen);
      return make(Node::Kind::Call, t, std::move(args), t.lexeme);
    }
    default:
      fail("expression");
    }
  }

  NodePtr argument() {
    if (at(TokenKind::Ident) && at(TokenKind::DotDot, 1)) {
      const Token& first = toks_[pos_];
      pos_ += 2;
      auto n = std::const_pointer_cast<Node>(make(Node::Kind::Range, first));
      n->items = {first.lexeme, expect(TokenKind::Ident).lexeme};
      return n;
    }
    return expr();
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline std::vector<Statement> parse_script(std::string_view text) {
  return Parser(tokenize(text)).parse_script();
}

inline NodePtr parse(std::string_view text) { return Parser(tokenize(text)).parse_single(); }

} // namespace brackets::script
