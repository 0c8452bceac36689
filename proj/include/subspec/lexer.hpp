#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "subspec/diagnostics.hpp"

namespace subspec {

enum class Tok {
  End,
  Int,     // decimal literal, value in Token::int_value
  Ident,   // identifier; keywords are contextual
  Tag,     // @name, text holds the name without '@'
  Result,  // \result
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  EqEq,
  Neq,
  Lt,
  Le,
  Gt,
  Ge,
  Assign,  // single '='
  AndAnd,
  OrOr,
  Bang,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Semi,
  Comma,
  Error,  // lexical error; message in text
};

struct Token {
  Tok kind = Tok::End;
  SourcePos pos;
  std::string text;
  std::int64_t int_value = 0;
};

/// Character-level scanner shared by the contract and mini-language parsers.
/// `//` line comments are always skipped; `/* */` block comments only when
/// enabled (contract files handle their doc-comment wrapper separately).
class Lexer {
 public:
  explicit Lexer(std::string_view src, bool block_comments = false)
      : src_(src), block_comments_(block_comments) {}

  SourcePos pos() const { return pos_; }

  const Token& peek() {
    if (!lookahead_) lookahead_ = lex();
    return *lookahead_;
  }

  Token next() {
    if (lookahead_) {
      Token t = std::move(*lookahead_);
      lookahead_.reset();
      return t;
    }
    return lex();
  }

  /// Raw text from the current position to end of line (newline consumed,
  /// not included). Discards any pending lookahead.
  std::string rest_of_line() {
    drop_lookahead();
    std::string out;
    while (i_ < src_.size() && src_[i_] != '\n') {
      out.push_back(src_[i_]);
      advance();
    }
    if (i_ < src_.size()) advance();  // consume '\n'
    return trim(out);
  }

  /// Raw text up to (not including) `stop`; the stop character is consumed.
  /// Returns nullopt if the end of input is reached first.
  std::optional<std::string> raw_until(char stop) {
    drop_lookahead();
    std::string out;
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == stop) {
        advance();
        return trim(out);
      }
      out.push_back(c);
      advance();
    }
    return std::nullopt;
  }

  static std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
  }

 private:
  void drop_lookahead() {
    // Rewind is not supported; callers may switch to raw mode only right
    // after consuming a token, never after a peek.
    if (lookahead_) throw std::logic_error("Lexer: raw mode after peek");
  }

  void advance() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  bool skip_ws_and_comments(Token& err) {
    for (;;) {
      while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) advance();
      if (i_ + 1 < src_.size() && src_[i_] == '/' && src_[i_ + 1] == '/') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
        continue;
      }
      if (block_comments_ && i_ + 1 < src_.size() && src_[i_] == '/' && src_[i_ + 1] == '*') {
        SourcePos start = pos_;
        advance();
        advance();
        bool closed = false;
        while (i_ < src_.size()) {
          if (i_ + 1 < src_.size() && src_[i_] == '*' && src_[i_ + 1] == '/') {
            advance();
            advance();
            closed = true;
            break;
          }
          advance();
        }
        if (!closed) {
          err = Token{Tok::Error, start, "unterminated block comment", 0};
          return false;
        }
        continue;
      }
      return true;
    }
  }

  Token lex() {
    Token err;
    if (!skip_ws_and_comments(err)) return err;
    SourcePos at = pos_;
    if (i_ >= src_.size()) return Token{Tok::End, at, "", 0};

    char c = src_[i_];
    auto one = [&](Tok k) {
      advance();
      return Token{k, at, std::string(1, c), 0};
    };

    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
        digits.push_back(src_[i_]);
        advance();
      }
      std::uint64_t v = 0;
      for (char d : digits) {
        if (v > (UINT64_MAX - static_cast<std::uint64_t>(d - '0')) / 10) {
          return Token{Tok::Error, at, "integer literal out of range", 0};
        }
        v = v * 10 + static_cast<std::uint64_t>(d - '0');
      }
      if (v > static_cast<std::uint64_t>(INT64_MAX)) {
        return Token{Tok::Error, at, "integer literal out of range", 0};
      }
      return Token{Tok::Int, at, digits, static_cast<std::int64_t>(v)};
    }

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (i_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_')) {
        name.push_back(src_[i_]);
        advance();
      }
      return Token{Tok::Ident, at, std::move(name), 0};
    }

    switch (c) {
      case '@': {
        advance();
        std::string name;
        while (i_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_')) {
          name.push_back(src_[i_]);
          advance();
        }
        if (name.empty()) return Token{Tok::Error, at, "bare '@'", 0};
        return Token{Tok::Tag, at, std::move(name), 0};
      }
      case '\\': {
        advance();
        std::string name;
        while (i_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_')) {
          name.push_back(src_[i_]);
          advance();
        }
        if (name == "result") return Token{Tok::Result, at, "\\result", 0};
        return Token{Tok::Error, at, "unknown escape '\\" + name + "'", 0};
      }
      case '+': return one(Tok::Plus);
      case '-': return one(Tok::Minus);
      case '*': return one(Tok::Star);
      case '/': return one(Tok::Slash);
      case '^': return one(Tok::Caret);
      case '(': return one(Tok::LParen);
      case ')': return one(Tok::RParen);
      case '{': return one(Tok::LBrace);
      case '}': return one(Tok::RBrace);
      case ';': return one(Tok::Semi);
      case ',': return one(Tok::Comma);
      case '=':
        advance();
        if (i_ < src_.size() && src_[i_] == '=') {
          advance();
          return Token{Tok::EqEq, at, "==", 0};
        }
        return Token{Tok::Assign, at, "=", 0};
      case '!':
        advance();
        if (i_ < src_.size() && src_[i_] == '=') {
          advance();
          return Token{Tok::Neq, at, "!=", 0};
        }
        return Token{Tok::Bang, at, "!", 0};
      case '<':
        advance();
        if (i_ < src_.size() && src_[i_] == '=') {
          advance();
          return Token{Tok::Le, at, "<=", 0};
        }
        return Token{Tok::Lt, at, "<", 0};
      case '>':
        advance();
        if (i_ < src_.size() && src_[i_] == '=') {
          advance();
          return Token{Tok::Ge, at, ">=", 0};
        }
        return Token{Tok::Gt, at, ">", 0};
      case '&':
        advance();
        if (i_ < src_.size() && src_[i_] == '&') {
          advance();
          return Token{Tok::AndAnd, at, "&&", 0};
        }
        return Token{Tok::Error, at, "stray '&' (use '&&')", 0};
      case '|':
        advance();
        if (i_ < src_.size() && src_[i_] == '|') {
          advance();
          return Token{Tok::OrOr, at, "||", 0};
        }
        return Token{Tok::Error, at, "stray '|' (use '||')", 0};
      default:
        advance();
        return Token{Tok::Error, at, std::string("unexpected character '") + c + "'", 0};
    }
  }

  std::string_view src_;
  bool block_comments_;
  size_t i_ = 0;
  SourcePos pos_{1, 1};
  std::optional<Token> lookahead_;
};

}  // namespace subspec
