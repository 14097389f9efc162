#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mutagoal/source.hpp"

namespace mutagoal {

enum class Tok {
  Ident,
  Int,
  KwClass, KwField, KwMethod, KwReturns, KwSuite, KwTest,
  KwIf, KwElse, KwWhile, KwReturn, KwNew, KwSelf,
  KwTrue, KwFalse, KwAnd, KwOr, KwNot,
  KwAssertTrue, KwAssertFalse, KwAssertEqual,
  Assign,      // :=
  LParen, RParen, LBrace, RBrace, Comma, Dot,
  Plus, Minus, Star, Slash, Percent,
  EqEq, NotEq, Lt, Le, Gt, Ge,
  Newline,
  End,
};

const char* tok_name(Tok tok);

struct Token {
  Tok kind{};
  Span span;
  std::string text;          // identifier spelling
  std::int64_t int_value = 0;
};

/// Line-oriented tokenizer. '#' starts a comment running to end of line.
/// One Newline token is emitted per line that carried any tokens; blank and
/// comment-only lines produce nothing.
std::vector<Token> tokenize(const std::string& file, const std::string& text);

}  // namespace mutagoal
