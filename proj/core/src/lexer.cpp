#include "lexer.hpp"

#include <cctype>
#include <map>

namespace mutagoal {

const char* tok_name(Tok tok) {
  switch (tok) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::KwClass: return "'class'";
    case Tok::KwField: return "'field'";
    case Tok::KwMethod: return "'method'";
    case Tok::KwReturns: return "'returns'";
    case Tok::KwSuite: return "'suite'";
    case Tok::KwTest: return "'test'";
    case Tok::KwIf: return "'if'";
    case Tok::KwElse: return "'else'";
    case Tok::KwWhile: return "'while'";
    case Tok::KwReturn: return "'return'";
    case Tok::KwNew: return "'new'";
    case Tok::KwSelf: return "'self'";
    case Tok::KwTrue: return "'true'";
    case Tok::KwFalse: return "'false'";
    case Tok::KwAnd: return "'and'";
    case Tok::KwOr: return "'or'";
    case Tok::KwNot: return "'not'";
    case Tok::KwAssertTrue: return "'assertTrue'";
    case Tok::KwAssertFalse: return "'assertFalse'";
    case Tok::KwAssertEqual: return "'assertEqual'";
    case Tok::Assign: return "':='";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Percent: return "'%'";
    case Tok::EqEq: return "'=='";
    case Tok::NotEq: return "'!='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of file";
  }
  return "?";
}

namespace {

const std::map<std::string, Tok>& keywords() {
  static const std::map<std::string, Tok> table = {
      {"class", Tok::KwClass},
      {"field", Tok::KwField},
      {"method", Tok::KwMethod},
      {"returns", Tok::KwReturns},
      {"suite", Tok::KwSuite},
      {"test", Tok::KwTest},
      {"if", Tok::KwIf},
      {"else", Tok::KwElse},
      {"while", Tok::KwWhile},
      {"return", Tok::KwReturn},
      {"new", Tok::KwNew},
      {"self", Tok::KwSelf},
      {"true", Tok::KwTrue},
      {"false", Tok::KwFalse},
      {"and", Tok::KwAnd},
      {"or", Tok::KwOr},
      {"not", Tok::KwNot},
      {"assertTrue", Tok::KwAssertTrue},
      {"assertFalse", Tok::KwAssertFalse},
      {"assertEqual", Tok::KwAssertEqual},
  };
  return table;
}

}  // namespace

std::vector<Token> tokenize(const std::string& file, const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  bool line_has_tokens = false;

  auto at = [&](std::size_t off = 0) -> char {
    return i + off < text.size() ? text[i + off] : '\0';
  };
  auto push = [&](Tok kind, int start_col, std::string spelling = {},
                  std::int64_t value = 0) {
    Token tok;
    tok.kind = kind;
    tok.span = Span{line, start_col, line, col};
    tok.text = std::move(spelling);
    tok.int_value = value;
    out.push_back(std::move(tok));
    if (kind != Tok::Newline) line_has_tokens = true;
  };

  while (i < text.size()) {
    char c = at();
    if (c == '\n') {
      if (line_has_tokens) {
        push(Tok::Newline, col);
        line_has_tokens = false;
      }
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && at() != '\n') {
        ++i;
        ++col;
      }
      continue;
    }

    int start_col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(at()))) {
        digits += at();
        ++i;
        ++col;
      }
      std::int64_t value = 0;
      try {
        value = std::stoll(digits);
      } catch (const std::out_of_range&) {
        throw ParseError(file, Span{line, start_col, line, col},
                         "integer literal out of range: " + digits);
      }
      push(Tok::Int, start_col, digits, value);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (std::isalnum(static_cast<unsigned char>(at())) || at() == '_') {
        word += at();
        ++i;
        ++col;
      }
      auto kw = keywords().find(word);
      if (kw != keywords().end()) {
        push(kw->second, start_col, word);
      } else {
        push(Tok::Ident, start_col, word);
      }
      continue;
    }

    auto two = [&](char a, char b) { return c == a && at(1) == b; };
    if (two(':', '=')) { i += 2; col += 2; push(Tok::Assign, start_col); continue; }
    if (two('=', '=')) { i += 2; col += 2; push(Tok::EqEq, start_col); continue; }
    if (two('!', '=')) { i += 2; col += 2; push(Tok::NotEq, start_col); continue; }
    if (two('<', '=')) { i += 2; col += 2; push(Tok::Le, start_col); continue; }
    if (two('>', '=')) { i += 2; col += 2; push(Tok::Ge, start_col); continue; }

    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case ',': kind = Tok::Comma; break;
      case '.': kind = Tok::Dot; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '%': kind = Tok::Percent; break;
      case '<': kind = Tok::Lt; break;
      case '>': kind = Tok::Gt; break;
      default:
        throw ParseError(file, Span{line, start_col, line, col + 1},
                         std::string("unexpected character '") + c + "'");
    }
    ++i;
    ++col;
    push(kind, start_col);
  }

  if (line_has_tokens) push(Tok::Newline, col);
  Token end;
  end.kind = Tok::End;
  end.span = Span{line, col, line, col};
  out.push_back(end);
  return out;
}

}  // namespace mutagoal
