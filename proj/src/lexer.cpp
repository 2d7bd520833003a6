#include "motivzeta/lexer.hpp"

#include <cctype>

#include "motivzeta/errors.hpp"

namespace motivzeta {

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::Int;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      t.kind = Token::Ident;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '"') throw ParseError("unterminated string", line, col);
      t.kind = Token::String;
      t.text = src.substr(i + 1, j - i - 1);
      advance(j + 1 - i);
    } else if (std::string("+-*/^()[]{},;|").find(static_cast<char>(c)) != std::string::npos) {
      t.kind = Token::Punct;
      t.text = std::string(1, static_cast<char>(c));
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line,
                       col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::End;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t p = pos_ + ahead;
  return p < toks_.size() ? toks_[p] : toks_.back();
}

const Token& TokenStream::next() {
  const Token& t = peek();
  if (pos_ + 1 < toks_.size()) ++pos_;
  return t;
}

bool TokenStream::is_punct(char c, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == Token::Punct && t.text[0] == c;
}

bool TokenStream::accept(char c) {
  if (!is_punct(c)) return false;
  next();
  return true;
}

void TokenStream::expect(char c) {
  if (!accept(c)) fail(std::string("expected '") + c + "'");
}

void TokenStream::fail(const std::string& msg) const {
  const Token& t = peek();
  std::string what = msg;
  if (t.kind == Token::End)
    what += " but found end of input";
  else
    what += " but found '" + t.text + "'";
  throw ParseError(what, t.line, t.column);
}

mpz_class TokenStream::expect_int() {
  if (peek().kind != Token::Int) fail("expected integer");
  return mpz_class(next().text);
}

long TokenStream::expect_small_int() {
  bool neg = accept('-');
  if (!neg) accept('+');
  mpz_class v = expect_int();
  if (!v.fits_slong_p()) fail("integer too large");
  long r = v.get_si();
  return neg ? -r : r;
}

}  // namespace motivzeta
