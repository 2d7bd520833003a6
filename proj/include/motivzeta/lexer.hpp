#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace motivzeta {

// Shared tokenizer for the polynomial, scalar and class-expression grammars.
struct Token {
  enum Kind { Int, Ident, String, Punct, End } kind;
  std::string text;  // identifier name, string body, digits, or the punctuation char
  int line = 1;
  int column = 1;
};

std::vector<Token> tokenize(const std::string& src);

class TokenStream {
public:
  explicit TokenStream(const std::string& src) : toks_(tokenize(src)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_end() const { return peek().kind == Token::End; }
  bool is_punct(char c, std::size_t ahead = 0) const;
  bool accept(char c);
  void expect(char c);
  [[noreturn]] void fail(const std::string& msg) const;
  mpz_class expect_int();
  long expect_small_int();  // optionally signed, fits in long

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace motivzeta
