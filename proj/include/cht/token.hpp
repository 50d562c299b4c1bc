#ifndef CHT_TOKEN_HPP
#define CHT_TOKEN_HPP

#include <string>
#include <vector>

#include "cht/span.hpp"

namespace cht::syntax {

enum class TokenKind {
  Identifier,
  Keyword,
  Symbol,
  UniverseLiteral,
};

struct Token {
  TokenKind kind;
  std::string text;
  Span span;
};

// Token table:
//   keywords:  def axiom fun let in Sigma Id refl J fst snd Type Unit tt
//   symbols:   ( ) : := => -> , .
//   universe-literal: decimal digits (levels for Type)
//   identifiers: [A-Za-z_][A-Za-z0-9_']*
// Unicode aliases lexed as identifiers: ♯ -> Sharp, ♭ -> Flat.
// Comments: `-- line` and `{- block -}` (nesting), treated as whitespace.
std::vector<Token> tokenize(const std::string& text);

bool is_keyword(const std::string& s);

}  // namespace cht::syntax

#endif
