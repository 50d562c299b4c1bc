#include "cht/token.hpp"

#include <array>
#include <cctype>

#include "cht/errors.hpp"

namespace cht {

LineCol line_col(const std::string& text, std::size_t offset) {
  LineCol lc;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++lc.line;
      lc.col = 1;
    } else {
      ++lc.col;
    }
  }
  return lc;
}

}  // namespace cht

namespace cht::syntax {

namespace {

constexpr std::array kKeywords = {
    "def", "axiom", "fun", "let", "in",  "Sigma", "Id",
    "refl", "J",     "fst", "snd", "Type", "Unit",  "tt",
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool ident_cont(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '\'';
}

}  // namespace

bool is_keyword(const std::string& s) {
  for (const char* k : kKeywords)
    if (s == k) return true;
  return false;
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto peek = [&](std::size_t k) -> char {
    return i + k < n ? text[i + k] : '\0';
  };

  while (i < n) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    // line comment
    if (c == '-' && peek(1) == '-') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    // block comment, nesting
    if (c == '{' && peek(1) == '-') {
      std::size_t open = i;
      int depth = 1;
      i += 2;
      while (i < n && depth > 0) {
        if (text[i] == '{' && peek(1) == '-') {
          depth++;
          i += 2;
        } else if (text[i] == '-' && peek(1) == '}') {
          depth--;
          i += 2;
        } else {
          ++i;
        }
      }
      if (depth > 0) throw LexError(open, "unterminated block comment");
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < n && ident_cont(static_cast<unsigned char>(text[i]))) ++i;
      std::string s = text.substr(start, i - start);
      out.push_back(Token{is_keyword(s) ? TokenKind::Keyword
                                        : TokenKind::Identifier,
                          std::move(s), Span{start, i}});
      continue;
    }
    if (std::isdigit(c)) {
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back(Token{TokenKind::UniverseLiteral,
                          text.substr(start, i - start), Span{start, i}});
      continue;
    }
    // Unicode aliases: U+266F MUSIC SHARP SIGN, U+266D MUSIC FLAT SIGN
    if (c == 0xE2 && static_cast<unsigned char>(peek(1)) == 0x99) {
      unsigned char b3 = static_cast<unsigned char>(peek(2));
      if (b3 == 0xAF) {
        out.push_back(
            Token{TokenKind::Identifier, "Sharp", Span{start, start + 3}});
        i += 3;
        continue;
      }
      if (b3 == 0xAD) {
        out.push_back(
            Token{TokenKind::Identifier, "Flat", Span{start, start + 3}});
        i += 3;
        continue;
      }
    }
    // multi-char symbols first
    if (c == ':' && peek(1) == '=') {
      out.push_back(Token{TokenKind::Symbol, ":=", Span{start, start + 2}});
      i += 2;
      continue;
    }
    if (c == '=' && peek(1) == '>') {
      out.push_back(Token{TokenKind::Symbol, "=>", Span{start, start + 2}});
      i += 2;
      continue;
    }
    if (c == '-' && peek(1) == '>') {
      out.push_back(Token{TokenKind::Symbol, "->", Span{start, start + 2}});
      i += 2;
      continue;
    }
    if (c == '(' || c == ')' || c == ':' || c == ',' || c == '.') {
      out.push_back(Token{TokenKind::Symbol, std::string(1, text[i]),
                          Span{start, start + 1}});
      ++i;
      continue;
    }
    throw LexError(start, std::string("unrecognized character '") +
                              text[i] + "'");
  }
  return out;
}

}  // namespace cht::syntax
