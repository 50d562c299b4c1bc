#ifndef CHT_ERRORS_HPP
#define CHT_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "cht/span.hpp"

namespace cht {

struct LexError : std::runtime_error {
  std::size_t offset;
  LexError(std::size_t offset, const std::string& msg)
      : std::runtime_error(msg), offset(offset) {}
};

struct ParseError : std::runtime_error {
  Span span;
  std::string expected;
  ParseError(Span span, const std::string& expected, const std::string& msg)
      : std::runtime_error(msg), span(span), expected(expected) {}
};

struct DuplicateName : ParseError {
  std::string name;
  DuplicateName(Span span, const std::string& name)
      : ParseError(span, "fresh declaration name", "duplicate name: " + name),
        name(name) {}
};

enum class TypeErrorKind {
  Mismatch,
  NotAFunction,
  NotInferable,
  Unbound,
  UniverseError,
};

const char* to_string(TypeErrorKind k);

// Carried by exception through the kernel; `expected`/`found` are printed
// core terms when the error has both sides.
struct TypeError : std::runtime_error {
  TypeErrorKind kind;
  std::optional<std::string> expected;
  std::optional<std::string> found;
  Span span;
  std::string decl_name;  // filled in by check_decl

  TypeError(TypeErrorKind kind, const std::string& msg, Span span,
            std::optional<std::string> expected = std::nullopt,
            std::optional<std::string> found = std::nullopt)
      : std::runtime_error(msg),
        kind(kind),
        expected(std::move(expected)),
        found(std::move(found)),
        span(span) {}
};

}  // namespace cht

#endif
