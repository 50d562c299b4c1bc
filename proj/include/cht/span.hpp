#ifndef CHT_SPAN_HPP
#define CHT_SPAN_HPP

#include <cstddef>
#include <string>

namespace cht {

// Half-open byte range into a source buffer.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool contains(const Span& inner) const {
    return begin <= inner.begin && inner.end <= end;
  }
  bool operator==(const Span&) const = default;
};

inline Span join(const Span& a, const Span& b) {
  return Span{a.begin < b.begin ? a.begin : b.begin,
              a.end > b.end ? a.end : b.end};
}

// 1-based line/column for diagnostics.
struct LineCol {
  std::size_t line = 1;
  std::size_t col = 1;
};

LineCol line_col(const std::string& text, std::size_t offset);

}  // namespace cht

#endif
