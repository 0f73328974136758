// strings.h --- small string helpers private to the library.

#ifndef HMMTAG_SRC_STRINGS_H_
#define HMMTAG_SRC_STRINGS_H_

#include <string>
#include <string_view>
#include <vector>

namespace hmmtag::internal {

inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

inline bool IsBlank(std::string_view s) {
  for (char c : s) {
    if (!IsSpace(c)) return false;
  }
  return true;
}

inline void StripCarriageReturn(std::string &line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

// Splits on runs of ASCII whitespace; no empty pieces.
inline std::vector<std::string_view> SplitWhitespace(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && IsSpace(s[i])) ++i;
    size_t j = i;
    while (j < s.size() && !IsSpace(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Splits on every occurrence of `sep`, keeping empty pieces.
inline std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  for (;;) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace hmmtag::internal

#endif  // HMMTAG_SRC_STRINGS_H_
