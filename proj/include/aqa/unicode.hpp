#pragma once

#include <string>
#include <string_view>

namespace aqa::unicode {

inline constexpr char32_t kReplacement = U'\uFFFD';

// Decodes UTF-8. Malformed sequences become U+FFFD, one per offending byte.
std::u32string decode(std::string_view utf8);

std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);

bool is_valid(std::string_view utf8);

// Number of code points in a UTF-8 string.
std::size_t length(std::string_view utf8);

bool is_space(char32_t cp);

inline bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }
inline bool is_ascii_alpha(char32_t cp) {
  return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
}

}  // namespace aqa::unicode
