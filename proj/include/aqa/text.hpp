#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace aqa {

// Half-open range of code-point offsets into a source string.
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool overlaps(const CharSpan& other) const { return begin < other.end && other.begin < end; }
  friend auto operator<=>(const CharSpan&, const CharSpan&) = default;
};

struct Token {
  std::string surface;
  std::string normalized;
  CharSpan span;
  bool punctuation = false;

  friend bool operator==(const Token&, const Token&) = default;
};

// Removes diacritics (U+064B..U+0652) and tatweel, unifies alef variants and
// alef maqsura, maps Arabic-Indic digits to ASCII, collapses whitespace runs
// and trims. Every other character is kept as is.
std::string normalize(std::string_view text);

bool is_punctuation(char32_t cp);

// Whitespace/punctuation tokenizer. Punctuation marks become one-character
// tokens, except '.', ',', ':' and U+066B between two digits, which stay
// inside the number.
std::vector<Token> tokenize(std::string_view text);

// Normalized forms of the non-punctuation tokens with non-empty normalization.
std::vector<std::string> word_forms(std::string_view text);

// Strips one definite-article prefix, or failing that one suffix, as long
// as at least two characters remain. Input is normalized first.
std::string light_stem(std::string_view word);
inline std::string light_stem(const Token& token) { return light_stem(token.normalized); }

std::string join(std::span<const std::string> parts, std::string_view sep = " ");

// Reads a one-entry-per-line UTF-8 list. Blank lines and lines starting with
// '#' are skipped; entries are trimmed but otherwise untouched.
std::vector<std::string> read_list_file(const std::filesystem::path& path);

class Stopwords {
 public:
  Stopwords() = default;
  Stopwords(std::initializer_list<std::string_view> words);

  static Stopwords load(const std::filesystem::path& path);

  void add(std::string_view word);
  bool contains(std::string_view normalized) const;
  bool is_stopword(const Token& token) const { return contains(token.normalized); }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

}  // namespace aqa
