#include "aqa/text.hpp"

#include <array>
#include <fstream>

#include "aqa/errors.hpp"
#include "aqa/unicode.hpp"

namespace aqa {

namespace {

constexpr char32_t kTatweel = U'\u0640';
constexpr char32_t kAlef = U'ا';
constexpr char32_t kYeh = U'ي';

bool is_diacritic(char32_t cp) { return cp >= U'\u064B' && cp <= U'\u0652'; }

bool is_digit(char32_t cp) {
  return unicode::is_ascii_digit(cp) || (cp >= U'\u0660' && cp <= U'\u0669');
}

// Character-level part of normalize(); whitespace is left untouched.
char32_t fold(char32_t cp) {
  switch (cp) {
    case U'\u0623':  // أ
    case U'\u0625':  // إ
    case U'\u0622':  // آ
      return kAlef;
    case U'\u0649':  // ى
      return kYeh;
    default:
      break;
  }
  if (cp >= U'\u0660' && cp <= U'\u0669') return U'0' + (cp - U'\u0660');
  return cp;
}

std::u32string normalize32(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char32_t cp : text) {
    if (is_diacritic(cp) || cp == kTatweel) continue;
    if (unicode::is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(fold(cp));
  }
  return out;
}

bool separates_number(char32_t cp) {
  return cp == U'.' || cp == U',' || cp == U':' || cp == U'\u066B';
}

constexpr std::array<std::u32string_view, 6> kPrefixes = {
    U"وال",
    U"بال",
    U"كال",
    U"فال",
    U"ال",
    U"لل",
};

constexpr std::array<std::u32string_view, 6> kSuffixes = {
    U"ات",
    U"ون",
    U"ين",
    U"ها",
    U"هم",
    U"ة",
};

constexpr std::size_t kMinStem = 2;

std::string trim(std::string_view s) {
  const auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_ws(s[b])) ++b;
  while (e > b && is_ws(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::string normalize(std::string_view text) {
  return unicode::encode(normalize32(unicode::decode(text)));
}

bool is_punctuation(char32_t cp) {
  switch (cp) {
    case U'؟':
    case U'?':
    case U'.':
    case U'؛':
    case U'،':
    case U'!':
    case U':':
    case U'(':
    case U')':
    case U'«':
    case U'»':
    case U',':
    case U';':
      return true;
    default:
      return false;
  }
}

std::vector<Token> tokenize(std::string_view text) {
  const std::u32string chars = unicode::decode(text);
  std::vector<Token> tokens;

  auto emit = [&](std::size_t begin, std::size_t end, bool punct) {
    Token t;
    t.surface = unicode::encode(std::u32string_view(chars).substr(begin, end - begin));
    t.normalized = normalize(t.surface);
    t.span = {begin, end};
    t.punctuation = punct;
    tokens.push_back(std::move(t));
  };

  std::size_t i = 0;
  const std::size_t n = chars.size();
  while (i < n) {
    const char32_t cp = chars[i];
    if (unicode::is_space(cp)) {
      ++i;
      continue;
    }
    if (is_punctuation(cp)) {
      emit(i, i + 1, true);
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < n && !unicode::is_space(chars[i])) {
      if (is_punctuation(chars[i])) {
        const bool inside_number = separates_number(chars[i]) && i > start &&
                                   is_digit(chars[i - 1]) && i + 1 < n && is_digit(chars[i + 1]);
        if (!inside_number) break;
      }
      ++i;
    }
    emit(start, i, false);
  }
  return tokens;
}

std::vector<std::string> word_forms(std::string_view text) {
  std::vector<std::string> out;
  for (auto& t : tokenize(text)) {
    if (!t.punctuation && !t.normalized.empty()) out.push_back(std::move(t.normalized));
  }
  return out;
}

std::string light_stem(std::string_view word) {
  const std::u32string w = unicode::decode(normalize(word));
  const std::u32string_view view(w);
  for (auto prefix : kPrefixes) {
    if (view.starts_with(prefix) && view.size() - prefix.size() >= kMinStem) {
      return unicode::encode(view.substr(prefix.size()));
    }
  }
  for (auto suffix : kSuffixes) {
    if (view.ends_with(suffix) && view.size() - suffix.size() >= kMinStem) {
      return unicode::encode(view.substr(0, view.size() - suffix.size()));
    }
  }
  return unicode::encode(view);
}

std::string join(std::span<const std::string> parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> read_list_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    std::string entry = trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    entries.push_back(std::move(entry));
  }
  return entries;
}

Stopwords::Stopwords(std::initializer_list<std::string_view> words) {
  for (auto w : words) add(w);
}

Stopwords Stopwords::load(const std::filesystem::path& path) {
  Stopwords sw;
  for (const auto& entry : read_list_file(path)) sw.add(entry);
  return sw;
}

void Stopwords::add(std::string_view word) {
  auto n = normalize(word);
  if (!n.empty()) words_.insert(std::move(n));
}

bool Stopwords::contains(std::string_view normalized) const {
  if (normalized.empty()) return false;
  return words_.contains(std::string(normalized));
}

}  // namespace aqa
