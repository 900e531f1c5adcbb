#include "aqa/html.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <optional>
#include <unordered_map>

#include "aqa/unicode.hpp"

namespace aqa {

namespace {

using unicode::is_ascii_alpha;
using unicode::is_ascii_digit;

constexpr std::array<std::string_view, 4> kRawTextElements = {"script", "style", "noscript",
                                                               "template"};

constexpr std::array<std::string_view, 42> kBlockElements = {
    "address", "article", "aside",   "blockquote", "br",     "caption", "dd",      "details",
    "div",     "dl",      "dt",      "fieldset",   "figcaption", "figure", "footer", "form",
    "h1",      "h2",      "h3",      "h4",         "h5",     "h6",      "header",  "hr",
    "li",      "main",    "nav",     "ol",         "option", "p",       "pre",     "section",
    "summary", "table",   "tbody",   "td",         "tfoot",  "th",      "thead",   "title",
    "tr",      "ul"};

const std::unordered_map<std::string_view, char32_t>& named_entities() {
  static const std::unordered_map<std::string_view, char32_t> table = {
      {"amp", U'&'},          {"lt", U'<'},           {"gt", U'>'},
      {"quot", U'"'},         {"apos", U'\''},        {"nbsp", U'\u00A0'},
      {"laquo", U'\u00AB'},   {"raquo", U'\u00BB'},   {"copy", U'\u00A9'},
      {"reg", U'\u00AE'},     {"hellip", U'\u2026'},  {"mdash", U'\u2014'},
      {"ndash", U'\u2013'},   {"lsquo", U'\u2018'},   {"rsquo", U'\u2019'},
      {"ldquo", U'\u201C'},   {"rdquo", U'\u201D'},   {"bull", U'\u2022'},
      {"middot", U'\u00B7'},  {"shy", U'\u00AD'},     {"zwnj", U'\u200C'},
      {"zwj", U'\u200D'},     {"lrm", U'\u200E'},     {"rlm", U'\u200F'},
  };
  return table;
}

char32_t lower(char32_t c) { return (c >= U'A' && c <= U'Z') ? c + 32 : c; }

bool starts_with_ci(std::u32string_view s, std::size_t pos, std::u32string_view prefix) {
  if (pos + prefix.size() > s.size()) return false;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    if (lower(s[pos + k]) != prefix[k]) return false;
  }
  return true;
}

std::size_t find_from(std::u32string_view s, std::size_t pos, std::u32string_view needle) {
  const auto at = s.find(needle, pos);
  return at == std::u32string_view::npos ? s.size() : at;
}

std::u32string widen(std::string_view ascii) { return {ascii.begin(), ascii.end()}; }

template <std::size_t N>
bool one_of(const std::array<std::string_view, N>& set, std::string_view name) {
  return std::find(set.begin(), set.end(), name) != set.end();
}

class Stripper {
 public:
  explicit Stripper(std::string_view html) : in_(unicode::decode(html)) {}

  std::u32string run() {
    while (pos_ < in_.size()) {
      const char32_t c = in_[pos_];
      if (c == U'<' && markup()) continue;
      if (in_head_) {
        ++pos_;
      } else if (c == U'&') {
        reference();
      } else {
        out_.push_back(unicode::is_space(c) ? U' ' : c);
        ++pos_;
      }
    }
    return std::move(out_);
  }

 private:
  // Consumes markup starting at '<'; false when the '<' is literal text.
  bool markup() {
    const std::u32string_view s(in_);
    if (starts_with_ci(s, pos_, U"<!--")) {
      pos_ = std::min(s.size(), find_from(s, pos_ + 4, U"-->") + 3);
      return true;
    }
    if (starts_with_ci(s, pos_, U"<![cdata[")) {
      pos_ = std::min(s.size(), find_from(s, pos_ + 9, U"]]>") + 3);
      return true;
    }
    if (pos_ + 1 < s.size() && (s[pos_ + 1] == U'!' || s[pos_ + 1] == U'?')) {
      pos_ = std::min(s.size(), find_from(s, pos_, U">") + 1);
      return true;
    }

    const bool closing = pos_ + 1 < s.size() && s[pos_ + 1] == U'/';
    std::size_t name_begin = pos_ + (closing ? 2 : 1);
    if (name_begin >= s.size() || !is_ascii_alpha(s[name_begin])) return false;

    std::size_t name_end = name_begin;
    std::string name;
    while (name_end < s.size() && (is_ascii_alpha(s[name_end]) || is_ascii_digit(s[name_end]))) {
      name.push_back(static_cast<char>(lower(s[name_end])));
      ++name_end;
    }
    pos_ = tag_end(name_end);

    if (!closing && one_of(kRawTextElements, name)) {
      // Body runs to the matching end tag, or to the end of input.
      const auto close = widen("</" + name);
      std::size_t k = pos_;
      while (k < s.size() && !starts_with_ci(s, k, close)) ++k;
      pos_ = k;
      return true;
    }
    if (name == "head") in_head_ = !closing;
    if (name == "body" && !closing) in_head_ = false;
    if (one_of(kBlockElements, name)) out_.push_back(U'\n');
    return true;
  }

  // Position just past the '>' closing a tag whose name ends at `from`.
  std::size_t tag_end(std::size_t from) const {
    const std::u32string_view s(in_);
    char32_t quote = 0;
    for (std::size_t k = from; k < s.size(); ++k) {
      const char32_t c = s[k];
      if (quote != 0) {
        if (c == quote) quote = 0;
      } else if (c == U'"' || c == U'\'') {
        quote = c;
      } else if (c == U'>') {
        return k + 1;
      }
    }
    // Unbalanced quote: fall back to the first '>' at all.
    const auto gt = s.find(U'>', from);
    return gt == std::u32string_view::npos ? s.size() : gt + 1;
  }

  void reference() {
    const std::u32string_view s(in_);
    const auto semi = s.find(U';', pos_ + 1);
    if (semi == std::u32string_view::npos || semi - pos_ > 12 || semi == pos_ + 1) {
      out_.push_back(U'&');
      ++pos_;
      return;
    }
    std::string body;
    for (std::size_t k = pos_ + 1; k < semi; ++k) {
      if (s[k] > 0x7F) {
        out_.push_back(U'&');
        ++pos_;
        return;
      }
      body.push_back(static_cast<char>(s[k]));
    }

    std::optional<char32_t> cp;
    if (body.front() == '#') {
      const bool hex = body.size() > 1 && (body[1] == 'x' || body[1] == 'X');
      const char* first = body.data() + (hex ? 2 : 1);
      const char* last = body.data() + body.size();
      std::uint32_t value = 0;
      const auto [ptr, ec] = std::from_chars(first, last, value, hex ? 16 : 10);
      if (ec == std::errc() && ptr == last && first != last) {
        const bool valid = value != 0 && value <= 0x10FFFF && !(value >= 0xD800 && value <= 0xDFFF);
        cp = valid ? static_cast<char32_t>(value) : unicode::kReplacement;
      }
    } else if (auto it = named_entities().find(body); it != named_entities().end()) {
      cp = it->second;
    }

    if (!cp) {
      out_.push_back(U'&');
      ++pos_;
      return;
    }
    out_.push_back(unicode::is_space(*cp) ? U' ' : *cp);
    pos_ = semi + 1;
  }

  std::u32string in_;
  std::u32string out_;
  std::size_t pos_ = 0;
  bool in_head_ = false;
};

// Collapses whitespace inside each line, trims lines, keeps at most one
// blank line in a row and drops leading/trailing blank lines.
std::u32string layout(std::u32string_view raw) {
  std::u32string out;
  std::size_t blank_run = 0;
  bool any = false;
  std::size_t start = 0;
  while (start <= raw.size()) {
    auto end = raw.find(U'\n', start);
    if (end == std::u32string_view::npos) end = raw.size();

    std::u32string line;
    bool space = false;
    for (std::size_t k = start; k < end; ++k) {
      const char32_t c = raw[k];
      if (unicode::is_space(c)) {
        space = !line.empty();
        continue;
      }
      if (space) line.push_back(U' ');
      space = false;
      line.push_back(c);
      if (c == U'<' && k + 1 < end && is_ascii_alpha(raw[k + 1])) line.push_back(U' ');
    }

    if (line.empty()) {
      ++blank_run;
    } else {
      if (any) out += blank_run > 0 ? U"\n\n" : U"\n";
      out += line;
      any = true;
      blank_run = 0;
    }
    start = end + 1;
  }
  return out;
}

}  // namespace

std::string html_to_text(std::string_view html) {
  Stripper stripper(html);
  return unicode::encode(layout(stripper.run()));
}

}  // namespace aqa
