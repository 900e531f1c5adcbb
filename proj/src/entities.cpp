#include "aqa/entities.hpp"

#include <algorithm>
#include <optional>
#include <regex>
#include <utility>

#include "aqa/unicode.hpp"

namespace aqa {

namespace {

constexpr std::size_t kMaxMonthTokens = 3;

bool all_ascii_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Digits with inner '.', ',', ':' or U+066B separators, as kept by tokenize().
bool is_number(std::string_view s) {
  if (s.empty() || !(s.front() >= '0' && s.front() <= '9') || !(s.back() >= '0' && s.back() <= '9')) {
    return false;
  }
  const auto chars = unicode::decode(s);
  return std::all_of(chars.begin(), chars.end(), [](char32_t c) {
    return unicode::is_ascii_digit(c) || c == U'.' || c == U',' || c == U':' || c == U'٫';
  });
}

bool is_numeric_date(const std::string& s) {
  static const std::regex pattern(R"(\d{1,2}[/.\-]\d{1,2}[/.\-](\d{2}|\d{4}))");
  return std::regex_match(s, pattern);
}

struct Candidate {
  AnswerType type;
  std::size_t first;  // token indices, inclusive
  std::size_t last;
};

class Scanner {
 public:
  Scanner(std::string_view text, const Gazetteer& gazetteer, const PatternLexicon& patterns)
      : chars_(unicode::decode(text)), gazetteer_(gazetteer), patterns_(patterns) {
    for (auto& t : tokenize(text)) {
      if (!t.normalized.empty()) tokens_.push_back(std::move(t));
    }
  }

  std::vector<Candidate> candidates() const {
    std::vector<Candidate> out;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      dictionary_matches(i, out);
      month_match(i, out);
      number_matches(i, out);
    }
    return out;
  }

  EntityMention mention(const Candidate& c) const {
    const CharSpan span{tokens_[c.first].span.begin, tokens_[c.last].span.end};
    return {unicode::encode(std::u32string_view(chars_).substr(span.begin, span.size())), c.type,
            span};
  }

 private:
  std::optional<std::string> phrase(std::size_t first, std::size_t n) const {
    if (first + n > tokens_.size()) return std::nullopt;
    std::string out;
    for (std::size_t k = first; k < first + n; ++k) {
      if (tokens_[k].punctuation) return std::nullopt;
      if (k > first) out.push_back(' ');
      out += tokens_[k].normalized;
    }
    return out;
  }

  bool is_unit(std::size_t i) const {
    return i < tokens_.size() && !tokens_[i].punctuation &&
           patterns_.units.contains(tokens_[i].normalized);
  }

  void dictionary_matches(std::size_t i, std::vector<Candidate>& out) const {
    for (auto type : {AnswerType::Person, AnswerType::Location, AnswerType::Organization}) {
      for (std::size_t n = 1; n <= Gazetteer::kMaxNgram; ++n) {
        if (auto p = phrase(i, n); p && gazetteer_.contains(type, *p)) {
          out.push_back({type, i, i + n - 1});
        }
      }
    }
  }

  // Month name, optionally preceded by a day and followed by a year.
  void month_match(std::size_t i, std::vector<Candidate>& out) const {
    for (std::size_t n = kMaxMonthTokens; n >= 1; --n) {
      const auto p = phrase(i, n);
      if (!p || !patterns_.months.contains(*p)) continue;
      std::size_t first = i;
      std::size_t last = i + n - 1;
      if (first > 0) {
        const auto& prev = tokens_[first - 1];
        if (all_ascii_digits(prev.normalized) && prev.normalized.size() <= 2) --first;
      }
      if (last + 1 < tokens_.size()) {
        const auto& next = tokens_[last + 1].normalized;
        if (all_ascii_digits(next) && next.size() >= 3 && next.size() <= 4) ++last;
      }
      out.push_back({AnswerType::Date, first, last});
      return;
    }
  }

  void number_matches(std::size_t i, std::vector<Candidate>& out) const {
    const auto& t = tokens_[i];
    if (t.punctuation) return;
    if (is_numeric_date(t.normalized)) {
      out.push_back({AnswerType::Date, i, i});
      return;
    }
    if (!is_number(t.normalized)) return;
    const bool has_unit = is_unit(i + 1);
    out.push_back({AnswerType::NumericExpression, i, has_unit ? i + 1 : i});
    const auto len = t.normalized.size();
    if (all_ascii_digits(t.normalized) && len >= 3 && len <= 4 && !has_unit) {
      out.push_back({AnswerType::Date, i, i});
    }
  }

  std::u32string chars_;
  std::vector<Token> tokens_;
  const Gazetteer& gazetteer_;
  const PatternLexicon& patterns_;
};

std::unordered_set<std::string> load_set(const std::filesystem::path& path) {
  std::unordered_set<std::string> out;
  for (const auto& entry : read_list_file(path)) {
    auto n = normalize(entry);
    if (!n.empty()) out.insert(std::move(n));
  }
  return out;
}

}  // namespace

Gazetteer Gazetteer::load(const std::filesystem::path& dir) {
  Gazetteer g;
  g.person_ = load_set(dir / "gazetteer_person.txt");
  g.location_ = load_set(dir / "gazetteer_location.txt");
  g.organization_ = load_set(dir / "gazetteer_organization.txt");
  return g;
}

const std::unordered_set<std::string>* Gazetteer::names(AnswerType type) const {
  switch (type) {
    case AnswerType::Person:
      return &person_;
    case AnswerType::Location:
      return &location_;
    case AnswerType::Organization:
      return &organization_;
    default:
      return nullptr;
  }
}

std::unordered_set<std::string>* Gazetteer::names(AnswerType type) {
  return const_cast<std::unordered_set<std::string>*>(std::as_const(*this).names(type));
}

void Gazetteer::add(AnswerType type, std::string_view name) {
  auto* set = names(type);
  if (set == nullptr) return;
  auto n = normalize(name);
  if (!n.empty()) set->insert(std::move(n));
}

bool Gazetteer::contains(AnswerType type, std::string_view normalized) const {
  const auto* set = names(type);
  return set != nullptr && set->contains(std::string(normalized));
}

std::size_t Gazetteer::size(AnswerType type) const {
  const auto* set = names(type);
  return set == nullptr ? 0 : set->size();
}

PatternLexicon PatternLexicon::load(const std::filesystem::path& dir) {
  return {load_set(dir / "units.txt"), load_set(dir / "months.txt")};
}

std::vector<EntityMention> EntityRecognizer::recognize(std::string_view text) const {
  const Scanner scanner(text, gazetteer_, patterns_);
  std::vector<EntityMention> all;
  for (const auto& c : scanner.candidates()) all.push_back(scanner.mention(c));

  std::stable_sort(all.begin(), all.end(), [](const EntityMention& a, const EntityMention& b) {
    if (a.span.size() != b.span.size()) return a.span.size() > b.span.size();
    return a.span < b.span;
  });

  std::vector<EntityMention> kept;
  for (auto& m : all) {
    const bool clash = std::any_of(kept.begin(), kept.end(), [&](const EntityMention& k) {
      return k.type == m.type && k.span.overlaps(m.span);
    });
    if (!clash) kept.push_back(std::move(m));
  }

  std::sort(kept.begin(), kept.end(), [](const EntityMention& a, const EntityMention& b) {
    if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
    if (a.type != b.type) return a.type < b.type;
    return a.span.end < b.span.end;
  });
  return kept;
}

bool EntityRecognizer::contains_type(std::string_view text, AnswerType type) const {
  const auto mentions = recognize(text);
  return std::any_of(mentions.begin(), mentions.end(),
                     [&](const EntityMention& m) { return m.type == type; });
}

}  // namespace aqa
