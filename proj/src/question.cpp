#include "aqa/question.hpp"

#include <algorithm>
#include <unordered_set>

#include "aqa/errors.hpp"

namespace aqa {

std::string_view to_string(AnswerType type) {
  switch (type) {
    case AnswerType::Person:
      return "PERSON";
    case AnswerType::Location:
      return "LOCATION";
    case AnswerType::Date:
      return "DATE";
    case AnswerType::Organization:
      return "ORGANIZATION";
    case AnswerType::NumericExpression:
      return "NUMERIC_EXPRESSION";
  }
  return "PERSON";
}

std::optional<AnswerType> parse_answer_type(std::string_view name) {
  for (auto t : kAnswerTypes) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

std::string_view to_string(Source source) {
  switch (source) {
    case Source::Trec:
      return "TREC";
    case Source::Clef:
      return "CLEF";
    case Source::Forum:
      return "FORUM";
    case Source::Faq:
      return "FAQ";
  }
  return "FORUM";
}

std::optional<Source> parse_source(std::string_view name) {
  for (auto s : kSources) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Domain domain) {
  switch (domain) {
    case Domain::WorldNews:
      return "WORLD_NEWS";
    case Domain::HistoryIslam:
      return "HISTORY_ISLAM";
    case Domain::DiscoveriesCulture:
      return "DISCOVERIES_CULTURE";
    case Domain::Sport:
      return "SPORT";
    case Domain::HealthMedicine:
      return "HEALTH_MEDICINE";
  }
  return "WORLD_NEWS";
}

std::optional<Domain> parse_domain(std::string_view name) {
  for (auto d : kDomains) {
    if (to_string(d) == name) return d;
  }
  return std::nullopt;
}

namespace {

// Keys are normalized: أين -> اين, متى -> متي.
constexpr std::array<ParticleMapping, 6> kParticles = {{
    {"من", AnswerType::Person},
    {"اين", AnswerType::Location},
    {"متي", AnswerType::Date},
    {"ماهي", AnswerType::Organization},
    {"ماهو", AnswerType::Organization},
    {"كم", AnswerType::NumericExpression},
}};

constexpr std::string_view kWho = "من";

bool is_question_mark(const Token& t) {
  return t.punctuation && (t.surface == "؟" || t.surface == "?");
}

bool is_content(const Token& t, const Stopwords& stopwords) {
  return !t.punctuation && !t.normalized.empty() && !stopwords.is_stopword(t);
}

struct Parsed {
  std::vector<Token> tokens;
  Interrogative interrogative;
};

Parsed parse(std::string_view text) {
  Parsed p;
  p.tokens = tokenize(text);
  if (p.tokens.size() < 2) {
    throw InvalidQuestion("question must contain at least two tokens: '" + std::string(text) + "'");
  }
  for (std::size_t i = 0; i < p.tokens.size(); ++i) {
    const auto& t = p.tokens[i];
    if (t.punctuation) continue;
    if (i > 0 && t.normalized == kWho) continue;
    if (auto type = lookup_particle(t.normalized)) {
      p.interrogative = Interrogative{t, i, *type};
      return p;
    }
  }
  throw NoInterrogativeFound(std::string(text));
}

std::vector<Token> strip(const Parsed& p) {
  std::vector<Token> out;
  const std::size_t last = p.tokens.size() - 1;
  for (std::size_t i = 0; i < p.tokens.size(); ++i) {
    if (i == p.interrogative.index) continue;
    if (i == last && is_question_mark(p.tokens[i])) continue;
    out.push_back(p.tokens[i]);
  }
  return out;
}

std::vector<std::string> keywords_of(const Parsed& p, const Stopwords& stopwords,
                                     std::string_view text) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < p.tokens.size(); ++i) {
    const auto& t = p.tokens[i];
    if (i == p.interrogative.index || !is_content(t, stopwords)) continue;
    if (seen.insert(t.normalized).second) out.push_back(t.normalized);
  }
  if (out.empty()) throw EmptyKeywords(std::string(text));
  return out;
}

std::vector<std::string> focus_of(const Parsed& p, const Stopwords& stopwords,
                                  const MorphAnalyzer& morph) {
  const auto decl = strip(p);
  if (decl.empty()) return {};

  // After the first verb when there is one, otherwise right where the
  // particle used to be.
  std::size_t start = std::min(p.interrogative.index, decl.size());
  const auto tagged = tag_tokens(decl, morph, stopwords, expects_verb(p.interrogative.type));
  const auto verb = std::find_if(tagged.begin(), tagged.end(),
                                 [](const TaggedToken& t) { return t.tag == MorphTag::Verb; });
  if (verb != tagged.end()) start = static_cast<std::size_t>(verb - tagged.begin()) + 1;

  std::vector<std::string> run;
  for (std::size_t i = start; i < decl.size() && is_content(decl[i], stopwords); ++i) {
    run.push_back(decl[i].normalized);
  }
  if (!run.empty()) return run;

  for (auto it = decl.rbegin(); it != decl.rend(); ++it) {
    if (is_content(*it, stopwords)) return {it->normalized};
  }
  return {};
}

std::string render_tokens(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t.surface;
  }
  return out;
}

}  // namespace

std::span<const ParticleMapping> interrogative_table() { return kParticles; }

std::optional<AnswerType> lookup_particle(std::string_view normalized) {
  for (const auto& m : kParticles) {
    if (m.particle == normalized) return m.type;
  }
  return std::nullopt;
}

bool expects_verb(AnswerType type) { return type != AnswerType::Organization; }

Interrogative detect_interrogative(std::string_view question_text) {
  return parse(question_text).interrogative;
}

std::vector<Token> declarative_tokens(std::string_view question_text) {
  return strip(parse(question_text));
}

std::string to_declarative(std::string_view question_text) {
  return render_tokens(declarative_tokens(question_text));
}

std::vector<std::string> extract_keywords(std::string_view question_text,
                                          const Stopwords& stopwords) {
  return keywords_of(parse(question_text), stopwords, question_text);
}

std::vector<std::string> extract_focus(std::string_view question_text, const Stopwords& stopwords,
                                       const MorphAnalyzer& morph) {
  return focus_of(parse(question_text), stopwords, morph);
}

QuestionAnalysis QuestionAnalyzer::analyze(std::string_view question_text) const {
  const auto parsed = parse(question_text);
  if (!is_question_mark(parsed.tokens.back())) {
    throw InvalidQuestion("question must end with a question mark: '" +
                          std::string(question_text) + "'");
  }

  QuestionAnalysis a;
  a.interrogative_particle = parsed.interrogative.particle;
  a.question_type = parsed.interrogative.type;
  a.expected_answer_type = parsed.interrogative.type;
  a.keywords = keywords_of(parsed, *stopwords_, question_text);
  a.focus = focus_of(parsed, *stopwords_, *morph_);
  a.declarative_form = render_tokens(strip(parsed));
  return a;
}

QuestionAnalysis QuestionAnalyzer::analyze(const Question& question) const {
  return analyze(question.text);
}

}  // namespace aqa
