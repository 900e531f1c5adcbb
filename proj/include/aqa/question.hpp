#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aqa/morphology.hpp"
#include "aqa/text.hpp"

namespace aqa {

enum class AnswerType { Person, Location, Date, Organization, NumericExpression };

inline constexpr std::array<AnswerType, 5> kAnswerTypes = {
    AnswerType::Person, AnswerType::Location, AnswerType::Date, AnswerType::Organization,
    AnswerType::NumericExpression};

std::string_view to_string(AnswerType type);
std::optional<AnswerType> parse_answer_type(std::string_view name);

enum class Source { Trec, Clef, Forum, Faq };

inline constexpr std::array<Source, 4> kSources = {Source::Trec, Source::Clef, Source::Forum,
                                                   Source::Faq};

std::string_view to_string(Source source);
std::optional<Source> parse_source(std::string_view name);

enum class Domain { WorldNews, HistoryIslam, DiscoveriesCulture, Sport, HealthMedicine };

inline constexpr std::array<Domain, 5> kDomains = {Domain::WorldNews, Domain::HistoryIslam,
                                                   Domain::DiscoveriesCulture, Domain::Sport,
                                                   Domain::HealthMedicine};

std::string_view to_string(Domain domain);
std::optional<Domain> parse_domain(std::string_view name);

struct Question {
  std::string id;
  std::string text;
  Source source = Source::Forum;
  Domain domain = Domain::WorldNews;
  std::optional<std::string> gold_answer;

  friend bool operator==(const Question&, const Question&) = default;
};

// The interrogative table: particle (normalized) -> expected answer type.
struct ParticleMapping {
  std::string_view particle;
  AnswerType type;
};

std::span<const ParticleMapping> interrogative_table();
std::optional<AnswerType> lookup_particle(std::string_view normalized);

struct Interrogative {
  Token particle;
  std::size_t index = 0;  // position in tokenize(question.text)
  AnswerType type = AnswerType::Person;
};

struct QuestionAnalysis {
  Token interrogative_particle;
  AnswerType question_type = AnswerType::Person;
  AnswerType expected_answer_type = AnswerType::Person;
  std::vector<std::string> keywords;
  std::vector<std::string> focus;
  std::string declarative_form;

  std::string focus_text() const { return join(focus); }

  friend bool operator==(const QuestionAnalysis&, const QuestionAnalysis&) = default;
};

// Types whose declarative form is expected to open with the main verb.
bool expects_verb(AnswerType type);

// Throws InvalidQuestion when the text has fewer than two tokens and
// NoInterrogativeFound when no table particle is present. من is accepted
// only as the first token.
Interrogative detect_interrogative(std::string_view question_text);
inline Interrogative detect_interrogative(const Question& q) { return detect_interrogative(q.text); }

// Tokens of the declarative form: the question minus the particle and the
// trailing question mark.
std::vector<Token> declarative_tokens(std::string_view question_text);

std::string to_declarative(std::string_view question_text);
inline std::string to_declarative(const Question& q) { return to_declarative(q.text); }

// Throws EmptyKeywords when nothing survives.
std::vector<std::string> extract_keywords(std::string_view question_text, const Stopwords& stopwords);

std::vector<std::string> extract_focus(std::string_view question_text, const Stopwords& stopwords,
                                       const MorphAnalyzer& morph);

class QuestionAnalyzer {
 public:
  QuestionAnalyzer(const Stopwords& stopwords, const MorphAnalyzer& morph)
      : stopwords_(&stopwords), morph_(&morph) {}

  QuestionAnalysis analyze(const Question& question) const;
  QuestionAnalysis analyze(std::string_view question_text) const;

  const Stopwords& stopwords() const { return *stopwords_; }
  const MorphAnalyzer& morph() const { return *morph_; }

 private:
  const Stopwords* stopwords_;
  const MorphAnalyzer* morph_;
};

}  // namespace aqa
