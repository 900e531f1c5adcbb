#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aqa/logic_form.hpp"
#include "aqa/passages.hpp"
#include "aqa/question.hpp"

namespace aqa {

struct CorpusEntry {
  Question question;
  QuestionAnalysis analysis;
  std::optional<LogicForm> logic_form;
  std::vector<Passage> passages;
  std::optional<std::string> validated_text;
  bool answer_found = false;

  friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

// Answer matching: normalize(gold) must occur in normalize(candidate).
// Throws MissingGoldAnswer when the entry has no non-empty gold answer.
bool answer_in_text(const CorpusEntry& entry, std::string_view candidate);

// Checks one candidate text; on success sets answer_found and
// validated_text. A failed check leaves the entry untouched.
bool validate_entry(CorpusEntry& entry, std::string_view candidate);

// Tries candidates in order and stops at the first that validates.
bool validate_entry(CorpusEntry& entry, std::span<const std::string> candidates);

// Candidate texts for a retrieval: the page of the top passage first, then
// every other fetched page by search rank. No passages, no candidates.
std::vector<std::string> candidate_texts(const RetrievalResult& result);

// Pairs a question with its retrieval; the logic form is left empty when the
// question cannot be translated.
CorpusEntry make_entry(const Question& question, const RetrievalResult& result,
                       const MorphAnalyzer& morph, const Stopwords& stopwords);

// Line-delimited JSON, one entry per line. Throws IoError.
void save_corpus(std::span<const CorpusEntry> entries, const std::filesystem::path& path);
std::string corpus_record(const CorpusEntry& entry);

// Throws IoError, or SchemaError with the 1-based line of the bad record.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);
CorpusEntry parse_corpus_record(std::string_view line, std::size_t line_number = 1);

struct CorpusStats {
  std::array<std::size_t, kSources.size()> by_source{};
  std::array<std::size_t, kDomains.size()> by_domain{};
  std::size_t total = 0;

  std::size_t count(Source s) const { return by_source[static_cast<std::size_t>(s)]; }
  std::size_t count(Domain d) const { return by_domain[static_cast<std::size_t>(d)]; }

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

CorpusStats corpus_stats(std::span<const CorpusEntry> entries);

// Question list: one JSON object per line (question_text required; id,
// source, domain, gold_answer optional) or one bare question per line.
// Blank lines and lines starting with '#' are skipped. Missing ids become
// q<line number>. Throws IoError or SchemaError.
std::vector<Question> read_questions(const std::filesystem::path& path);

}  // namespace aqa
