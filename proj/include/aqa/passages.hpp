#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "aqa/entities.hpp"
#include "aqa/fetch.hpp"
#include "aqa/question.hpp"
#include "aqa/search.hpp"

namespace aqa {

struct Passage {
  std::string text;
  std::string source_url;
  std::size_t source_rank = 0;
  std::size_t position = 0;  // index within its page
  std::size_t keyword_hits = 0;
  bool focus_hit = false;
  bool ne_validated = false;
  std::size_t score = 0;

  friend bool operator==(const Passage&, const Passage&) = default;
};

inline constexpr std::size_t kMaxPassageChars = 500;

// Paragraphs are separated by blank lines; lines inside a paragraph are
// joined with a space. Paragraphs over `max_chars` code points are cut
// after sentence terminators (؟ ! . ؛ ?), a '.' between digits excepted.
std::vector<Passage> segment_passages(std::string_view text, std::string_view source_url = {},
                                      std::size_t source_rank = 0,
                                      std::size_t max_chars = kMaxPassageChars);

struct RankingOptions {
  // A passage must match at least ceil(|terms| * num / den) query terms.
  std::size_t threshold_num = 1;
  std::size_t threshold_den = 2;
  std::size_t focus_bonus = 2;
};

std::size_t keyword_threshold(std::size_t term_count, const RankingOptions& options = {});

// Fills keyword_hits, focus_hit, ne_validated and score.
void score_passage(Passage& passage, const QuestionAnalysis& analysis,
                   const EntityRecognizer& recognizer, const RankingOptions& options = {});

// Strict weak order: score desc, source rank asc, position asc, text asc.
bool ranks_before(const Passage& a, const Passage& b);

// Scores every passage, keeps those that meet the keyword threshold and
// contain an entity of the expected answer type, and sorts with ranks_before.
std::vector<Passage> filter_and_rank(std::vector<Passage> passages, const QuestionAnalysis& analysis,
                                     const EntityRecognizer& recognizer,
                                     const RankingOptions& options = {});

struct RetrievalDeps {
  const QuestionAnalyzer& analyzer;
  SearchProvider& provider;
  const PageFetcher& fetcher;
  const EntityRecognizer& recognizer;
};

struct RetrievalOptions {
  std::size_t max_results = 10;
  std::size_t max_fetch_concurrency = 4;
  std::size_t max_passage_chars = kMaxPassageChars;
  RankingOptions ranking;
};

struct RetrievedDocument {
  UrlRecord source;
  std::string encoding;
  std::string text;  // page after html_to_text
};

struct FetchFailure {
  std::string url;
  std::string cause;
};

struct RetrievalResult {
  QuestionAnalysis analysis;
  SearchQuery query;
  std::vector<UrlRecord> urls;
  std::vector<RetrievedDocument> documents;  // rank order, failures skipped
  std::vector<FetchFailure> failures;        // rank order
  std::vector<Passage> passages;             // ranked across all pages
};

// analyze -> build_query -> search -> fetch (bounded concurrency) ->
// html_to_text -> segment -> filter_and_rank. Throws the analyzer's
// LinguisticError and the provider's ProviderUnavailable; per-URL fetch
// failures are recorded and skipped. The result does not depend on the
// order in which fetches complete.
RetrievalResult retrieve(const Question& question, const RetrievalDeps& deps,
                         const RetrievalOptions& options = {});

}  // namespace aqa
