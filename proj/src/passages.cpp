#include "aqa/passages.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_set>

#include "aqa/errors.hpp"
#include "aqa/html.hpp"
#include "aqa/unicode.hpp"

namespace aqa {

namespace {

bool is_digit(char32_t cp) {
  return unicode::is_ascii_digit(cp) || (cp >= U'٠' && cp <= U'٩');
}

bool is_terminator(std::u32string_view s, std::size_t k) {
  switch (s[k]) {
    case U'؟':
    case U'?':
    case U'!':
    case U'؛':
      return true;
    case U'.':
      return !(k > 0 && k + 1 < s.size() && is_digit(s[k - 1]) && is_digit(s[k + 1]));
    default:
      return false;
  }
}

std::u32string trim(std::u32string_view s) {
  while (!s.empty() && unicode::is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && unicode::is_space(s.back())) s.remove_suffix(1);
  return std::u32string(s);
}

std::vector<std::u32string> split_sentences(std::u32string_view paragraph) {
  std::vector<std::u32string> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k < paragraph.size(); ++k) {
    if (!is_terminator(paragraph, k)) continue;
    // Keep runs like "؟!" with the sentence they close.
    while (k + 1 < paragraph.size() && is_terminator(paragraph, k + 1)) ++k;
    out.push_back(trim(paragraph.substr(start, k + 1 - start)));
    start = k + 1;
  }
  out.push_back(trim(paragraph.substr(start)));
  std::erase_if(out, [](const std::u32string& s) { return s.empty(); });
  return out;
}

bool contains_sequence(const std::vector<std::string>& haystack,
                       const std::vector<std::string>& needle) {
  if (needle.empty()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

}  // namespace

std::vector<Passage> segment_passages(std::string_view text, std::string_view source_url,
                                      std::size_t source_rank, std::size_t max_chars) {
  const std::u32string input = unicode::decode(text);
  std::vector<std::u32string> paragraphs;
  std::u32string current;
  std::size_t start = 0;
  while (start <= input.size()) {
    auto end = input.find(U'\n', start);
    if (end == std::u32string::npos) end = input.size();
    const std::u32string line = trim(std::u32string_view(input).substr(start, end - start));
    if (line.empty()) {
      if (!current.empty()) paragraphs.push_back(std::move(current));
      current.clear();
    } else {
      if (!current.empty()) current.push_back(U' ');
      current += line;
    }
    start = end + 1;
  }
  if (!current.empty()) paragraphs.push_back(std::move(current));

  std::vector<Passage> out;
  auto emit = [&](const std::u32string& piece) {
    Passage p;
    p.text = unicode::encode(piece);
    p.source_url = std::string(source_url);
    p.source_rank = source_rank;
    p.position = out.size();
    out.push_back(std::move(p));
  };
  for (const auto& paragraph : paragraphs) {
    if (paragraph.size() <= max_chars) {
      emit(paragraph);
      continue;
    }
    for (const auto& sentence : split_sentences(paragraph)) emit(sentence);
  }
  return out;
}

std::size_t keyword_threshold(std::size_t term_count, const RankingOptions& options) {
  if (options.threshold_den == 0) throw std::invalid_argument("threshold denominator is zero");
  const std::size_t scaled = term_count * options.threshold_num;
  return (scaled + options.threshold_den - 1) / options.threshold_den;
}

void score_passage(Passage& passage, const QuestionAnalysis& analysis,
                   const EntityRecognizer& recognizer, const RankingOptions& options) {
  const auto words = word_forms(passage.text);
  std::unordered_set<std::string> stems;
  for (const auto& w : words) stems.insert(light_stem(w));

  std::unordered_set<std::string> matched;
  for (const auto& term : analysis.keywords) {
    const auto stem = light_stem(term);
    if (stems.contains(stem)) matched.insert(stem);
  }
  passage.keyword_hits = matched.size();
  passage.focus_hit = contains_sequence(words, analysis.focus);
  passage.ne_validated = recognizer.contains_type(passage.text, analysis.expected_answer_type);
  passage.score = passage.keyword_hits + (passage.focus_hit ? options.focus_bonus : 0);
}

bool ranks_before(const Passage& a, const Passage& b) {
  return std::forward_as_tuple(b.score, a.source_rank, a.position, a.text, a.source_url) <
         std::forward_as_tuple(a.score, b.source_rank, b.position, b.text, b.source_url);
}

std::vector<Passage> filter_and_rank(std::vector<Passage> passages, const QuestionAnalysis& analysis,
                                     const EntityRecognizer& recognizer,
                                     const RankingOptions& options) {
  const std::size_t needed = keyword_threshold(analysis.keywords.size(), options);
  std::vector<Passage> kept;
  for (auto& p : passages) {
    score_passage(p, analysis, recognizer, options);
    if (p.keyword_hits >= needed && p.ne_validated) kept.push_back(std::move(p));
  }
  std::sort(kept.begin(), kept.end(), ranks_before);
  return kept;
}

RetrievalResult retrieve(const Question& question, const RetrievalDeps& deps,
                         const RetrievalOptions& options) {
  if (options.max_fetch_concurrency == 0) {
    throw std::invalid_argument("max_fetch_concurrency must be at least 1");
  }
  RetrievalResult result;
  result.analysis = deps.analyzer.analyze(question);
  result.query = build_query(result.analysis, options.max_results);
  result.urls = search(result.query, deps.provider);

  struct Slot {
    std::optional<RetrievedDocument> document;
    std::optional<FetchFailure> failure;
  };
  std::vector<Slot> slots(result.urls.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < slots.size(); i = next++) {
      const auto& url = result.urls[i];
      try {
        const FetchedPage page = deps.fetcher.fetch(url);
        slots[i].document = RetrievedDocument{url, page.encoding, html_to_text(page.html)};
      } catch (const FetchFailed& e) {
        slots[i].failure = FetchFailure{url.url, e.what()};
      } catch (const std::exception& e) {
        slots[i].failure = FetchFailure{url.url, e.what()};
      }
    }
  };
  {
    const std::size_t workers = std::min(options.max_fetch_concurrency, slots.size());
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  std::vector<Passage> candidates;
  for (auto& slot : slots) {
    if (slot.failure) {
      result.failures.push_back(std::move(*slot.failure));
      continue;
    }
    auto& doc = *slot.document;
    auto segments =
        segment_passages(doc.text, doc.source.url, doc.source.rank, options.max_passage_chars);
    std::move(segments.begin(), segments.end(), std::back_inserter(candidates));
    result.documents.push_back(std::move(doc));
  }
  result.passages =
      filter_and_rank(std::move(candidates), result.analysis, deps.recognizer, options.ranking);
  return result;
}

}  // namespace aqa
