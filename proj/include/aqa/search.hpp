#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "aqa/question.hpp"

namespace aqa {

struct SearchQuery {
  std::vector<std::string> terms;  // normalized keywords, question order
  std::string focus;
  std::size_t max_results = 10;

  // Terms joined by single spaces; the key used for fixture lookup.
  std::string text() const { return join(terms); }
};

// Throws std::invalid_argument for max_results == 0 and EmptyKeywords when
// the analysis has no keywords.
SearchQuery build_query(const QuestionAnalysis& analysis, std::size_t max_results = 10);

struct UrlRecord {
  std::string url;
  std::size_t rank = 0;  // 1-based
  std::string protocol;
  std::string host;  // may carry a :port suffix
  std::string path;
  std::string query;

  friend bool operator==(const UrlRecord&, const UrlRecord&) = default;
};

// Accepts absolute http, https and file URLs. Throws ParseError.
UrlRecord parse_url(std::string_view url, std::size_t rank = 1);

// 64-bit FNV-1a over the UTF-8 bytes, as 16 lowercase hex digits.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fixture_hash(std::string_view key);

// Fixture keys: normalize(query.text()) and the URL string as given.
std::string query_fixture_key(const SearchQuery& query);

class SearchProvider {
 public:
  virtual ~SearchProvider() = default;

  // Raw result URLs in provider order; may contain duplicates or junk.
  virtual std::vector<std::string> lookup(const SearchQuery& query) = 0;
};

// Runs the provider, drops unparsable and duplicate URLs, truncates to
// max_results and assigns ranks 1..n.
std::vector<UrlRecord> search(const SearchQuery& query, SearchProvider& provider);

// Resolves queries against <root>/<query-hash>/urls.txt. An unknown query
// yields no URLs.
class FixtureProvider : public SearchProvider {
 public:
  explicit FixtureProvider(std::filesystem::path root) : root_(std::move(root)) {}

  std::vector<std::string> lookup(const SearchQuery& query) override;

  std::filesystem::path query_dir(const SearchQuery& query) const;

 private:
  std::filesystem::path root_;
};

struct HttpSettings {
  std::chrono::milliseconds timeout{10000};
  std::string user_agent = "aqa/0.1 (question-answering corpus builder)";
  // Empty allow list means every host not denied is allowed.
  std::vector<std::string> allow_hosts;
  std::vector<std::string> deny_hosts;

  bool host_allowed(std::string_view host) const;
};

// Queries a configurable HTTP search endpoint with GET
//   <endpoint>?q=<terms>&num=<max_results>&key=<credential>
// The credential is read from the environment variable named at
// construction. Accepted response bodies: a JSON object with items[].link,
// a JSON object with urls[], a JSON array of strings, or plain text with one
// URL per line.
class LiveProvider : public SearchProvider {
 public:
  LiveProvider(std::string endpoint, std::string api_key_env, HttpSettings settings = {});

  std::vector<std::string> lookup(const SearchQuery& query) override;

 private:
  std::string endpoint_;
  std::string api_key_env_;
  HttpSettings settings_;
};

// Extracts result URLs from a search response body (see LiveProvider).
std::vector<std::string> parse_search_response(std::string_view body);

std::string percent_encode(std::string_view text);

}  // namespace aqa
