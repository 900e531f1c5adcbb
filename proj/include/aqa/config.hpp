#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aqa/entities.hpp"
#include "aqa/fetch.hpp"
#include "aqa/morphology.hpp"
#include "aqa/question.hpp"
#include "aqa/search.hpp"
#include "aqa/text.hpp"

namespace aqa {

// `key = value` lines; '#' starts a comment line. Keys:
//   search_endpoint        URL of a live endpoint, or fixture:<dir>
//   search_api_key_env     environment variable holding the credential
//   timeout_ms, max_fetch_concurrency, max_results   positive integers
//   data_dir               lexicon/gazetteer/stopword directory
//   allow_hosts, deny_hosts  comma-separated host names
// Relative paths are resolved against the config file's directory.
struct Config {
  std::string search_endpoint;
  std::string search_api_key_env = "AQA_SEARCH_API_KEY";
  std::chrono::milliseconds timeout{10000};
  std::size_t max_fetch_concurrency = 4;
  std::size_t max_results = 10;
  std::filesystem::path data_dir;
  std::vector<std::string> allow_hosts;
  std::vector<std::string> deny_hosts;

  // Directory named by a fixture: endpoint.
  std::optional<std::filesystem::path> fixture_root() const;
  HttpSettings http_settings() const;
};

// Throws ConfigError.
Config parse_config(std::string_view content, const std::filesystem::path& base_dir = {});
Config load_config(const std::filesystem::path& path);

std::unique_ptr<SearchProvider> make_provider(const Config& config);
std::unique_ptr<PageFetcher> make_fetcher(const Config& config);

// Everything the linguistic modules read from the data directory:
// stopwords.txt, morph_lexicon.tsv, gazetteer_*.txt, units.txt, months.txt.
class Resources {
 public:
  // Throws ConfigError if the directory is missing, IoError/SchemaError for
  // unreadable or malformed files.
  static Resources load(const std::filesystem::path& data_dir);

  const Stopwords& stopwords() const { return stopwords_; }
  const LexiconMorphAnalyzer& morph() const { return morph_; }
  const EntityRecognizer& recognizer() const { return recognizer_; }
  const QuestionAnalyzer& analyzer() const { return analyzer_; }

  Resources(const Resources&) = delete;
  Resources& operator=(const Resources&) = delete;

 private:
  Resources(Stopwords stopwords, LexiconMorphAnalyzer morph, EntityRecognizer recognizer);

  Stopwords stopwords_;
  LexiconMorphAnalyzer morph_;
  EntityRecognizer recognizer_;
  QuestionAnalyzer analyzer_;
};

}  // namespace aqa
