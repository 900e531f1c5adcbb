#include "aqa/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "aqa/errors.hpp"

namespace aqa {

namespace {

constexpr std::string_view kFixturePrefix = "fixture:";

std::string trim(std::string_view s) {
  const auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ws(s.back())) s.remove_suffix(1);
  return std::string(s);
}

std::size_t positive(std::string_view key, std::string_view value, std::size_t line) {
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
  if (ec != std::errc() || ptr != value.data() + value.size() || n == 0) {
    throw ConfigError("line " + std::to_string(line) + ": " + std::string(key) +
                      " must be a positive integer, got '" + std::string(value) + "'");
  }
  return n;
}

std::vector<std::string> host_list(std::string_view value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    auto end = value.find(',', start);
    if (end == std::string_view::npos) end = value.size();
    if (auto host = trim(value.substr(start, end - start)); !host.empty()) out.push_back(host);
    start = end + 1;
  }
  return out;
}

std::filesystem::path resolve(const std::filesystem::path& base, std::string_view value) {
  std::filesystem::path p{std::string(value)};
  return p.is_relative() && !base.empty() ? base / p : p;
}

}  // namespace

std::optional<std::filesystem::path> Config::fixture_root() const {
  if (!search_endpoint.starts_with(kFixturePrefix)) return std::nullopt;
  return std::filesystem::path(search_endpoint.substr(kFixturePrefix.size()));
}

HttpSettings Config::http_settings() const {
  HttpSettings s;
  s.timeout = timeout;
  s.allow_hosts = allow_hosts;
  s.deny_hosts = deny_hosts;
  return s;
}

Config parse_config(std::string_view content, const std::filesystem::path& base_dir) {
  Config config;
  std::size_t start = 0;
  std::size_t number = 0;
  while (start < content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    const std::string line = trim(content.substr(start, end - start));
    start = end + 1;
    ++number;
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));

    if (key == "search_endpoint") {
      if (value.starts_with(kFixturePrefix)) {
        config.search_endpoint =
            std::string(kFixturePrefix) + resolve(base_dir, value.substr(kFixturePrefix.size())).string();
      } else {
        config.search_endpoint = value;
      }
    } else if (key == "search_api_key_env") {
      config.search_api_key_env = value;
    } else if (key == "timeout_ms") {
      config.timeout = std::chrono::milliseconds(positive(key, value, number));
    } else if (key == "max_fetch_concurrency") {
      config.max_fetch_concurrency = positive(key, value, number);
    } else if (key == "max_results") {
      config.max_results = positive(key, value, number);
    } else if (key == "data_dir") {
      config.data_dir = resolve(base_dir, value);
    } else if (key == "allow_hosts") {
      config.allow_hosts = host_list(value);
    } else if (key == "deny_hosts") {
      config.deny_hosts = host_list(value);
    } else {
      throw ConfigError("line " + std::to_string(number) + ": unknown key '" + key + "'");
    }
  }
  return config;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.parent_path());
}

std::unique_ptr<SearchProvider> make_provider(const Config& config) {
  if (auto root = config.fixture_root()) return std::make_unique<FixtureProvider>(*root);
  if (config.search_endpoint.empty()) throw ConfigError("no search_endpoint configured");
  return std::make_unique<LiveProvider>(config.search_endpoint, config.search_api_key_env,
                                        config.http_settings());
}

std::unique_ptr<PageFetcher> make_fetcher(const Config& config) {
  if (auto root = config.fixture_root()) return std::make_unique<FixtureFetcher>(*root);
  return std::make_unique<HttpFetcher>(config.http_settings());
}

Resources::Resources(Stopwords stopwords, LexiconMorphAnalyzer morph, EntityRecognizer recognizer)
    : stopwords_(std::move(stopwords)),
      morph_(std::move(morph)),
      recognizer_(std::move(recognizer)),
      analyzer_(stopwords_, morph_) {}

Resources Resources::load(const std::filesystem::path& data_dir) {
  if (!std::filesystem::is_directory(data_dir)) {
    throw ConfigError("data directory not found: " + data_dir.string());
  }
  return Resources(Stopwords::load(data_dir / "stopwords.txt"),
                   LexiconMorphAnalyzer::load(data_dir / "morph_lexicon.tsv"),
                   EntityRecognizer(Gazetteer::load(data_dir), PatternLexicon::load(data_dir)));
}

}  // namespace aqa
