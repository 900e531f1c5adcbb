// Everything that talks to the network lives here so only one translation
// unit pulls in cpp-httplib.
#include <cstdlib>
#include <string>
#include <variant>
#include <vector>

#include <httplib.h>

#include "aqa/errors.hpp"
#include "aqa/fetch.hpp"
#include "aqa/search.hpp"

namespace aqa {

namespace {

constexpr int kMaxRedirects = 5;

struct Response {
  int status = 0;
  std::string body;
  std::string content_type;
  std::string location;
};

// One GET without redirect handling. Returns an error description on
// transport failure.
std::variant<Response, std::string> get(const UrlRecord& url, const HttpSettings& settings) {
  const std::string origin = url.protocol + "://" + url.host;
  httplib::Client client(origin);
  if (!client.is_valid()) return std::string("unsupported scheme for this build: " + url.protocol);
  client.set_connection_timeout(settings.timeout);
  client.set_read_timeout(settings.timeout);
  client.set_write_timeout(settings.timeout);
  client.set_follow_location(false);

  std::string target = url.path.empty() ? "/" : url.path;
  if (!url.query.empty()) target += "?" + url.query;
  const httplib::Headers headers = {{"User-Agent", settings.user_agent}};
  const auto result = client.Get(target, headers);
  if (!result) return httplib::to_string(result.error());

  Response r;
  r.status = result->status;
  r.body = result->body;
  r.content_type = result->get_header_value("Content-Type");
  r.location = result->get_header_value("Location");
  return r;
}

// Collapses "." and ".." segments of an absolute path.
std::string remove_dot_segments(const std::string& path) {
  std::vector<std::string> segments;
  std::size_t start = 1;
  while (start <= path.size()) {
    auto end = path.find('/', start);
    if (end == std::string::npos) end = path.size();
    const std::string segment = path.substr(start, end - start);
    if (segment == "..") {
      if (!segments.empty()) segments.pop_back();
    } else if (segment != ".") {
      segments.push_back(segment);
    }
    start = end + 1;
  }
  const bool trailing = path.ends_with("/.") || path.ends_with("/..");
  std::string out;
  for (const auto& seg : segments) out += "/" + seg;
  if (trailing || out.empty()) out += "/";
  return out;
}

UrlRecord resolve_location(const UrlRecord& base, const std::string& location) {
  if (location.starts_with("http://") || location.starts_with("https://")) {
    return parse_url(location, base.rank);
  }
  if (location.starts_with("//")) return parse_url(base.protocol + ":" + location, base.rank);
  std::string path = location;
  if (!path.starts_with("/")) {
    const auto slash = base.path.rfind('/');
    path = (slash == std::string::npos ? "/" : base.path.substr(0, slash + 1)) + path;
  }
  const auto query = path.find_first_of("?#");
  path = remove_dot_segments(path.substr(0, query)) + (query == std::string::npos ? "" : path.substr(query));
  return parse_url(base.protocol + "://" + base.host + path, base.rank);
}

}  // namespace

LiveProvider::LiveProvider(std::string endpoint, std::string api_key_env, HttpSettings settings)
    : endpoint_(std::move(endpoint)),
      api_key_env_(std::move(api_key_env)),
      settings_(std::move(settings)) {}

std::vector<std::string> LiveProvider::lookup(const SearchQuery& query) {
  const char* key = api_key_env_.empty() ? nullptr : std::getenv(api_key_env_.c_str());
  if (key == nullptr || *key == '\0') {
    throw ProviderUnavailable("search credential not set (environment variable '" + api_key_env_ +
                              "')");
  }

  UrlRecord endpoint;
  try {
    endpoint = parse_url(endpoint_);
  } catch (const ParseError& e) {
    throw ProviderUnavailable(std::string("bad search endpoint: ") + e.what());
  }
  if (endpoint.protocol == "file") throw ProviderUnavailable("search endpoint must be http(s)");

  std::string params = "q=" + percent_encode(query.text()) +
                       "&num=" + std::to_string(query.max_results) + "&key=" + percent_encode(key);
  endpoint.query = endpoint.query.empty() ? params : endpoint.query + "&" + params;

  auto outcome = get(endpoint, settings_);
  if (auto* err = std::get_if<std::string>(&outcome)) {
    throw ProviderUnavailable("search request failed: " + *err);
  }
  const auto& response = std::get<Response>(outcome);
  if (response.status != 200) {
    throw ProviderUnavailable("search endpoint answered HTTP " + std::to_string(response.status));
  }
  return parse_search_response(response.body);
}

FetchedPage HttpFetcher::fetch(const UrlRecord& url) const {
  if (url.protocol == "file") throw FetchFailed(url.url, "file URLs are not fetched over HTTP");

  UrlRecord current = url;
  for (int hop = 0; hop <= kMaxRedirects; ++hop) {
    if (!settings_.host_allowed(current.host)) {
      throw FetchFailed(url.url, "host not allowed: " + current.host);
    }
    auto outcome = get(current, settings_);
    if (auto* err = std::get_if<std::string>(&outcome)) throw FetchFailed(url.url, *err);
    auto& response = std::get<Response>(outcome);

    if (response.status >= 300 && response.status < 400 && !response.location.empty()) {
      try {
        current = resolve_location(current, response.location);
      } catch (const ParseError& e) {
        throw FetchFailed(url.url, std::string("bad redirect: ") + e.what());
      }
      continue;
    }
    if (response.status != 200) {
      throw FetchFailed(url.url, "HTTP " + std::to_string(response.status));
    }

    FetchedPage page;
    page.source = url;
    page.raw = std::move(response.body);
    page.fetched_at = std::chrono::system_clock::now();
    decode_page(page, response.content_type);
    return page;
  }
  throw FetchFailed(url.url, "too many redirects");
}

}  // namespace aqa
