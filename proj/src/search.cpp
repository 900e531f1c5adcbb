#include "aqa/search.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "aqa/errors.hpp"

namespace aqa {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string bare_host(std::string_view host) {
  std::string h = lowercase(host);
  if (const auto colon = h.rfind(':'); colon != std::string::npos && h.find(']') == std::string::npos) {
    h.erase(colon);
  }
  return h;
}

bool host_matches(const std::string& host, std::string_view pattern) {
  const std::string p = bare_host(pattern);
  if (p.empty()) return false;
  return host == p || (host.size() > p.size() && host.ends_with(p) &&
                       host[host.size() - p.size() - 1] == '.');
}

std::string trim(std::string_view s) {
  const auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ws(s.back())) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

SearchQuery build_query(const QuestionAnalysis& analysis, std::size_t max_results) {
  if (max_results == 0) throw std::invalid_argument("max_results must be at least 1");
  if (analysis.keywords.empty()) throw EmptyKeywords(analysis.declarative_form);
  return SearchQuery{analysis.keywords, analysis.focus_text(), max_results};
}

UrlRecord parse_url(std::string_view url, std::size_t rank) {
  static const std::regex pattern(R"(^([A-Za-z][A-Za-z0-9+.\-]*)://([^/?#\s]*)([^?#\s]*)(?:\?([^#\s]*))?(?:#\S*)?$)");
  const std::string s(url);
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) throw ParseError("not an absolute URL: '" + s + "'");

  UrlRecord r;
  r.url = s;
  r.rank = rank;
  r.protocol = lowercase(m[1].str());
  r.host = m[2].str();
  r.path = m[3].str();
  r.query = m[4].str();
  if (r.protocol != "http" && r.protocol != "https" && r.protocol != "file") {
    throw ParseError("unsupported protocol in '" + s + "'");
  }
  if (r.protocol != "file" && r.host.empty()) throw ParseError("missing host in '" + s + "'");
  return r;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fixture_hash(std::string_view key) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::uint64_t h = fnv1a64(key);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
    h >>= 4;
  }
  return out;
}

std::string query_fixture_key(const SearchQuery& query) { return normalize(query.text()); }

std::vector<UrlRecord> search(const SearchQuery& query, SearchProvider& provider) {
  if (query.max_results == 0) throw std::invalid_argument("max_results must be at least 1");
  std::vector<UrlRecord> out;
  std::unordered_set<std::string> seen;
  for (const auto& raw : provider.lookup(query)) {
    if (out.size() >= query.max_results) break;
    const std::string url = trim(raw);
    if (url.empty() || seen.contains(url)) continue;
    try {
      out.push_back(parse_url(url, out.size() + 1));
      seen.insert(url);
    } catch (const ParseError&) {
      // Providers occasionally return relative or junk links.
    }
  }
  return out;
}

std::filesystem::path FixtureProvider::query_dir(const SearchQuery& query) const {
  return root_ / fixture_hash(query_fixture_key(query));
}

std::vector<std::string> FixtureProvider::lookup(const SearchQuery& query) {
  const auto file = query_dir(query) / "urls.txt";
  if (!std::filesystem::exists(file)) return {};
  return read_list_file(file);
}

bool HttpSettings::host_allowed(std::string_view host) const {
  const std::string h = bare_host(host);
  for (const auto& d : deny_hosts) {
    if (host_matches(h, d)) return false;
  }
  if (allow_hosts.empty()) return true;
  return std::any_of(allow_hosts.begin(), allow_hosts.end(),
                     [&](const std::string& a) { return host_matches(h, a); });
}

std::vector<std::string> parse_search_response(std::string_view body) {
  std::vector<std::string> urls;
  const auto json = nlohmann::json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (!json.is_discarded()) {
    auto take = [&](const nlohmann::json& arr, const char* field) {
      if (!arr.is_array()) return;
      for (const auto& item : arr) {
        if (field == nullptr && item.is_string()) urls.push_back(item.get<std::string>());
        if (field != nullptr && item.is_object() && item.contains(field) && item[field].is_string()) {
          urls.push_back(item[field].get<std::string>());
        }
      }
    };
    if (json.is_array()) {
      take(json, nullptr);
    } else if (json.is_object()) {
      if (json.contains("items")) take(json["items"], "link");
      if (json.contains("urls")) take(json["urls"], nullptr);
    } else {
      throw ProviderUnavailable("unexpected search response shape");
    }
    return urls;
  }

  std::size_t start = 0;
  while (start < body.size()) {
    auto end = body.find('\n', start);
    if (end == std::string_view::npos) end = body.size();
    auto line = trim(body.substr(start, end - start));
    if (line.starts_with("http://") || line.starts_with("https://")) urls.push_back(std::move(line));
    start = end + 1;
  }
  return urls;
}

std::string percent_encode(std::string_view text) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    }
  }
  return out;
}

}  // namespace aqa
