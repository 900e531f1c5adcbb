#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <string_view>

#include "aqa/search.hpp"

namespace aqa {

struct FetchedPage {
  UrlRecord source;
  std::string raw;       // bytes as received
  std::string encoding;  // label the bytes were decoded with
  std::string html;      // raw decoded to UTF-8
  std::chrono::system_clock::time_point fetched_at;
};

class PageFetcher {
 public:
  virtual ~PageFetcher() = default;

  // Throws FetchFailed. Must be callable concurrently for distinct URLs.
  virtual FetchedPage fetch(const UrlRecord& url) const = 0;
};

inline FetchedPage fetch(const UrlRecord& url, const PageFetcher& fetcher) {
  return fetcher.fetch(url);
}

// Charset parameter of a Content-Type header value, lowercased; empty if none.
std::string charset_from_content_type(std::string_view content_type);

// Charset declared by a <meta> tag within the first 4 KiB; empty if none.
std::string charset_from_meta(std::string_view raw);

// Decodes `raw` trying the header charset, then the meta charset, then
// UTF-8 (lenient: malformed bytes become U+FFFD). Fills encoding and html.
void decode_page(FetchedPage& page, std::string_view content_type = {});

// Strict conversion to UTF-8 via iconv; throws Error on unknown labels or
// malformed input.
std::string transcode_to_utf8(std::string_view raw, std::string_view encoding);

// Serves pages from <root>/<query-hash>/pages/<url-hash>.html, searching the
// query directories in lexicographic order.
class FixtureFetcher : public PageFetcher {
 public:
  explicit FixtureFetcher(std::filesystem::path root) : root_(std::move(root)) {}

  FetchedPage fetch(const UrlRecord& url) const override;

 private:
  std::filesystem::path root_;
};

class HttpFetcher : public PageFetcher {
 public:
  explicit HttpFetcher(HttpSettings settings = {}) : settings_(std::move(settings)) {}

  FetchedPage fetch(const UrlRecord& url) const override;

 private:
  HttpSettings settings_;
};

}  // namespace aqa
