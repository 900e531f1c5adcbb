#include "aqa/fetch.hpp"

#include <iconv.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cerrno>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>

#include "aqa/errors.hpp"
#include "aqa/unicode.hpp"

namespace aqa {

namespace {

constexpr std::size_t kMetaWindow = 4096;

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.' ||
         c == ':';
}

// Reads the value following "charset" at `at` (which points at the 'c').
std::string charset_value(std::string_view lower, std::size_t at) {
  std::size_t k = at + 7;
  while (k < lower.size() && lower[k] == ' ') ++k;
  if (k >= lower.size() || lower[k] != '=') return {};
  ++k;
  while (k < lower.size() && (lower[k] == ' ' || lower[k] == '"' || lower[k] == '\'')) ++k;
  std::size_t end = k;
  while (end < lower.size() && label_char(lower[end])) ++end;
  return std::string(lower.substr(k, end - k));
}

bool is_utf8_label(std::string_view label) { return label == "utf-8" || label == "utf8"; }

std::string read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

std::string charset_from_content_type(std::string_view content_type) {
  const std::string lower = ascii_lower(content_type);
  const auto at = lower.find("charset");
  if (at == std::string::npos) return {};
  return charset_value(lower, at);
}

std::string charset_from_meta(std::string_view raw) {
  const std::string lower = ascii_lower(raw.substr(0, std::min(raw.size(), kMetaWindow)));
  std::size_t pos = 0;
  while ((pos = lower.find("<meta", pos)) != std::string::npos) {
    const auto close = lower.find('>', pos);
    const std::string_view tag =
        std::string_view(lower).substr(pos, close == std::string::npos ? std::string::npos : close - pos);
    if (const auto at = tag.find("charset"); at != std::string_view::npos) {
      if (auto value = charset_value(tag, at); !value.empty()) return value;
    }
    pos += 5;
  }
  return {};
}

std::string transcode_to_utf8(std::string_view raw, std::string_view encoding) {
  const std::string label = ascii_lower(encoding);
  if (is_utf8_label(label)) {
    if (!unicode::is_valid(raw)) throw Error("malformed UTF-8 input");
    return std::string(raw);
  }

  iconv_t cd = iconv_open("UTF-8", label.c_str());
  if (cd == reinterpret_cast<iconv_t>(-1)) throw Error("unknown encoding '" + label + "'");
  const std::unique_ptr<void, int (*)(iconv_t)> guard(cd, iconv_close);

  std::string out;
  std::string input(raw);
  char* in_ptr = input.data();
  std::size_t in_left = input.size();
  std::array<char, 4096> buffer{};
  while (in_left > 0) {
    char* out_ptr = buffer.data();
    std::size_t out_left = buffer.size();
    const std::size_t rc = iconv(cd, &in_ptr, &in_left, &out_ptr, &out_left);
    out.append(buffer.data(), buffer.size() - out_left);
    if (rc == static_cast<std::size_t>(-1) && errno != E2BIG) {
      throw Error("input is not valid " + label);
    }
  }
  return out;
}

void decode_page(FetchedPage& page, std::string_view content_type) {
  for (const auto& label : {charset_from_content_type(content_type), charset_from_meta(page.raw)}) {
    if (label.empty()) continue;
    try {
      page.html = transcode_to_utf8(page.raw, label);
      page.encoding = is_utf8_label(label) ? "utf-8" : label;
      return;
    } catch (const Error&) {
      // Wrong or unsupported declaration: fall through to the next guess.
    }
  }
  page.html = unicode::encode(unicode::decode(page.raw));
  page.encoding = "utf-8";
}

FetchedPage FixtureFetcher::fetch(const UrlRecord& url) const {
  const std::string name = fixture_hash(url.url) + ".html";
  std::vector<std::filesystem::path> dirs;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(root_, ec)) {
    if (entry.is_directory()) dirs.push_back(entry.path());
  }
  if (ec) throw FetchFailed(url.url, "fixture root unreadable: " + ec.message());
  std::sort(dirs.begin(), dirs.end());

  for (const auto& dir : dirs) {
    const auto file = dir / "pages" / name;
    if (!std::filesystem::is_regular_file(file)) continue;
    FetchedPage page;
    page.source = url;
    try {
      page.raw = read_bytes(file);
    } catch (const IoError& e) {
      throw FetchFailed(url.url, e.what());
    }
    page.fetched_at = std::chrono::system_clock::time_point{};
    decode_page(page);
    return page;
  }
  throw FetchFailed(url.url, "no recorded page");
}

}  // namespace aqa
