#pragma once

#include <array>
#include <cstdio>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

#include "aqa/config.hpp"
#include "aqa/unicode.hpp"

namespace aqa::test {

inline std::filesystem::path data_dir() { return AQA_DATA_DIR; }
inline std::filesystem::path fixtures_dir() { return AQA_FIXTURES_DIR; }
inline std::filesystem::path test_data_dir() { return AQA_TEST_DATA_DIR; }

inline const Resources& resources() {
  static const Resources r = Resources::load(data_dir());
  return r;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::FILE* f = std::fopen(p.c_str(), "rb");
  if (f == nullptr) throw std::runtime_error("cannot open " + p.string());
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), f)) > 0;) out.append(buf.data(), n);
  std::fclose(f);
  return out;
}

inline void write_file(const std::filesystem::path& p, const std::string& content) {
  std::FILE* f = std::fopen(p.c_str(), "wb");
  if (f == nullptr) throw std::runtime_error("cannot write " + p.string());
  std::fwrite(content.data(), 1, content.size(), f);
  std::fclose(f);
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    path_ = std::filesystem::temp_directory_path() / ("aqa-test-" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

// Runs a shell command, capturing standard output.
inline CommandResult run(const std::string& command) {
  CommandResult r;
  std::FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Single-quoted for /bin/sh.
inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out.push_back(c);
    }
  }
  return out + "'";
}

// Random strings over Arabic letters, diacritics, tatweel, digits of both
// scripts, punctuation and whitespace.
class ArabicTextGen {
 public:
  explicit ArabicTextGen(std::uint64_t seed) : rng_(seed) {}

  std::string operator()(std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::u32string s;
    const std::size_t n = len(rng_);
    for (std::size_t i = 0; i < n; ++i) s.push_back(pick());
    return unicode::encode(s);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  char32_t pick() {
    static constexpr std::u32string_view kPunct = U"؟?.؛،!:()«»,;";
    static constexpr std::u32string_view kSpace = U" \t\n\u00A0";
    std::uniform_int_distribution<int> cls(0, 9);
    switch (cls(rng_)) {
      case 0:
        return from(U'\u064B', U'\u0652');
      case 1:
        return cls(rng_) < 5 ? U'\u0640' : from(U'\u0622', U'\u0625');
      case 2:
        return cls(rng_) < 5 ? from(U'0', U'9') : from(U'\u0660', U'\u0669');
      case 3:
        return kPunct[std::uniform_int_distribution<std::size_t>(0, kPunct.size() - 1)(rng_)];
      case 4:
        return kSpace[std::uniform_int_distribution<std::size_t>(0, kSpace.size() - 1)(rng_)];
      case 5:
        return cls(rng_) < 3 ? U'\u0649' : from(U'a', U'z');
      default:
        return from(U'\u0621', U'\u064A');
    }
  }

  char32_t from(char32_t lo, char32_t hi) {
    return static_cast<char32_t>(std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng_));
  }

  std::mt19937_64 rng_;
};

}  // namespace aqa::test
