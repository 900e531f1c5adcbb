#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace aqa {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Linguistic failures: the question cannot be processed by the rule set.
class LinguisticError : public Error {
 public:
  using Error::Error;
};

class InvalidQuestion : public LinguisticError {
 public:
  using LinguisticError::LinguisticError;
};

class NoInterrogativeFound : public LinguisticError {
 public:
  explicit NoInterrogativeFound(const std::string& question)
      : LinguisticError("no supported interrogative particle in: " + question) {}
};

class EmptyKeywords : public LinguisticError {
 public:
  explicit EmptyKeywords(const std::string& question)
      : LinguisticError("no keywords left after filtering: " + question) {}
};

class MissingVerb : public LinguisticError {
 public:
  explicit MissingVerb(const std::string& declarative)
      : LinguisticError("question type requires a verb, none tagged in: " + declarative) {}
};

class MissingNoun : public LinguisticError {
 public:
  explicit MissingNoun(const std::string& declarative)
      : LinguisticError("no noun tagged in: " + declarative) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Retrieval failures.
class ProviderUnavailable : public Error {
 public:
  using Error::Error;
};

class FetchFailed : public Error {
 public:
  FetchFailed(std::string url, const std::string& cause)
      : Error("fetch failed for " + url + ": " + cause), url_(std::move(url)) {}

  const std::string& url() const noexcept { return url_; }

 private:
  std::string url_;
};

// Persistence and configuration.
class IoError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  SchemaError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class MissingGoldAnswer : public Error {
 public:
  explicit MissingGoldAnswer(const std::string& id)
      : Error("entry " + id + " has no gold answer") {}
};

class InvalidCounts : public Error {
 public:
  using Error::Error;
};

}  // namespace aqa
