#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "aqa/question.hpp"
#include "aqa/text.hpp"

namespace aqa {

struct EntityMention {
  std::string text;  // source slice at span
  AnswerType type = AnswerType::Person;
  CharSpan span;

  friend bool operator==(const EntityMention&, const EntityMention&) = default;
};

// Normalized entity names for the dictionary-backed types. A name may be
// listed under several types.
class Gazetteer {
 public:
  static constexpr std::size_t kMaxNgram = 4;

  // Reads gazetteer_{person,location,organization}.txt from `dir`.
  static Gazetteer load(const std::filesystem::path& dir);

  void add(AnswerType type, std::string_view name);
  bool contains(AnswerType type, std::string_view normalized) const;
  std::size_t size(AnswerType type) const;

 private:
  const std::unordered_set<std::string>* names(AnswerType type) const;
  std::unordered_set<std::string>* names(AnswerType type);

  std::unordered_set<std::string> person_;
  std::unordered_set<std::string> location_;
  std::unordered_set<std::string> organization_;
};

// Word lists behind the DATE and NUMERIC_EXPRESSION patterns.
struct PatternLexicon {
  std::unordered_set<std::string> units;
  std::unordered_set<std::string> months;  // may hold multi-word names

  // Reads units.txt and months.txt from `dir`.
  static PatternLexicon load(const std::filesystem::path& dir);
};

class EntityRecognizer {
 public:
  EntityRecognizer(Gazetteer gazetteer, PatternLexicon patterns)
      : gazetteer_(std::move(gazetteer)), patterns_(std::move(patterns)) {}

  // Mentions sorted by start offset. Overlaps within one type are resolved
  // longest-first; mentions of different types may overlap.
  std::vector<EntityMention> recognize(std::string_view text) const;

  bool contains_type(std::string_view text, AnswerType type) const;

  const Gazetteer& gazetteer() const { return gazetteer_; }
  const PatternLexicon& patterns() const { return patterns_; }

 private:
  Gazetteer gazetteer_;
  PatternLexicon patterns_;
};

}  // namespace aqa
