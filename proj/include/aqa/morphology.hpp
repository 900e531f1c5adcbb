#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aqa/text.hpp"

namespace aqa {

enum class MorphTag { Verb, Noun, Particle, Unknown };

std::string_view to_string(MorphTag tag);
std::optional<MorphTag> parse_morph_tag(std::string_view name);

struct TaggedToken {
  Token token;
  MorphTag tag = MorphTag::Unknown;
  // Citation form to use as predicate functor; empty means the token itself.
  std::string citation;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

// Part-of-speech source for logic-form generation. Implementations must not
// mutate shared state in tag(); callers may use one instance from several
// threads.
class MorphAnalyzer {
 public:
  virtual ~MorphAnalyzer() = default;

  // Exactly one result per input token, in order. Unknown is allowed.
  virtual std::vector<TaggedToken> tag(std::span<const Token> tokens) const = 0;
};

struct LexiconEntry {
  MorphTag tag = MorphTag::Unknown;
  std::string citation;
};

// Default analyzer: a tab-separated lexicon `token  tag  [citation]`.
class LexiconMorphAnalyzer : public MorphAnalyzer {
 public:
  LexiconMorphAnalyzer() = default;

  static LexiconMorphAnalyzer load(const std::filesystem::path& path);

  void add(std::string_view word, MorphTag tag, std::string_view citation = {});
  std::optional<LexiconEntry> lookup(std::string_view normalized) const;
  const std::unordered_map<std::string, LexiconEntry>& entries() const { return entries_; }

  std::vector<TaggedToken> tag(std::span<const Token> tokens) const override;

 private:
  std::unordered_map<std::string, LexiconEntry> entries_;
};

// Runs the analyzer, then resolves every Unknown: punctuation and stopwords
// become Particle, the first token becomes Verb when `verb_initial` is set,
// anything else becomes Noun. Throws InvalidQuestion on empty input.
std::vector<TaggedToken> tag_tokens(std::span<const Token> tokens, const MorphAnalyzer& analyzer,
                                    const Stopwords& stopwords, bool verb_initial);

std::vector<TaggedToken> tag_morphology(std::string_view declarative,
                                        const MorphAnalyzer& analyzer,
                                        const Stopwords& stopwords, bool verb_initial);

}  // namespace aqa
