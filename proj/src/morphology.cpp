#include "aqa/morphology.hpp"

#include <fstream>

#include "aqa/errors.hpp"

namespace aqa {

std::string_view to_string(MorphTag tag) {
  switch (tag) {
    case MorphTag::Verb:
      return "VERB";
    case MorphTag::Noun:
      return "NOUN";
    case MorphTag::Particle:
      return "PARTICLE";
    case MorphTag::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::optional<MorphTag> parse_morph_tag(std::string_view name) {
  if (name == "VERB") return MorphTag::Verb;
  if (name == "NOUN") return MorphTag::Noun;
  if (name == "PARTICLE") return MorphTag::Particle;
  if (name == "UNKNOWN") return MorphTag::Unknown;
  return std::nullopt;
}

LexiconMorphAnalyzer LexiconMorphAnalyzer::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());

  LexiconMorphAnalyzer lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (cols.size() < 2 || cols.size() > 3) {
      throw SchemaError(line_no, path.filename().string() + ": expected 2 or 3 tab-separated columns");
    }
    const auto tag = parse_morph_tag(cols[1]);
    if (!tag) throw SchemaError(line_no, "unknown tag '" + cols[1] + "'");
    lexicon.add(cols[0], *tag, cols.size() == 3 ? cols[2] : std::string());
  }
  return lexicon;
}

void LexiconMorphAnalyzer::add(std::string_view word, MorphTag tag, std::string_view citation) {
  auto key = normalize(word);
  if (key.empty()) return;
  entries_[std::move(key)] = LexiconEntry{tag, normalize(citation)};
}

std::optional<LexiconEntry> LexiconMorphAnalyzer::lookup(std::string_view normalized) const {
  const auto it = entries_.find(std::string(normalized));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<TaggedToken> LexiconMorphAnalyzer::tag(std::span<const Token> tokens) const {
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    TaggedToken tagged{token, MorphTag::Unknown, {}};
    if (token.punctuation) {
      tagged.tag = MorphTag::Particle;
    } else if (auto entry = lookup(token.normalized)) {
      tagged.tag = entry->tag;
      tagged.citation = entry->citation;
    }
    out.push_back(std::move(tagged));
  }
  return out;
}

std::vector<TaggedToken> tag_tokens(std::span<const Token> tokens, const MorphAnalyzer& analyzer,
                                    const Stopwords& stopwords, bool verb_initial) {
  if (tokens.empty()) throw InvalidQuestion("cannot tag an empty declarative form");

  auto tagged = analyzer.tag(tokens);
  if (tagged.size() != tokens.size()) {
    throw Error("morphological analyzer returned " + std::to_string(tagged.size()) +
                " tags for " + std::to_string(tokens.size()) + " tokens");
  }
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    auto& t = tagged[i];
    if (t.tag != MorphTag::Unknown) continue;
    if (t.token.punctuation || t.token.normalized.empty() || stopwords.is_stopword(t.token)) {
      t.tag = MorphTag::Particle;
    } else if (verb_initial && i == 0) {
      t.tag = MorphTag::Verb;
    } else {
      t.tag = MorphTag::Noun;
    }
  }
  return tagged;
}

std::vector<TaggedToken> tag_morphology(std::string_view declarative,
                                        const MorphAnalyzer& analyzer,
                                        const Stopwords& stopwords, bool verb_initial) {
  const auto tokens = tokenize(declarative);
  return tag_tokens(tokens, analyzer, stopwords, verb_initial);
}

}  // namespace aqa
