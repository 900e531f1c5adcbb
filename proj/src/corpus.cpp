#include "aqa/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aqa/errors.hpp"

namespace aqa {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(-1, ' ', false, Json::error_handler_t::replace); }

class Record {
 public:
  Record(const Json& json, std::size_t line) : json_(json), line_(line) {}

  [[noreturn]] void fail(const std::string& what) const { throw SchemaError(line_, what); }

  const Json* find(const char* key) const {
    const auto it = json_.find(key);
    return it == json_.end() || it->is_null() ? nullptr : &*it;
  }

  const Json& require(const char* key) const {
    const Json* j = find(key);
    if (j == nullptr) fail(std::string("missing field '") + key + "'");
    return *j;
  }

  std::string string(const char* key) const { return as_string(require(key), key); }

  std::optional<std::string> optional_string(const char* key) const {
    const Json* j = find(key);
    if (j == nullptr) return std::nullopt;
    return as_string(*j, key);
  }

  bool boolean(const char* key) const {
    const Json& j = require(key);
    if (!j.is_boolean()) fail(std::string("field '") + key + "' must be a boolean");
    return j.get<bool>();
  }

  std::vector<std::string> strings(const char* key) const {
    const Json& j = require(key);
    if (!j.is_array()) fail(std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& item : j) out.push_back(as_string(item, key));
    return out;
  }

  std::size_t line() const { return line_; }

 private:
  std::string as_string(const Json& j, const char* key) const {
    if (!j.is_string()) fail(std::string("field '") + key + "' must be a string");
    return j.get<std::string>();
  }

  const Json& json_;
  std::size_t line_;
};

std::size_t unsigned_field(const Record& parent, const Json& obj, const char* key, bool required) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    if (required) parent.fail(std::string("passage is missing '") + key + "'");
    return 0;
  }
  if (!it->is_number_unsigned()) {
    parent.fail(std::string("passage field '") + key + "' must be a non-negative integer");
  }
  return it->get<std::size_t>();
}

Json passage_json(const Passage& p) {
  Json j;
  j["text"] = p.text;
  j["source_url"] = p.source_url;
  j["score"] = p.score;
  j["source_rank"] = p.source_rank;
  j["position"] = p.position;
  j["keyword_hits"] = p.keyword_hits;
  j["focus_hit"] = p.focus_hit;
  j["ne_validated"] = p.ne_validated;
  return j;
}

Passage parse_passage(const Record& parent, const Json& j) {
  if (!j.is_object()) parent.fail("passage must be an object");
  const Record r(j, parent.line());
  Passage p;
  p.text = r.string("text");
  p.source_url = r.string("source_url");
  p.score = unsigned_field(parent, j, "score", true);
  p.source_rank = unsigned_field(parent, j, "source_rank", false);
  p.position = unsigned_field(parent, j, "position", false);
  p.keyword_hits = unsigned_field(parent, j, "keyword_hits", false);
  if (r.find("focus_hit") != nullptr) p.focus_hit = r.boolean("focus_hit");
  if (r.find("ne_validated") != nullptr) p.ne_validated = r.boolean("ne_validated");
  return p;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buffer.str();
}

template <typename Fn>
void for_each_line(const std::string& content, Fn&& fn) {
  std::size_t start = 0;
  std::size_t number = 0;
  while (start < content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    std::string_view line(content.data() + start, end - start);
    if (line.ends_with('\r')) line.remove_suffix(1);
    fn(line, ++number);
    start = end + 1;
  }
}

bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

}  // namespace

bool answer_in_text(const CorpusEntry& entry, std::string_view candidate) {
  const auto& gold = entry.question.gold_answer;
  const std::string needle = gold ? normalize(*gold) : std::string();
  if (needle.empty()) throw MissingGoldAnswer(entry.question.id);
  return normalize(candidate).find(needle) != std::string::npos;
}

bool validate_entry(CorpusEntry& entry, std::string_view candidate) {
  if (!answer_in_text(entry, candidate)) return false;
  entry.answer_found = true;
  entry.validated_text = std::string(candidate);
  return true;
}

bool validate_entry(CorpusEntry& entry, std::span<const std::string> candidates) {
  if (!entry.question.gold_answer || normalize(*entry.question.gold_answer).empty()) {
    throw MissingGoldAnswer(entry.question.id);
  }
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](const std::string& c) { return validate_entry(entry, c); });
}

std::vector<std::string> candidate_texts(const RetrievalResult& result) {
  std::vector<std::string> out;
  if (result.passages.empty()) return out;
  const auto& top_url = result.passages.front().source_url;
  for (const auto& doc : result.documents) {
    if (doc.source.url == top_url) out.push_back(doc.text);
  }
  for (const auto& doc : result.documents) {
    if (doc.source.url != top_url) out.push_back(doc.text);
  }
  return out;
}

CorpusEntry make_entry(const Question& question, const RetrievalResult& result,
                       const MorphAnalyzer& morph, const Stopwords& stopwords) {
  CorpusEntry entry;
  entry.question = question;
  entry.analysis = result.analysis;
  entry.passages = result.passages;
  try {
    entry.logic_form = logic_form_for(result.analysis, morph, stopwords);
  } catch (const LinguisticError&) {
    entry.logic_form.reset();
  }
  return entry;
}

std::string corpus_record(const CorpusEntry& e) {
  Json j;
  j["id"] = e.question.id;
  j["question_text"] = e.question.text;
  j["source"] = to_string(e.question.source);
  j["domain"] = to_string(e.question.domain);
  if (e.question.gold_answer) j["gold_answer"] = *e.question.gold_answer;
  j["keywords"] = e.analysis.keywords;
  j["focus"] = e.analysis.focus_text();
  j["expected_answer_type"] = to_string(e.analysis.expected_answer_type);
  j["declarative_form"] = e.analysis.declarative_form;
  if (e.logic_form) j["logic_form_rendered"] = render(*e.logic_form);
  j["answer_found"] = e.answer_found;
  if (e.validated_text) j["validated_text"] = *e.validated_text;
  j["passages"] = Json::array();
  for (const auto& p : e.passages) j["passages"].push_back(passage_json(p));
  return dump(j);
}

CorpusEntry parse_corpus_record(std::string_view line, std::size_t line_number) {
  const Json json = Json::parse(line, nullptr, false);
  if (json.is_discarded()) throw SchemaError(line_number, "malformed JSON record");
  if (!json.is_object()) throw SchemaError(line_number, "record must be a JSON object");
  const Record r(json, line_number);

  CorpusEntry e;
  e.question.id = r.string("id");
  e.question.text = r.string("question_text");
  const auto source = r.string("source");
  const auto domain = r.string("domain");
  const auto eat = r.string("expected_answer_type");
  if (auto s = parse_source(source)) e.question.source = *s; else r.fail("unknown source '" + source + "'");
  if (auto d = parse_domain(domain)) e.question.domain = *d; else r.fail("unknown domain '" + domain + "'");
  e.question.gold_answer = r.optional_string("gold_answer");

  if (auto t = parse_answer_type(eat)) {
    e.analysis.expected_answer_type = *t;
    e.analysis.question_type = *t;
  } else {
    r.fail("unknown expected_answer_type '" + eat + "'");
  }
  try {
    e.analysis.interrogative_particle = detect_interrogative(e.question.text).particle;
  } catch (const LinguisticError& err) {
    r.fail(err.what());
  }
  e.analysis.keywords = r.strings("keywords");
  e.analysis.focus = split_words(r.string("focus"));
  e.analysis.declarative_form = r.string("declarative_form");

  if (auto rendered = r.optional_string("logic_form_rendered")) {
    try {
      e.logic_form = parse_logic_form(*rendered);
    } catch (const ParseError& err) {
      r.fail(std::string("logic_form_rendered: ") + err.what());
    }
  }
  e.answer_found = r.boolean("answer_found");
  e.validated_text = r.optional_string("validated_text");

  const Json& passages = r.require("passages");
  if (!passages.is_array()) r.fail("field 'passages' must be an array");
  for (const auto& p : passages) e.passages.push_back(parse_passage(r, p));

  if (e.answer_found && (!e.validated_text || !e.question.gold_answer)) {
    r.fail("answer_found requires validated_text and gold_answer");
  }
  return e;
}

void save_corpus(std::span<const CorpusEntry> entries, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& e : entries) out << corpus_record(e) << '\n';
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  std::vector<CorpusEntry> entries;
  for_each_line(content, [&](std::string_view line, std::size_t number) {
    if (!blank(line)) entries.push_back(parse_corpus_record(line, number));
  });
  return entries;
}

CorpusStats corpus_stats(std::span<const CorpusEntry> entries) {
  CorpusStats stats;
  for (const auto& e : entries) {
    ++stats.by_source[static_cast<std::size_t>(e.question.source)];
    ++stats.by_domain[static_cast<std::size_t>(e.question.domain)];
    ++stats.total;
  }
  return stats;
}

std::vector<Question> read_questions(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  std::vector<Question> out;
  for_each_line(content, [&](std::string_view line, std::size_t number) {
    if (blank(line) || line.front() == '#') return;
    Question q;
    q.id = "q" + std::to_string(number);
    if (line.front() != '{') {
      q.text = std::string(line);
      out.push_back(std::move(q));
      return;
    }
    const Json json = Json::parse(line, nullptr, false);
    if (json.is_discarded() || !json.is_object()) throw SchemaError(number, "malformed question record");
    const Record r(json, number);
    q.text = r.string("question_text");
    if (auto id = r.optional_string("id")) q.id = *id;
    if (auto s = r.optional_string("source")) {
      const auto parsed = parse_source(*s);
      if (!parsed) r.fail("unknown source '" + *s + "'");
      q.source = *parsed;
    }
    if (auto d = r.optional_string("domain")) {
      const auto parsed = parse_domain(*d);
      if (!parsed) r.fail("unknown domain '" + *d + "'");
      q.domain = *parsed;
    }
    q.gold_answer = r.optional_string("gold_answer");
    out.push_back(std::move(q));
  });
  return out;
}

}  // namespace aqa
