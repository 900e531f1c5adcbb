// aqa: command-line front end for the question-answering pipeline.
//
// Exit codes: 0 success, 1 I/O or configuration error, 2 linguistic failure,
// 3 search provider failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aqa/config.hpp"
#include "aqa/corpus.hpp"
#include "aqa/errors.hpp"
#include "aqa/evaluation.hpp"
#include "aqa/logic_form.hpp"
#include "aqa/passages.hpp"

#ifndef AQA_DEFAULT_DATA_DIR
#define AQA_DEFAULT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

enum Exit : int { kOk = 0, kEnvironment = 1, kLinguistic = 2, kProvider = 3 };

struct Options {
  std::string config_path;
  std::string data_dir;
  std::string fixtures;
  std::size_t max_results = 0;
  std::string out;
  bool interactive = false;
  std::string input;
  std::string gold;
  std::vector<std::uint64_t> counts;
};

std::string dump(const Json& j) { return j.dump(-1, ' ', false, Json::error_handler_t::replace); }

aqa::Config effective_config(const Options& o) {
  aqa::Config config;
  if (!o.config_path.empty()) config = aqa::load_config(o.config_path);
  if (config.data_dir.empty()) config.data_dir = AQA_DEFAULT_DATA_DIR;
  if (!o.data_dir.empty()) config.data_dir = o.data_dir;
  if (!o.fixtures.empty()) config.search_endpoint = "fixture:" + o.fixtures;
  if (o.max_results != 0) config.max_results = o.max_results;
  return config;
}

// An existing file is a question list; anything else is one question.
std::vector<aqa::Question> questions_from(const std::string& input) {
  std::error_code ec;
  if (!input.empty() && fs::is_regular_file(input, ec)) return aqa::read_questions(input);
  aqa::Question q;
  q.id = "q1";
  q.text = input;
  return {q};
}

// Writes to --out when given, otherwise standard output.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw aqa::IoError("cannot write " + path);
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  void finish(const std::string& path) {
    stream().flush();
    if (!stream()) throw aqa::IoError("write failed" + (path.empty() ? std::string() : " for " + path));
  }

 private:
  std::ofstream file_;
};

Json analysis_json(const aqa::Question& q, const aqa::QuestionAnalysis& a) {
  Json j;
  j["id"] = q.id;
  j["question_text"] = q.text;
  j["interrogative_particle"] = a.interrogative_particle.surface;
  j["question_type"] = aqa::to_string(a.question_type);
  j["expected_answer_type"] = aqa::to_string(a.expected_answer_type);
  j["keywords"] = a.keywords;
  j["focus"] = a.focus_text();
  j["declarative_form"] = a.declarative_form;
  return j;
}

Json passage_json(const aqa::Passage& p, std::size_t rank) {
  Json j;
  j["rank"] = rank;
  j["score"] = p.score;
  j["keyword_hits"] = p.keyword_hits;
  j["focus_hit"] = p.focus_hit;
  j["ne_validated"] = p.ne_validated;
  j["source_rank"] = p.source_rank;
  j["position"] = p.position;
  j["source_url"] = p.source_url;
  j["text"] = p.text;
  return j;
}

void report_failures(const aqa::RetrievalResult& result) {
  for (const auto& f : result.failures) std::cerr << "skipped " << f.url << ": " << f.cause << '\n';
}

int cmd_analyze(const Options& o) {
  const auto config = effective_config(o);
  const auto resources = aqa::Resources::load(config.data_dir);
  Output out(o.out);
  int status = kOk;
  for (const auto& q : questions_from(o.input)) {
    try {
      out.stream() << dump(analysis_json(q, resources.analyzer().analyze(q))) << '\n';
    } catch (const aqa::LinguisticError& e) {
      std::cerr << q.id << ": " << e.what() << '\n';
      status = kLinguistic;
    }
  }
  out.finish(o.out);
  return status;
}

int cmd_logic(const Options& o) {
  const auto config = effective_config(o);
  const auto resources = aqa::Resources::load(config.data_dir);
  Output out(o.out);
  int status = kOk;
  for (const auto& q : questions_from(o.input)) {
    try {
      const auto analysis = resources.analyzer().analyze(q);
      const auto form = aqa::logic_form_for(analysis, resources.morph(), resources.stopwords());
      out.stream() << q.id << '\t' << aqa::render(form) << '\n';
    } catch (const aqa::LinguisticError& e) {
      std::cerr << q.id << ": " << e.what() << '\n';
      status = kLinguistic;
    }
  }
  out.finish(o.out);
  return status;
}

aqa::RetrievalOptions retrieval_options(const aqa::Config& config) {
  aqa::RetrievalOptions options;
  options.max_results = config.max_results;
  options.max_fetch_concurrency = config.max_fetch_concurrency;
  return options;
}

int cmd_retrieve(const Options& o) {
  const auto config = effective_config(o);
  const auto resources = aqa::Resources::load(config.data_dir);
  auto provider = aqa::make_provider(config);
  const auto fetcher = aqa::make_fetcher(config);
  const aqa::RetrievalDeps deps{resources.analyzer(), *provider, *fetcher, resources.recognizer()};

  aqa::Question q;
  q.id = "q1";
  q.text = o.input;
  const auto result = aqa::retrieve(q, deps, retrieval_options(config));
  report_failures(result);

  Output out(o.out);
  for (std::size_t i = 0; i < result.passages.size(); ++i) {
    out.stream() << dump(passage_json(result.passages[i], i + 1)) << '\n';
  }
  out.finish(o.out);
  return kOk;
}

int cmd_corpus_build(const Options& o) {
  const auto config = effective_config(o);
  const auto questions = aqa::read_questions(o.input);
  if (questions.empty()) throw aqa::IoError("no questions in " + o.input);
  const auto resources = aqa::Resources::load(config.data_dir);
  auto provider = aqa::make_provider(config);
  const auto fetcher = aqa::make_fetcher(config);
  const aqa::RetrievalDeps deps{resources.analyzer(), *provider, *fetcher, resources.recognizer()};

  std::vector<aqa::CorpusEntry> entries;
  int status = kOk;
  for (const auto& q : questions) {
    try {
      const auto result = aqa::retrieve(q, deps, retrieval_options(config));
      report_failures(result);
      auto entry = aqa::make_entry(q, result, resources.morph(), resources.stopwords());
      if (q.gold_answer && !aqa::normalize(*q.gold_answer).empty()) {
        aqa::validate_entry(entry, aqa::candidate_texts(result));
      }
      entries.push_back(std::move(entry));
    } catch (const aqa::LinguisticError& e) {
      std::cerr << q.id << ": " << e.what() << '\n';
      status = kLinguistic;
    }
  }

  Output out(o.out);
  for (const auto& e : entries) out.stream() << aqa::corpus_record(e) << '\n';
  out.finish(o.out);

  std::size_t found = 0;
  for (const auto& e : entries) found += e.answer_found ? 1 : 0;
  std::cerr << entries.size() << " entries, " << found << " with a validated answer\n";
  return status;
}

// Asks for the answer string of an entry without gold; empty means reject.
std::optional<std::string> prompt_answer(const aqa::CorpusEntry& e) {
  std::cerr << "\n[" << e.question.id << "] " << e.question.text << '\n';
  const std::size_t shown = std::min<std::size_t>(e.passages.size(), 3);
  for (std::size_t i = 0; i < shown; ++i) {
    std::cerr << "  " << (i + 1) << ". " << e.passages[i].text << '\n';
  }
  if (shown == 0) std::cerr << "  (no passages)\n";
  std::cerr << "answer as written in a passage (empty to reject): " << std::flush;
  std::string line;
  if (!std::getline(std::cin, line) || aqa::normalize(line).empty()) return std::nullopt;
  return line;
}

int cmd_corpus_validate(const Options& o) {
  auto entries = aqa::load_corpus(o.input);
  std::size_t validated = 0;
  std::size_t rejected = 0;
  std::size_t skipped = 0;
  for (auto& e : entries) {
    if (e.answer_found) {
      ++validated;
      continue;
    }
    const bool has_gold = e.question.gold_answer && !aqa::normalize(*e.question.gold_answer).empty();
    if (!has_gold) {
      if (!o.interactive) {
        ++skipped;
        continue;
      }
      auto answer = prompt_answer(e);
      if (!answer) {
        ++rejected;
        continue;
      }
      e.question.gold_answer = *answer;
    }
    std::vector<std::string> texts;
    for (const auto& p : e.passages) texts.push_back(p.text);
    if (aqa::validate_entry(e, texts)) {
      ++validated;
    } else {
      ++rejected;
    }
  }

  Output out(o.out);
  for (const auto& e : entries) out.stream() << aqa::corpus_record(e) << '\n';
  out.finish(o.out);
  std::cerr << entries.size() << " entries: " << validated << " validated, " << rejected
            << " without answer, " << skipped << " skipped (no gold answer)\n";
  return kOk;
}

int cmd_eval(const Options& o) {
  aqa::EvalReport report;
  if (!o.counts.empty()) {
    if (o.counts.size() != 4) throw aqa::ConfigError("--counts expects CT,CA,UQ,TQ");
    report = aqa::make_report(aqa::LogicEvalCounts{o.counts[0], o.counts[3]},
                              aqa::AnswerEvalCounts{o.counts[1], o.counts[2], o.counts[3]});
  } else {
    if (o.input.empty()) throw aqa::ConfigError("eval needs a corpus file or --counts");
    const auto entries = aqa::load_corpus(o.input);
    std::optional<aqa::GoldLogicForms> gold;
    if (!o.gold.empty()) gold = aqa::load_gold_logic_forms(o.gold);
    report = aqa::evaluate_run(entries, gold ? &*gold : nullptr);
  }
  Output out(o.out);
  out.stream() << aqa::report_json(report) << '\n';
  out.finish(o.out);
  return kOk;
}

int cmd_fixture_key(const Options& o) {
  const auto config = effective_config(o);
  const auto resources = aqa::Resources::load(config.data_dir);
  const auto query = aqa::build_query(resources.analyzer().analyze(o.input), config.max_results);
  std::cout << aqa::fixture_hash(aqa::query_fixture_key(query)) << '\t'
            << aqa::query_fixture_key(query) << '\n';
  return kOk;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const aqa::ProviderUnavailable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kProvider;
  } catch (const aqa::LinguisticError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kLinguistic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEnvironment;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arabic factoid question analysis, passage retrieval and corpus tooling"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--config", o.config_path, "key = value configuration file");
  app.add_option("--data-dir", o.data_dir, "directory with lexicon, gazetteer and stopword files");
  app.add_option("--fixtures", o.fixtures, "serve search results and pages from this fixture directory");
  app.add_option("--max-results", o.max_results, "number of search results to fetch")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "write output here instead of standard output");

  int status = kOk;
  auto add = [&](const char* name, const char* help, const char* input_help, int (*cmd)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, input_help);
    sub->callback([&, cmd] { status = guarded([&] { return cmd(o); }); });
    return sub;
  };

  add("analyze", "print the analysis of each question", "question text or question file",
      cmd_analyze);
  add("logic", "print id<TAB>logic form for each question", "question text or question file",
      cmd_logic);
  add("retrieve", "print ranked passages for one question", "question text", cmd_retrieve)
      ->get_option("input")
      ->required();
  add("corpus-build", "retrieve and validate every question of a file", "question file",
      cmd_corpus_build)
      ->get_option("input")
      ->required();
  auto* validate = add("corpus-validate", "re-check answers in a corpus file", "corpus file",
                       cmd_corpus_validate);
  validate->get_option("input")->required();
  validate->add_flag("--interactive", o.interactive, "prompt for answers missing a gold value");
  auto* eval = add("eval", "compute accuracy and c@1", "corpus file", cmd_eval);
  eval->add_option("--gold", o.gold, "gold logic forms, id<TAB>rendered per line");
  eval->add_option("--counts", o.counts, "evaluate raw counts instead: CT,CA,UQ,TQ")->delimiter(',');
  add("fixture-key", "print the fixture directory name for a question", "question text",
      cmd_fixture_key)
      ->get_option("input")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kEnvironment;
  }
  return status;
}
