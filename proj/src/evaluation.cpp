#include "aqa/evaluation.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "aqa/errors.hpp"

namespace aqa {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMaxTotal = std::uint64_t{1} << 31;

void check(const LogicEvalCounts& c) {
  if (c.tq == 0) throw InvalidCounts("TQ must be at least 1");
  if (c.tq >= kMaxTotal) throw InvalidCounts("TQ too large");
  if (c.ct > c.tq) throw InvalidCounts("CT exceeds TQ");
}

void check(const AnswerEvalCounts& c) {
  if (c.tq == 0) throw InvalidCounts("TQ must be at least 1");
  if (c.tq >= kMaxTotal) throw InvalidCounts("TQ too large");
  if (c.ca > c.tq || c.uq > c.tq || c.ca + c.uq > c.tq) throw InvalidCounts("CA + UQ exceeds TQ");
}

std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

Ratio::Ratio(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  const std::uint64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Ratio::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::string Ratio::truncated(int places) const {
  std::string out = std::to_string(num_ / den_);
  if (places <= 0) return out;
  out.push_back('.');
  std::uint64_t rem = num_ % den_;
  for (int k = 0; k < places; ++k) {
    const u128 scaled = static_cast<u128>(rem) * 10;
    out.push_back(static_cast<char>('0' + static_cast<int>(scaled / den_)));
    rem = static_cast<std::uint64_t>(scaled % den_);
  }
  return out;
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  return static_cast<u128>(a.num_) * b.den_ <=> static_cast<u128>(b.num_) * a.den_;
}

Ratio logic_accuracy(const LogicEvalCounts& c) {
  check(c);
  return {c.ct, c.tq};
}

Ratio answer_accuracy(const AnswerEvalCounts& c) {
  check(c);
  return {c.ca, c.tq};
}

Ratio c_at_1(const AnswerEvalCounts& c) {
  check(c);
  // (CA + UQ*CA/TQ)/TQ = CA*(TQ + UQ)/TQ^2; both fit in 64 bits for TQ < 2^31.
  return {c.ca * (c.tq + c.uq), c.tq * c.tq};
}

EvalReport make_report(std::optional<LogicEvalCounts> logic, std::optional<AnswerEvalCounts> answers,
                       std::optional<FailureBreakdown> breakdown) {
  EvalReport r;
  if (logic) {
    r.logic_counts = logic;
    r.logic_accuracy = aqa::logic_accuracy(*logic);
  }
  if (answers) {
    r.answer_counts = answers;
    r.answer_accuracy = aqa::answer_accuracy(*answers);
    r.c_at_1 = aqa::c_at_1(*answers);
    r.incorrect = answers->tq - answers->ca - answers->uq;
  }
  if (breakdown) {
    if (!logic) throw InvalidCounts("failure breakdown needs logic counts");
    if (breakdown->total() != logic->tq - logic->ct) {
      throw InvalidCounts("failure breakdown does not sum to TQ - CT");
    }
    r.failure_breakdown = breakdown;
  }
  return r;
}

GoldLogicForms parse_gold_logic_forms(std::string_view content) {
  GoldLogicForms gold;
  std::size_t start = 0;
  std::size_t number = 0;
  while (start < content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    const std::string line = trim(content.substr(start, end - start));
    ++number;
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw SchemaError(number, "expected id<TAB>logic form");
    auto id = trim(std::string_view(line).substr(0, tab));
    auto form = trim(std::string_view(line).substr(tab + 1));
    if (id.empty()) throw SchemaError(number, "empty question id");
    if (!gold.emplace(std::move(id), std::move(form)).second) {
      throw SchemaError(number, "duplicate question id");
    }
  }
  return gold;
}

GoldLogicForms load_gold_logic_forms(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_gold_logic_forms(buffer.str());
}

EvalReport evaluate_run(std::span<const CorpusEntry> entries, const GoldLogicForms* gold) {
  if (entries.empty()) throw InvalidCounts("TQ must be at least 1");
  AnswerEvalCounts answers;
  LogicEvalCounts logic;
  answers.tq = logic.tq = entries.size();
  for (const auto& e : entries) {
    if (e.answer_found) {
      ++answers.ca;
    } else if (e.passages.empty()) {
      ++answers.uq;
    }
    if (gold != nullptr && e.logic_form) {
      const auto it = gold->find(e.question.id);
      if (it != gold->end() && it->second == render(*e.logic_form)) ++logic.ct;
    }
  }
  return make_report(gold != nullptr ? std::optional(logic) : std::nullopt, answers);
}

std::string report_json(const EvalReport& r) {
  using Json = nlohmann::ordered_json;
  auto metric = [](const Ratio& ratio) {
    Json m;
    m["exact"] = ratio.str();
    m["display"] = ratio.truncated(2);
    return m;
  };

  Json j;
  const std::uint64_t tq = r.answer_counts ? r.answer_counts->tq : r.logic_counts ? r.logic_counts->tq : 0;
  j["TQ"] = tq;
  if (r.logic_counts) j["CT"] = r.logic_counts->ct;
  if (r.answer_counts) {
    j["CA"] = r.answer_counts->ca;
    j["UQ"] = r.answer_counts->uq;
    j["incorrect"] = r.incorrect;
  }
  if (r.logic_accuracy) j["logic_accuracy"] = metric(*r.logic_accuracy);
  if (r.answer_accuracy) j["answer_accuracy"] = metric(*r.answer_accuracy);
  if (r.c_at_1) j["c_at_1"] = metric(*r.c_at_1);
  if (r.failure_breakdown) {
    j["failure_breakdown"] = {{"ner_errors", r.failure_breakdown->ner_errors},
                              {"declarative_errors", r.failure_breakdown->declarative_errors},
                              {"no_logic_form", r.failure_breakdown->no_logic_form}};
  }
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

}  // namespace aqa
