#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "aqa/corpus.hpp"

namespace aqa {

// Non-negative fraction in lowest terms.
class Ratio {
 public:
  Ratio(std::uint64_t numerator, std::uint64_t denominator);

  std::uint64_t numerator() const { return num_; }
  std::uint64_t denominator() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "n/d"
  std::string str() const;
  // Decimal truncated (never rounded) to `places` digits: 74/115 -> "0.64".
  std::string truncated(int places = 2) const;

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

struct LogicEvalCounts {
  std::uint64_t ct = 0;
  std::uint64_t tq = 0;
};

struct AnswerEvalCounts {
  std::uint64_t ca = 0;
  std::uint64_t uq = 0;
  std::uint64_t tq = 0;
};

// All three throw InvalidCounts unless TQ >= 1, CT <= TQ and CA + UQ <= TQ.
Ratio logic_accuracy(const LogicEvalCounts& c);
Ratio answer_accuracy(const AnswerEvalCounts& c);
// (CA + UQ * CA / TQ) / TQ
Ratio c_at_1(const AnswerEvalCounts& c);

struct FailureBreakdown {
  std::uint64_t ner_errors = 0;
  std::uint64_t declarative_errors = 0;
  std::uint64_t no_logic_form = 0;

  std::uint64_t total() const { return ner_errors + declarative_errors + no_logic_form; }
};

struct EvalReport {
  std::optional<LogicEvalCounts> logic_counts;
  std::optional<AnswerEvalCounts> answer_counts;
  std::uint64_t incorrect = 0;  // answered with a wrong candidate
  std::optional<Ratio> logic_accuracy;
  std::optional<Ratio> answer_accuracy;
  std::optional<Ratio> c_at_1;
  std::optional<FailureBreakdown> failure_breakdown;
};

// Builds a report from raw counts; `breakdown` must sum to TQ - CT.
EvalReport make_report(std::optional<LogicEvalCounts> logic, std::optional<AnswerEvalCounts> answers,
                       std::optional<FailureBreakdown> breakdown = std::nullopt);

// Gold logic forms keyed by question id.
using GoldLogicForms = std::map<std::string, std::string, std::less<>>;

// `id<TAB>rendered` per line; blank and '#' lines skipped. Throws IoError or
// SchemaError.
GoldLogicForms load_gold_logic_forms(const std::filesystem::path& path);
GoldLogicForms parse_gold_logic_forms(std::string_view content);

// CA = answer_found entries; UQ = entries without answer and without any
// surviving passage; CT = entries whose rendered form equals the gold string.
// Logic counts are only computed when gold forms are given. Throws
// InvalidCounts on an empty corpus.
EvalReport evaluate_run(std::span<const CorpusEntry> entries,
                        const GoldLogicForms* gold = nullptr);

// One JSON object on a single line.
std::string report_json(const EvalReport& report);

}  // namespace aqa
