#include "aqa/logic_form.hpp"

#include <algorithm>
#include <set>

#include "aqa/errors.hpp"

namespace aqa {

namespace {

constexpr std::string_view kExists = "∃";
constexpr std::string_view kAnd = " ∧ ";

const std::string& functor_of(const TaggedToken& t) {
  return t.citation.empty() ? t.token.normalized : t.citation;
}

std::optional<Variable> parse_variable(std::string_view s) {
  if (s == "X") return Variable::X;
  if (s == "Y") return Variable::Y;
  if (s == "Z") return Variable::Z;
  return std::nullopt;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

Predicate parse_predicate(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || open == 0 || text.back() != ')') {
    throw ParseError("malformed predicate '" + std::string(text) + "'");
  }
  Predicate p;
  p.functor = std::string(text.substr(0, open));
  if (p.functor.find(' ') != std::string::npos) {
    throw ParseError("functor contains whitespace: '" + p.functor + "'");
  }
  std::string_view args = text.substr(open + 1, text.size() - open - 2);
  while (true) {
    const auto comma = args.find(',');
    const auto name = trim(args.substr(0, comma));
    const auto var = parse_variable(name);
    if (!var) throw ParseError("bad argument '" + std::string(name) + "' in " + std::string(text));
    p.args.push_back(*var);
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return p;
}

}  // namespace

std::string_view answer_functor(AnswerType type) {
  switch (type) {
    case AnswerType::Person:
      return "PERSON";
    case AnswerType::Location:
      return "LOCATION";
    case AnswerType::Date:
      return "DATE";
    case AnswerType::Organization:
      return "ORGANIZATION";
    case AnswerType::NumericExpression:
      return "NUMERICAL_EXPRESSION";
  }
  return "PERSON";
}

bool is_answer_functor(std::string_view functor) {
  return std::any_of(kAnswerTypes.begin(), kAnswerTypes.end(),
                     [&](AnswerType t) { return answer_functor(t) == functor; });
}

LogicForm generate_logic_form(const QuestionAnalysis& analysis,
                              std::span<const TaggedToken> tagged) {
  using enum Variable;

  const TaggedToken* verb = nullptr;
  std::vector<const TaggedToken*> nouns;
  for (const auto& t : tagged) {
    if (t.tag == MorphTag::Verb && verb == nullptr) verb = &t;
    if (t.tag == MorphTag::Noun) nouns.push_back(&t);
  }

  const auto type = analysis.question_type;
  if (expects_verb(type) && verb == nullptr) throw MissingVerb(analysis.declarative_form);
  if (nouns.empty()) throw MissingNoun(analysis.declarative_form);

  LogicForm form;
  form.conjuncts.push_back({std::string(answer_functor(type)), {X}});

  auto unary = [&](std::span<const TaggedToken* const> words, Variable v) {
    for (const auto* w : words) form.conjuncts.push_back({functor_of(*w), {v}});
  };

  switch (type) {
    case AnswerType::Person:
      form.quantified = {X, Y};
      form.conjuncts.push_back({functor_of(*verb), {X, Y}});
      unary(nouns, Y);
      break;
    case AnswerType::Location:
    case AnswerType::Date:
      form.quantified = {X, Y};
      form.conjuncts.push_back({functor_of(*verb), {Y, X}});
      unary(nouns, Y);
      break;
    case AnswerType::Organization:
      form.quantified = {X, Y};
      form.conjuncts.push_back({functor_of(*nouns.front()), {Y, X}});
      unary(std::span(nouns).subspan(1), Y);
      break;
    case AnswerType::NumericExpression:
      if (nouns.size() < 2) {
        // No complement noun for Z: fall back to the two-place pattern.
        form.quantified = {X, Y};
        form.conjuncts.push_back({functor_of(*verb), {Y, X}});
        unary(nouns, Y);
        break;
      }
      form.quantified = {X, Y, Z};
      form.conjuncts.push_back({functor_of(*verb), {Y, Z, X}});
      form.conjuncts.push_back({functor_of(*nouns.front()), {Y}});
      unary(std::span(nouns).subspan(1), Z);
      break;
  }
  return form;
}

std::string render(const LogicForm& form) {
  std::string out;
  for (auto v : form.quantified) {
    out += kExists;
    out.push_back(static_cast<char>(v));
    out += ", ";
  }
  for (std::size_t i = 0; i < form.conjuncts.size(); ++i) {
    if (i > 0) out += kAnd;
    const auto& p = form.conjuncts[i];
    out += p.functor;
    out.push_back('(');
    for (std::size_t a = 0; a < p.args.size(); ++a) {
      if (a > 0) out.push_back(',');
      out.push_back(static_cast<char>(p.args[a]));
    }
    out.push_back(')');
  }
  return out;
}

LogicForm parse_logic_form(std::string_view text) {
  LogicForm form;
  std::string_view rest = text;
  while (rest.starts_with(kExists)) {
    rest.remove_prefix(kExists.size());
    const auto comma = rest.find(", ");
    if (comma == std::string_view::npos) throw ParseError("unterminated quantifier in: " + std::string(text));
    const auto var = parse_variable(rest.substr(0, comma));
    if (!var) throw ParseError("bad quantified variable in: " + std::string(text));
    form.quantified.push_back(*var);
    rest.remove_prefix(comma + 2);
  }
  if (form.quantified.empty()) throw ParseError("no quantifier in: " + std::string(text));
  if (rest.empty()) throw ParseError("no conjuncts in: " + std::string(text));

  while (true) {
    const auto sep = rest.find(kAnd);
    form.conjuncts.push_back(parse_predicate(rest.substr(0, sep)));
    if (sep == std::string_view::npos) break;
    rest.remove_prefix(sep + kAnd.size());
  }
  return form;
}

std::optional<std::string> find_violation(const LogicForm& form) {
  if (form.conjuncts.empty()) return "no conjuncts";
  const std::set<Variable> quantified(form.quantified.begin(), form.quantified.end());
  if (quantified.size() != form.quantified.size()) return "variable quantified twice";

  std::set<Variable> used;
  std::size_t answer_predicates = 0;
  for (const auto& p : form.conjuncts) {
    if (p.args.empty() || p.args.size() > 3) return "arity of " + p.functor + " outside 1..3";
    used.insert(p.args.begin(), p.args.end());
    if (is_answer_functor(p.functor)) {
      ++answer_predicates;
      if (p.args != std::vector{Variable::X}) return "answer predicate must be unary over X";
    }
  }
  if (answer_predicates != 1) return "expected exactly one answer-type predicate";
  if (!is_answer_functor(form.conjuncts.front().functor)) return "answer predicate is not first";
  if (used != quantified) return "quantified variables differ from used variables";
  return std::nullopt;
}

LogicForm logic_form_for(const QuestionAnalysis& analysis, const MorphAnalyzer& morph,
                         const Stopwords& stopwords) {
  const auto tagged = tag_morphology(analysis.declarative_form, morph, stopwords,
                                     expects_verb(analysis.expected_answer_type));
  return generate_logic_form(analysis, tagged);
}

}  // namespace aqa
