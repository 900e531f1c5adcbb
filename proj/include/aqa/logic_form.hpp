#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aqa/morphology.hpp"
#include "aqa/question.hpp"

namespace aqa {

// X is always the answer; Z only occurs in numeric-expression forms.
enum class Variable : char { X = 'X', Y = 'Y', Z = 'Z' };

struct Predicate {
  std::string functor;
  std::vector<Variable> args;

  std::size_t arity() const { return args.size(); }
  friend bool operator==(const Predicate&, const Predicate&) = default;
};

// Existentially quantified conjunction; the first conjunct is the answer-type
// predicate over X.
struct LogicForm {
  std::vector<Variable> quantified;
  std::vector<Predicate> conjuncts;

  friend bool operator==(const LogicForm&, const LogicForm&) = default;
};

// PERSON, LOCATION, DATE, ORGANIZATION or NUMERICAL_EXPRESSION.
std::string_view answer_functor(AnswerType type);
bool is_answer_functor(std::string_view functor);

// Builds the form for the question type:
//   PERSON        T(X) ∧ verb(X,Y) ∧ noun(Y)...
//   LOCATION/DATE T(X) ∧ verb(Y,X) ∧ noun(Y)...
//   ORGANIZATION  T(X) ∧ head(Y,X) ∧ noun(Y)...
//   NUMERIC       T(X) ∧ verb(Y,Z,X) ∧ head(Y) ∧ noun(Z)...
//                 (a single noun gives T(X) ∧ verb(Y,X) ∧ noun(Y))
// Only the first verb is used; particles are dropped. Throws MissingVerb or
// MissingNoun.
LogicForm generate_logic_form(const QuestionAnalysis& analysis, std::span<const TaggedToken> tagged);

// Tags the declarative form (verb-initial unless the type is ORGANIZATION)
// and generates the form.
LogicForm logic_form_for(const QuestionAnalysis& analysis, const MorphAnalyzer& morph,
                         const Stopwords& stopwords);

// "∃X, ∃Y, PERSON(X) ∧ صمم(X,Y) ∧ ..."
std::string render(const LogicForm& form);
inline std::string render_logic_form(const LogicForm& form) { return render(form); }

// Inverse of render(); throws ParseError.
LogicForm parse_logic_form(std::string_view text);

// Empty when the structural invariants hold, otherwise the first violation.
std::optional<std::string> find_violation(const LogicForm& form);

}  // namespace aqa
