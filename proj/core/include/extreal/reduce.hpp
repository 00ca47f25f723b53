// Deterministic normal-order rewriting for closed combinator terms.
//
// Rules (one fuel unit each):
//   K a b          -> a
//   S a b c        -> a c (b c)
//   P a b c        -> c a b           (P a b is a value: pairs are lazy)
//   P0 (P a b)     -> a               (argument is weak-head-evaluated first)
//   P1 (P a b)     -> b
//   SUCC n         -> n+1
//   PRED n+1       -> n
//   D n m a b      -> a  if n = m, else b
//   ORACLE n       -> m  when an oracle graph with (n,m) is supplied
//
// Evaluation drives the leftmost-outermost redex: head rules fire first;
// once a spine head is an under-saturated constant the arguments are
// normalized left to right. Stuck means no rule can ever apply at a needed
// position (numeral applied to something, PRED 0, D on non-numerals,
// P0/P1 on a non-pair, ORACLE outside oracle mode). FuelOut means the
// budget ran out; it is reported, never conflated with Stuck.

#ifndef EXTREAL_REDUCE_HPP
#define EXTREAL_REDUCE_HPP

#include <optional>
#include <span>
#include <utility>

#include "extreal/term.hpp"

namespace extreal {

// Sorted association list (n, m); the oracle rule consults it.
using OracleView = std::span<const std::pair<uint64_t, uint64_t>>;

struct EvalOutcome {
  enum class Kind : uint8_t { Defined, Stuck, FuelOut, NeedsOracle };
  Kind kind;
  std::optional<Element> value;  // set iff Defined
  uint64_t oracle_key = 0;       // set iff NeedsOracle
  uint64_t steps_used = 0;

  bool defined() const { return kind == Kind::Defined; }
  bool stuck() const { return kind == Kind::Stuck; }
  bool fuel_out() const { return kind == Kind::FuelOut; }
  bool needs_oracle() const { return kind == Kind::NeedsOracle; }
};

// Normalize a closed term. Throws std::logic_error on open terms.
EvalOutcome reduce(const Term& t, Fuel fuel);

// Same engine with the ORACLE rule enabled against `oracle`. When ORACLE
// is applied to a numeral outside the graph the result is NeedsOracle.
EvalOutcome reduce(const Term& t, Fuel fuel, OracleView oracle);

EvalOutcome apply(const Element& a, const Element& b, Fuel fuel);

// Normalizes (f a1 a2 ... an).
EvalOutcome apply_spine(const Element& f, std::span<const Element> args, Fuel fuel);

enum class KleeneResult : uint8_t { Agree, Disagree, Unknown };

// Kleene equality of two closed terms at the given budget: Agree when both
// are Defined with equal values or both Stuck; Disagree when one is Defined
// and the other Stuck or the values differ; Unknown when either runs out of
// fuel.
KleeneResult kleene_eq(const Term& t, const Term& s, Fuel fuel);

// Shorthand: normalize and demand Defined; throws std::runtime_error
// otherwise. Used where a construction is known to terminate.
Element eval_or_throw(const Term& t, Fuel fuel = Fuel{});

}  // namespace extreal

#endif
