// The tri-state checker for the relation "the pair (a, b) realizes phi"
// over finite names. Implication, negation, and unbounded quantifiers
// range over an explicit pool; verdicts record how they were bounded.

#ifndef EXTREAL_REALIZABILITY_HPP
#define EXTREAL_REALIZABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "extreal/formula.hpp"

namespace extreal {

struct Pool {
  enum class Provenance : uint8_t { Explicit, TermEnum };

  // candidate realizer pairs for implication premises and negation
  std::vector<std::pair<Element, Element>> pairs;
  // fragment of the name universe for unbounded quantifiers
  std::vector<Name> universe;
  Provenance provenance = Provenance::Explicit;
  uint64_t size_bound = 0;  // term enumeration cutoff (atom count)
  // atoms used by the term enumerator
  std::vector<Element> alphabet;
  // the caller vouches that `universe` is exhaustive for this query
  bool universe_exhaustive = false;

  static Pool explicit_pairs(std::vector<std::pair<Element, Element>> pairs,
                             std::vector<Name> universe = {}, bool exhaustive = false);
  static Pool enumeration(uint64_t size_bound,
                          std::vector<std::pair<Element, Element>> seed_pairs = {},
                          std::vector<Name> universe = {});
  static std::vector<Element> default_alphabet();
};

struct TraceNode {
  std::string clause;
  std::string note;
  TriState state;
  std::vector<TraceNode> children;
};

struct Verdict {
  TriState state;
  TraceNode trace;
  uint64_t checked_pairs = 0;  // realizer pairs consulted (pool + enumeration)
  std::string digest() const;  // stable hash of the trace tree
};

// Does (a, b) realize phi? phi must be closed under env.
Verdict check(const Element& a, const Element& b, const Formula& phi, const Pool& pool,
              const Bounds& bounds, const NameExpr::Env& env = {});

struct SearchHit {
  Element a, b;
  Verdict verdict;
  uint64_t candidates_tried = 0;
};

// Scans pool pairs, then (for enumeration pools) closed values up to the
// size bound, applied diagonally. Absence of a hit is evidence up to the
// recorded bound, nothing stronger.
std::optional<SearchHit> search(const Formula& phi, const Pool& pool, const Bounds& bounds);

// Number of values the enumerator would visit at this bound (diagnostics).
std::vector<Element> enumerate_values(const std::vector<Element>& alphabet, uint64_t max_atoms);

// Pairing-realizer laws checked on a grid of small names. Each instance
// records the formula, the verdict, and which realizer was used.
struct PairsLemmaInstance {
  std::string description;
  TriState state;
};
struct PairsLemmaReport {
  std::vector<PairsLemmaInstance> instances;
  bool all_ok() const;
};
PairsLemmaReport check_pairs_lemma(const Bounds& bounds);

// Compares realizable equality of embedded names with the element relation:
// agreement means either a realizer was found and elem_equiv holds, or the
// bounded search came up empty and elem_equiv refutes.
enum class InjAgreement : uint8_t { Agree, Disagree, Unknown, Vacuous };
InjAgreement check_inj_converse(const Element& a, const Element& b, const TypeCode& sigma,
                                const Pool& pool, const Bounds& bounds);

}  // namespace extreal

#endif
