// Partial equivalence relations of the type structure: equivalence of type
// codes, clause-directed element equivalence, and bounded enumeration of
// canonical inhabitants.

#ifndef EXTREAL_EQUIV_HPP
#define EXTREAL_EQUIV_HPP

#include <vector>

#include "extreal/reduce.hpp"
#include "extreal/typecode.hpp"

namespace extreal {

struct Bounds {
  Fuel fuel{100000};
  uint64_t enum_bound = 3;  // numeral cutoff when enumerating Nat
  uint64_t w_depth = 6;     // structural recursion cutoff for W elements
};

enum class Tri : uint8_t { Holds, Refuted, Unknown };
enum class UnknownReason : uint8_t { None, Fuel, EnumBound };

struct TriState {
  Tri v = Tri::Unknown;
  UnknownReason why = UnknownReason::None;

  bool holds() const { return v == Tri::Holds; }
  bool refuted() const { return v == Tri::Refuted; }
  bool unknown() const { return v == Tri::Unknown; }

  static TriState yes() { return {Tri::Holds, UnknownReason::None}; }
  static TriState no() { return {Tri::Refuted, UnknownReason::None}; }
  static TriState maybe(UnknownReason r) { return {Tri::Unknown, r}; }

  // Conjunction: refuted dominates, then unknown, then holds.
  TriState and_then(const TriState& o) const {
    if (refuted() || o.refuted()) return no();
    if (unknown()) return *this;
    if (o.unknown()) return o;
    return yes();
  }
  // Weakens holds to unknown (used when a quantifier range is truncated).
  TriState capped(UnknownReason r) const { return holds() ? maybe(r) : *this; }
};

const char* tri_name(Tri t);

// Canonical inhabitants of a type's relation, one representative per
// equivalence class, paired diagonally. `complete` means every class of
// the full relation is represented; enumerations of Nat and of most W
// types are truncated and say so.
struct Per {
  std::vector<std::pair<Element, Element>> pairs;
  bool complete = true;

  std::vector<Element> reps() const {
    std::vector<Element> out;
    out.reserve(pairs.size());
    for (const auto& pr : pairs) out.push_back(pr.first);
    return out;
  }
};

// Equivalence of type codes. Definite answers (holds/refuted) are stable
// under budget increases; unknown may resolve.
TriState type_equiv(const TypeCode& a, const TypeCode& b, const Bounds& bounds);

// Element equivalence at a type, following the clause for the head
// constructor. Any candidate elements are accepted, not only enumerated
// representatives.
TriState elem_equiv(const Element& a, const Element& b, const TypeCode& sigma,
                    const Bounds& bounds);

Per per_enumerate(const TypeCode& sigma, const Bounds& bounds);

// Family coherence: i a ~ j b for every (a, b) in per(sigma).
TriState family_equiv(const Element& i, const Element& j, const TypeCode& sigma,
                      const Bounds& bounds);

// Applies a family element to an argument and decodes the result.
// Fuel exhaustion reports unknown via the TriState out-parameter.
struct FamilyApp {
  TriState status;  // holds when ok
  std::optional<TypeCode> value;
};
FamilyApp apply_family(const Element& family, const Element& arg, const Bounds& bounds);

// Canonical table functions over matchable keys (numerals and pairs of
// matchable keys). tabulate_values builds the element sending keys[j] to
// values[j]; tabulator builds the closed combinator that expects the k
// values as arguments and reduces to the very same canonical shape.
std::optional<Element> tabulate_values(const std::vector<Element>& keys,
                                       const std::vector<Element>& values, Fuel fuel);
std::optional<Element> tabulator(const std::vector<Element>& keys, Fuel fuel);

}  // namespace extreal

#endif
