// Finite names: sets of triples (element, element, child name), the common
// currency of the realizability checker. Names are immutable, entries are
// kept sorted and deduplicated, and equality is structural (generator
// metadata is provenance only).

#ifndef EXTREAL_NAME_HPP
#define EXTREAL_NAME_HPP

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "extreal/equiv.hpp"
#include "extreal/term.hpp"
#include "extreal/typecode.hpp"

namespace extreal {

struct NotInType : std::runtime_error {
  explicit NotInType(const std::string& what) : std::runtime_error(what) {}
};

class Name {
public:
  struct Entry;  // (element, element, child name); defined below

  enum class Gen : uint8_t { None, NatCanonical, CheckOfSet, XOfType };

  Name() = default;  // the empty name

  // Entries are sorted and deduplicated on construction. `complete` states
  // that the entry list is the whole denoted set; generator-backed names
  // truncated at a bound say false.
  static Name make(std::vector<Entry> entries, bool complete = true,
                   Gen gen = Gen::None, uint64_t bound = 0);
  static const Name& empty();

  std::span<const Entry> entries() const;
  bool complete() const;
  Gen generator() const;
  uint64_t generator_bound() const;

  size_t rank() const;  // 0 for the empty name, else 1 + max child rank
  size_t hash() const;

  friend bool operator==(const Name& a, const Name& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Name& a, const Name& b) { return compare(a, b) != 0; }
  static int compare(const Name& a, const Name& b);

  std::string to_string() const;

  // Same entries, different completeness claim. Tests and pool files use
  // this to declare a truncated fragment exhaustive for a bounded check.
  Name with_complete(bool complete) const;

private:
  struct Node;
  std::shared_ptr<const Node> node_;  // nullptr encodes the empty name
};

struct Name::Entry {
  Element left, right;
  Name child;
};

struct NameHash {
  size_t operator()(const Name& n) const { return n.hash(); }
};

// Hereditarily finite set literals, canonicalized on construction.
class HfSet {
public:
  HfSet() = default;
  explicit HfSet(std::vector<HfSet> members);
  // Unambiguous builder; HfSet({x}) would pick the copy constructor.
  static HfSet of(std::vector<HfSet> members) { return HfSet(std::move(members)); }
  const std::vector<HfSet>& members() const { return members_; }
  static int compare(const HfSet& a, const HfSet& b);
  friend bool operator==(const HfSet& a, const HfSet& b) { return compare(a, b) == 0; }
  size_t rank() const;
  static HfSet number(uint64_t n);  // von Neumann numeral
  std::string to_string() const;

private:
  std::vector<HfSet> members_;  // sorted, deduplicated
};

// Canonical numeral names: dot(n) = {(m, m, dot(m)) | m < n}.
Name dot(uint64_t n);
// Truncated canonical name for the naturals, generator-backed.
Name dot_omega(uint64_t bound);

// Internal pairing: vset1(x) = {(0,0,x)}, vset2(x,y) = {(0,0,x),(1,1,y)},
// vpair(x,y) = {(0,0,vset1(x)), (1,1,vset2(x,y))}.
Name vset1(const Name& x);
Name vset2(const Name& x, const Name& y);
Name vpair(const Name& x, const Name& y);

// check(u) = {(0,0,check(v)) | v in u}.
Name check_name(const HfSet& u);

// The typed-element embedding. Requires elem_equiv(a, a, sigma) not
// refuted; refutation (or a stuck application on the way) throws NotInType.
// Truncated ingredient enumerations surface as complete() == false.
Name embed(const Element& a, const TypeCode& sigma, const Bounds& bounds);

// Canonical extension of a type and canonical family name:
//   x_of(sigma)      = {(a, b, embed(a, sigma)) | (a,b) in per(sigma)}
//   f_of(sigma, i)   = {(a, b, vpair(embed(a,sigma), x_of(i a))) | ...}
Name x_of(const TypeCode& sigma, const Bounds& bounds);
Name f_of(const TypeCode& sigma, const Element& family, const Bounds& bounds);

}  // namespace extreal

#endif
