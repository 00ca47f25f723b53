// Application terms over the combinator alphabet, plus primitive numerals.
// Terms are immutable; nodes are shared and carry a precomputed hash so that
// structural equality is cheap.

#ifndef EXTREAL_TERM_HPP
#define EXTREAL_TERM_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace extreal {

enum class Comb : uint8_t { K, S, P, P0, P1, Succ, Pred, D, Oracle };

std::string_view comb_name(Comb c);

class Term {
public:
  enum class Kind : uint8_t { Var, Const, Numeral, App };

  Term() = delete;

  static Term var(std::string name);
  static Term constant(Comb c);
  static Term numeral(uint64_t n);
  static Term app(Term fun, Term arg);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_numeral() const { return kind() == Kind::Numeral; }
  bool is_app() const { return kind() == Kind::App; }

  const std::string& var_name() const;
  Comb comb() const;
  uint64_t numeral_value() const;
  Term fun() const;
  Term arg() const;

  // True when the term contains no variables (cached per node).
  bool closed() const { return node_->closed; }
  size_t hash() const { return node_->hash; }

  // Curried application sugar: t(a)(b) builds ((t a) b).
  Term operator()(const Term& a) const { return app(*this, a); }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

  // Canonical total order (kind rank, then payload / children).
  static int compare(const Term& a, const Term& b);

  std::string to_string() const;

private:
  struct Node {
    Kind kind;
    bool closed;
    size_t hash;
    // payloads; only the one matching `kind` is meaningful
    std::string name;
    Comb comb = Comb::K;
    uint64_t num = 0;
    std::shared_ptr<const Node> fun, arg;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term wrap(std::shared_ptr<const Node> n) { return Term(std::move(n)); }
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  size_t operator()(const Term& t) const { return t.hash(); }
};

// Unwinds the application spine: returns the head (non-App) and fills
// `args` with the arguments left to right.
Term spine_head(const Term& t, std::vector<Term>& args);

// Applies `head` to `args` left-associatively.
Term spine_build(Term head, const std::vector<Term>& args, size_t from = 0);

// Capture-free substitution of `value` for Var(name). `value` must be closed.
Term substitute(const Term& t, const std::string& name, const Term& value);

bool occurs_free(const Term& t, const std::string& name);

// A term is a value when every spine head is an under-saturated constant
// (or a bare numeral) and all arguments are themselves values. Values are
// exactly the terms reduce() can return inside Defined.
bool is_value(const Term& t);

// Convenient term atoms.
namespace tm {
extern const Term K, S, P, P0, P1, SUCC, PRED, D, ORACLE;
Term num(uint64_t n);
Term v(std::string name);
}  // namespace tm

// Step budget for the rewrite engine. Decrements once per rule firing.
struct Fuel {
  uint64_t steps = 100000;
};

// An Element is a closed term in normal form (a value). The only public
// ways to obtain one are normalization (reduce) and the trusted factory,
// which checks the invariant.
class Element {
public:
  Element() = delete;
  static Element trusted(Term t);  // asserts closed value
  const Term& term() const { return term_; }
  size_t hash() const { return term_.hash(); }
  friend bool operator==(const Element& a, const Element& b) { return a.term_ == b.term_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  static int compare(const Element& a, const Element& b) { return Term::compare(a.term_, b.term_); }
  // Elements embed back into terms implicitly; an Element is a Term.
  operator const Term&() const { return term_; }
  Term operator()(const Term& a) const { return Term::app(term_, a); }
  std::string to_string() const { return term_.to_string(); }

private:
  explicit Element(Term t) : term_(std::move(t)) {}
  Term term_;
};

struct ElementHash {
  size_t operator()(const Element& e) const { return e.hash(); }
};

struct ElementPairHash {
  size_t operator()(const std::pair<Element, Element>& p) const {
    return p.first.hash() * 1000003u ^ p.second.hash();
  }
};

}  // namespace extreal

#endif
