// Formula trees for the set-theoretic language: membership and equality
// atoms over name expressions, connectives, bounded and unbounded
// quantifiers. The tree shape is shared between the realizability checker
// (atoms evaluate to names) and the forcing checker (atoms evaluate to
// condition-indexed names); FormulaT is parameterized by the atom
// expression type.

#ifndef EXTREAL_FORMULA_HPP
#define EXTREAL_FORMULA_HPP

#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "extreal/name.hpp"

namespace extreal {

template <class NE>
class FormulaT {
public:
  enum class Kind : uint8_t { Mem, Eq, And, Or, Not, Imp, AllIn, ExIn, All, Ex };

  static FormulaT mem(NE x, NE y) { return atom(Kind::Mem, std::move(x), std::move(y)); }
  static FormulaT eq(NE x, NE y) { return atom(Kind::Eq, std::move(x), std::move(y)); }
  static FormulaT conj(FormulaT a, FormulaT b) { return binop(Kind::And, std::move(a), std::move(b)); }
  static FormulaT disj(FormulaT a, FormulaT b) { return binop(Kind::Or, std::move(a), std::move(b)); }
  static FormulaT imp(FormulaT a, FormulaT b) { return binop(Kind::Imp, std::move(a), std::move(b)); }
  static FormulaT neg(FormulaT a) {
    FormulaT f;
    f.node_ = std::make_shared<Node>(Node{Kind::Not, {}, {}, "", std::move(a).node_, nullptr});
    return f;
  }
  static FormulaT all_in(std::string var, NE dom, FormulaT body) {
    return quant(Kind::AllIn, std::move(var), std::move(dom), std::move(body));
  }
  static FormulaT ex_in(std::string var, NE dom, FormulaT body) {
    return quant(Kind::ExIn, std::move(var), std::move(dom), std::move(body));
  }
  static FormulaT all(std::string var, FormulaT body) {
    FormulaT f;
    f.node_ = std::make_shared<Node>(
        Node{Kind::All, {}, {}, std::move(var), std::move(body).node_, nullptr});
    return f;
  }
  static FormulaT ex(std::string var, FormulaT body) {
    FormulaT f;
    f.node_ = std::make_shared<Node>(
        Node{Kind::Ex, {}, {}, std::move(var), std::move(body).node_, nullptr});
    return f;
  }

  // n-ary right-nested conjunction
  template <class... Fs>
  static FormulaT conj_all(FormulaT a, FormulaT b, Fs... rest) {
    if constexpr (sizeof...(rest) == 0) return conj(std::move(a), std::move(b));
    else return conj(std::move(a), conj_all(std::move(b), std::move(rest)...));
  }

  Kind kind() const { return node_->kind; }
  const NE& lhs() const { return *node_->x; }
  const NE& rhs() const { return *node_->y; }
  FormulaT left() const { return FormulaT(node_->a); }
  FormulaT right() const { return FormulaT(node_->b); }
  FormulaT body() const { return FormulaT(node_->a); }
  const std::string& var() const { return node_->var; }
  const NE& domain() const { return *node_->x; }

  bool is_atom() const { return kind() == Kind::Mem || kind() == Kind::Eq; }

  std::string to_string() const {
    std::ostringstream os;
    print(os);
    return os.str();
  }

private:
  struct Node {
    Kind kind;
    std::shared_ptr<const NE> x, y;  // atoms / quantifier domain
    std::string var;
    std::shared_ptr<const Node> a, b;  // subformulas

    Node(Kind k, std::shared_ptr<const NE> xx, std::shared_ptr<const NE> yy, std::string v,
         std::shared_ptr<const Node> aa, std::shared_ptr<const Node> bb)
        : kind(k), x(std::move(xx)), y(std::move(yy)), var(std::move(v)), a(std::move(aa)),
          b(std::move(bb)) {}
  };

  FormulaT() = default;
  explicit FormulaT(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static FormulaT atom(Kind k, NE x, NE y) {
    FormulaT f;
    f.node_ = std::make_shared<Node>(Node{k, std::make_shared<NE>(std::move(x)),
                                          std::make_shared<NE>(std::move(y)), "", nullptr,
                                          nullptr});
    return f;
  }
  static FormulaT binop(Kind k, FormulaT a, FormulaT b) {
    FormulaT f;
    f.node_ = std::make_shared<Node>(
        Node{k, {}, {}, "", std::move(a).node_, std::move(b).node_});
    return f;
  }
  static FormulaT quant(Kind k, std::string var, NE dom, FormulaT body) {
    FormulaT f;
    f.node_ = std::make_shared<Node>(Node{k, std::make_shared<NE>(std::move(dom)), {},
                                          std::move(var), std::move(body).node_, nullptr});
    return f;
  }

  void print(std::ostringstream& os) const {
    switch (kind()) {
      case Kind::Mem: os << "(mem " << lhs().to_string() << ' ' << rhs().to_string() << ')'; break;
      case Kind::Eq: os << "(eq " << lhs().to_string() << ' ' << rhs().to_string() << ')'; break;
      case Kind::And: os << "(and " << left().to_string() << ' ' << right().to_string() << ')'; break;
      case Kind::Or: os << "(or " << left().to_string() << ' ' << right().to_string() << ')'; break;
      case Kind::Not: os << "(not " << body().to_string() << ')'; break;
      case Kind::Imp: os << "(imp " << left().to_string() << ' ' << right().to_string() << ')'; break;
      case Kind::AllIn:
        os << "(allin " << var() << ' ' << domain().to_string() << ' ' << body().to_string() << ')';
        break;
      case Kind::ExIn:
        os << "(exin " << var() << ' ' << domain().to_string() << ' ' << body().to_string() << ')';
        break;
      case Kind::All: os << "(all " << var() << ' ' << body().to_string() << ')'; break;
      case Kind::Ex: os << "(ex " << var() << ' ' << body().to_string() << ')'; break;
    }
  }

  std::shared_ptr<const Node> node_;
};

// Atom expressions of the realizability language: a name literal, a bound
// variable, or a name constructor applied to subexpressions.
class NameExpr {
public:
  using Env = std::map<std::string, Name>;

  static NameExpr lit(Name n);
  static NameExpr var(std::string v);
  static NameExpr pair(NameExpr x, NameExpr y);
  static NameExpr set1(NameExpr x);
  static NameExpr set2(NameExpr x, NameExpr y);
  static NameExpr dotn(uint64_t n);
  static NameExpr dot_omega(uint64_t bound);
  static NameExpr xof(TypeCode sigma);
  static NameExpr fof(TypeCode sigma, Element family);
  static NameExpr check(HfSet u);

  // Evaluates under an environment; unbound variables throw.
  Name eval(const Env& env, const Bounds& bounds) const;
  std::string to_string() const;

private:
  enum class Kind : uint8_t { Lit, Var, Pair, Set1, Set2, Dot, DotOmega, XOf, FOf, Check };
  struct Node;
  std::shared_ptr<const Node> node_;
};

using Formula = FormulaT<NameExpr>;

// Macro expansions; all produce pure formula trees. Internal bound
// variables are generated fresh (prefixed "?") so user variables cannot
// collide with them.

// z is the ordered pair of x and y.
Formula op_formula(NameExpr z, NameExpr x, NameExpr y);
// w is the singleton of x.
Formula sing_formula(NameExpr w, NameExpr x);
// w is the unordered pair of x and y.
Formula pair2_formula(NameExpr w, NameExpr x, NameExpr y);
// F is a relation whose domain is contained in X.
Formula rel_domsub_formula(NameExpr f, NameExpr x);
// X is contained in the domain of F.
Formula totality_formula(NameExpr x, NameExpr f);
// F is functional.
Formula functional_formula(NameExpr f);
// fun(F) and dom(F) = X, decomposed as the three parts above.
Formula fun_dom_formula(NameExpr f, NameExpr x);
// z is empty.
Formula empty_formula(NameExpr z);

}  // namespace extreal

#endif
