#include "extreal/combinators.hpp"

#include "extreal/bracket.hpp"

namespace extreal {

namespace elem {
Element k() { return Element::trusted(tm::K); }
Element s() { return Element::trusted(tm::S); }
Element p() { return Element::trusted(tm::P); }
Element p0() { return Element::trusted(tm::P0); }
Element p1() { return Element::trusted(tm::P1); }
Element succ() { return Element::trusted(tm::SUCC); }
Element pred() { return Element::trusted(tm::PRED); }
Element d() { return Element::trusted(tm::D); }
Element oracle() { return Element::trusted(tm::ORACLE); }
Element num(uint64_t n) { return Element::trusted(tm::num(n)); }
Element identity() { return Element::trusted(tm::S(tm::K)(tm::K)); }
Element pair(const Element& a, const Element& b) {
  return Element::trusted(tm::P(a.term())(b.term()));
}
}  // namespace elem

Term proj0(const Term& t) { return tm::P0(t); }
Term proj1(const Term& t) { return tm::P1(t); }

Term proj(const Term& t, std::initializer_list<int> path) {
  Term r = t;
  for (int i : path) r = (i == 0 ? tm::P0 : tm::P1)(r);
  return r;
}

const Element& fixpoint() {
  // g = \x a b. a (x x a) b ; the fixed point is g g. Self-application sits
  // under the abstraction variable, so it stays frozen until applied.
  static const Element f = [] {
    using tm::v;
    Term g = lam({"x", "a", "b"}, v("a")(v("x")(v("x"))(v("a")))(v("b")));
    return eval_or_throw(g(g), Fuel{1u << 20});
  }();
  return f;
}

const Element& primrec() {
  static const Element r = [] {
    using tm::v;
    Term self_prev = v("self")(tm::PRED(v("n")));
    Term w = v("c")(proj0(self_prev))(proj(self_prev, {1, 0}));
    Term base = tm::P(v("a0"))(tm::P(v("c0"))(tm::num(0)));
    Term step = tm::P(proj0(w))(proj1(w));
    Term body = tm::D(v("n"))(tm::num(0))(base)(step);
    Term g = lam({"c", "a0", "c0"},
                 Term::app(fixpoint().term(), lam({"self", "n"}, body)));
    return eval_or_throw(g, Fuel{1u << 20});
  }();
  return r;
}

}  // namespace extreal
