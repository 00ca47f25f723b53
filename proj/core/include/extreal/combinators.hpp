// Derived closed terms: pairing helpers, the fixed-point combinator, and
// the primitive recursor built on top of it.

#ifndef EXTREAL_COMBINATORS_HPP
#define EXTREAL_COMBINATORS_HPP

#include "extreal/reduce.hpp"
#include "extreal/term.hpp"

namespace extreal {

namespace elem {
Element k();
Element s();
Element p();
Element p0();
Element p1();
Element succ();
Element pred();
Element d();
Element oracle();
Element num(uint64_t n);
Element identity();                            // S K K
Element pair(const Element& a, const Element& b);  // P a b (a value)
}  // namespace elem

// Projection sugar on terms: proj0(t) = P0 t, proj1(t) = P1 t,
// proj(t, {1,0}) = P0 (P1 t).
Term proj0(const Term& t);
Term proj1(const Term& t);
Term proj(const Term& t, std::initializer_list<int> path);

// Fixed-point combinator f with: f a defined for every element a, and
// f a b Kleene-equal to a (f a) b.
const Element& fixpoint();

// Recursor r with, writing r' for r c a0 c0:
//   r' 0     ~ P a0 (P c0 0)
//   r' (n+1) ~ P (w n)_0 (w n)_1   where  w n = c (r' n)_0 (r' n)_10
const Element& primrec();

}  // namespace extreal

#endif
