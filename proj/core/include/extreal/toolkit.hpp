// Closed realizer terms shared across the realizer constructions: the
// reflexivity/symmetry/transitivity kit for realizable equality, membership
// transports, congruence for internal pairs, and the three pairing-law
// realizers. All are built with bracket abstraction (and the fixed-point
// combinator where the construction recurses on set rank) and are verified
// empirically by the test suites; nothing here trusts a construction
// without running it.

#ifndef EXTREAL_TOOLKIT_HPP
#define EXTREAL_TOOLKIT_HPP

#include "extreal/combinators.hpp"

namespace extreal {

// i with i realizing x = x for every name x: i c = P (P c i) (P c i).
const Element& rz_refl();

// sym e realizes y = x whenever e realizes x = y.
const Element& rz_sym();

// trans e f realizes x = z whenever e realizes x = y and f realizes y = z.
const Element& rz_trans();

// mem_left e m realizes x' in z from e : x = x' and m : x in z.
const Element& rz_mem_left();

// mem_right e m realizes x in z' from e : z = z' and m : x in z.
const Element& rz_mem_right();

// Applied forms, for readable construction sites.
Term rz_sym_t(const Term& e);
Term rz_trans_t(const Term& e, const Term& f);
Term rz_mem_left_t(const Term& e, const Term& m);
Term rz_mem_right_t(const Term& e, const Term& m);

// From e0 : x = x' and e1 : y = y', congruence of the internal pair:
// vpair_cong e0 e1 realizes <x,y> = <x',y'>.
const Element& rz_vpair_cong();
Term rz_vpair_cong_t(const Term& e0, const Term& e1);

// Turns a realizer of "w is the singleton of x" into one of w = {x},
// and a realizer of "w is the unordered pair of x,y" into w = {x,y}.
const Element& rz_sing_to_eq();
const Element& rz_pair2_to_eq();

// The pairing laws:
//   u0 realizes op(<x,y>, x, y)
//   u1 c realizes x = u /\ y = v from c : <x,y> = <u,v>
//   u2 c realizes z = <x,y> from c : op(z, x, y)
const Element& rz_u0();
const Element& rz_u1();
const Element& rz_u2();

// From c realizing op(z,x,y0) /\ op(z',x',y1) where z and z' are the same
// canonical pair name: extracts a realizer of y0 = y1. This is the
// equality-property glue used by the functionality realizers.
const Element& rz_op_snd_eq();

// op_cong3 o e realizes op(z,x,y') from o : op(z,x,y) and e : y = y'.
const Element& rz_op_cong3();

// op_cong1 e o realizes op(z',x,y) from e : z' = z and o : op(z,x,y).
const Element& rz_op_cong1();

}  // namespace extreal

#endif
