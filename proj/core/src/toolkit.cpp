#include "extreal/toolkit.hpp"

#include "extreal/bracket.hpp"

namespace extreal {

using tm::num;
using tm::v;

namespace {
constexpr uint64_t kBuildFuel = 1u << 21;
Element build(const Term& t) { return eval_or_throw(t, Fuel{kBuildFuel}); }
}  // namespace

const Element& rz_refl() {
  // i c = P (P c i) (P c i): at every entry, point back at the entry itself
  // and recurse on the child.
  static const Element i = [] {
    Term g = lam({"s", "c"}, tm::P(tm::P(v("c"))(v("s")))(tm::P(v("c"))(v("s"))));
    return build(fixpoint()(g));
  }();
  return i;
}

const Element& rz_sym() {
  static const Element s =
      build(lam({"e", "c"}, tm::P(proj1(v("e")(v("c"))))(proj0(v("e")(v("c"))))));
  return s;
}

const Element& rz_trans() {
  // An equality realizer is a function from entry elements to pairs of
  // membership realizers, so the composite is one lambda producing both
  // components at the given entry.
  static const Element t = [] {
    // forward: follow e to a witness in the middle name, then f onward
    Term m = proj0(v("e")(v("c")));
    Term m2 = proj0(v("f")(proj0(m)));
    Term fwd = tm::P(proj0(m2))(v("s")(proj1(m))(proj1(m2)));
    Term n = proj1(v("f")(v("c")));
    Term n2 = proj1(v("e")(proj0(n)));
    Term bwd = tm::P(proj0(n2))(v("s")(proj1(n))(proj1(n2)));
    Term g = lam({"s", "e", "f", "c"}, tm::P(fwd)(bwd));
    return build(fixpoint()(g));
  }();
  return t;
}

Term rz_sym_t(const Term& e) { return rz_sym()(e); }
Term rz_trans_t(const Term& e, const Term& f) { return rz_trans()(e)(f); }

const Element& rz_mem_left() {
  static const Element t = build(lam(
      {"e", "m"},
      tm::P(proj0(v("m")))(rz_trans_t(rz_sym_t(v("e")), proj1(v("m"))))));
  return t;
}

const Element& rz_mem_right() {
  static const Element t = [] {
    Term m2 = proj0(v("e")(proj0(v("m"))));
    return build(lam(
        {"e", "m"}, tm::P(proj0(m2))(rz_trans_t(proj1(v("m")), proj1(m2)))));
  }();
  return t;
}

Term rz_mem_left_t(const Term& e, const Term& m) { return rz_mem_left()(e)(m); }
Term rz_mem_right_t(const Term& e, const Term& m) { return rz_mem_right()(e)(m); }

namespace {
// Equality realizers are functions from entry elements to pairs of
// membership realizers, so congruences are built as one lambda over the
// entry and produce both directions at it.

// {x} = {x'} from a realizer of x = x'; the only entry key is 0
Term singleton_cong(const Term& e) {
  return lam("c", tm::P(tm::P(num(0))(e))(tm::P(num(0))(rz_sym_t(e))));
}
// {x,y} = {x',y'} from realizers of x = x' and y = y'
Term pair2_cong(const Term& e0, const Term& e1) {
  Term fwd = tm::P(v("k"))(tm::D(v("k"))(num(0))(e0)(e1));
  Term bwd = tm::P(v("k"))(tm::D(v("k"))(num(0))(rz_sym_t(e0))(rz_sym_t(e1)));
  return lam("k", tm::P(fwd)(bwd));
}
}  // namespace

const Element& rz_vpair_cong() {
  static const Element t = [] {
    Term fwd = tm::P(v("k"))(tm::D(v("k"))(num(0))(singleton_cong(v("e0")))(
                   pair2_cong(v("e0"), v("e1"))));
    Term bwd = tm::P(v("k"))(tm::D(v("k"))(num(0))(singleton_cong(rz_sym_t(v("e0"))))(
                   pair2_cong(rz_sym_t(v("e0")), rz_sym_t(v("e1")))));
    return build(lam({"e0", "e1", "k"}, tm::P(fwd)(bwd)));
  }();
  return t;
}

Term rz_vpair_cong_t(const Term& e0, const Term& e1) { return rz_vpair_cong()(e0)(e1); }

const Element& rz_sing_to_eq() {
  // from <all-children-equal-x, x-in-w> to w = {x}
  static const Element t = build(
      lam({"r", "c"}, tm::P(tm::P(num(0))(proj0(v("r"))(v("c"))))(proj1(v("r")))));
  return t;
}

const Element& rz_pair2_to_eq() {
  // forward: the tagged disjunct realizer doubles as the membership witness
  static const Element t = [] {
    Term fwd = proj0(v("r"))(v("k"));
    Term bwd = tm::D(v("k"))(num(0))(proj(v("r"), {1, 0}))(proj(v("r"), {1, 1}));
    return build(lam({"r", "k"}, tm::P(fwd)(bwd)));
  }();
  return t;
}

const Element& rz_u0() {
  static const Element t = [] {
    const Term i = rz_refl().term();
    Term s1 = tm::P(tm::K(i))(tm::P(num(0))(i));
    Term p2 = tm::P(lam("k", tm::P(v("k"))(i)))(tm::P(tm::P(num(0))(i))(tm::P(num(1))(i)));
    Term all = lam("c", tm::P(v("c"))(tm::D(v("c"))(num(0))(s1)(p2)));
    return build(tm::P(all)(tm::P(tm::P(num(0))(s1))(tm::P(num(1))(p2))));
  }();
  return t;
}

const Element& rz_u2() {
  static const Element t = [] {
    Term q = proj0(v("c"))(v("k"));
    Term fwd = tm::P(proj0(q))(tm::D(proj0(q))(num(0))(rz_sing_to_eq()(proj1(q)))(
                   rz_pair2_to_eq()(proj1(q))));
    Term ex1 = proj(v("c"), {1, 0});
    Term ex2 = proj(v("c"), {1, 1});
    Term at0 = tm::P(proj0(ex1))(rz_sym_t(rz_sing_to_eq()(proj1(ex1))));
    Term at1 = tm::P(proj0(ex2))(rz_sym_t(rz_pair2_to_eq()(proj1(ex2))));
    Term bwd = tm::D(v("k"))(num(0))(at0)(at1);
    return build(lam({"c", "k"}, tm::P(fwd)(bwd)));
  }();
  return t;
}

const Element& rz_u1() {
  static const Element t = [] {
    // components of the premise e : <x,y> = <u,v>
    Term m0 = proj0(v("e")(num(0)));  // {x} lands in <u,v>
    Term t0 = proj0(m0);
    Term q = proj1(m0);
    // x = u
    Term w = proj0(q(num(0)));
    Term xu_t0 = proj1(w);
    Term xu_t1 = tm::D(proj0(w))(num(0))(proj1(w))(rz_sym_t(proj1(proj1(q(num(0))))));
    Term xu = tm::D(t0)(num(0))(xu_t0)(xu_t1);

    // y = v
    Term m1 = proj0(v("e")(num(1)));  // {x,y} lands in <u,v>
    Term t1 = proj0(m1);
    Term q1 = proj1(m1);
    Term n1 = proj1(v("e")(num(1)));  // {u,v} lands in <x,y>
    Term t2 = proj0(n1);
    Term q2 = proj1(n1);
    Term vv = proj0(q2(num(1)));  // v lands in {x} or {x,y}
    Term sp = proj0(vv);
    Term rp = proj1(vv);
    auto chain = [&](const Term& yu) {
      return rz_trans_t(yu, rz_trans_t(rz_sym_t(xu), rz_sym_t(rp)));
    };
    auto vroute = [&](const Term& yu) {
      return tm::D(t2)(num(0))(chain(yu))(
          tm::D(sp)(num(0))(chain(yu))(rz_sym_t(rp)));
    };
    Term yw = proj0(q1(num(1)));  // y lands in {u} or {u,v}
    Term s = proj0(yw);
    Term r = proj1(yw);
    Term yu_direct = proj1(yw);  // when {x,y} = {u}: y = u
    Term yv = tm::D(t1)(num(0))(vroute(yu_direct))(
        tm::D(s)(num(0))(vroute(r))(r));

    return build(lam("e", tm::P(xu)(yv)));
  }();
  return t;
}

const Element& rz_op_snd_eq() {
  static const Element t = [] {
    Term left = proj1(rz_u1()(rz_u2()(proj0(v("c")))));
    Term right = proj1(rz_u1()(rz_u2()(proj1(v("c")))));
    return build(lam("c", rz_trans_t(rz_sym_t(left), right)));
  }();
  return t;
}

namespace {
// pair2(w,x,y) with e : y = y' becomes pair2(w,x,y')
Term pair2_cong3(const Term& p, const Term& e) {
  Term q = proj0(p)(v("vk"));
  Term allv = lam("vk", tm::P(proj0(q))(tm::D(proj0(q))(num(0))(proj1(q))(
                            rz_trans_t(proj1(q), e))));
  return tm::P(allv)(tm::P(proj(p, {1, 0}))(rz_mem_left_t(e, proj(p, {1, 1}))));
}

// sing(w,x) carried along e' : w' = w
Term sing_transport(const Term& ep, const Term& s) {
  Term hop = proj0(ep(v("vk")));  // v-child lands in w
  Term allv = lam("vk", rz_trans_t(proj1(hop), proj0(s)(proj0(hop))));
  return tm::P(allv)(rz_mem_right_t(rz_sym_t(ep), proj1(s)));
}

// pair2(w,x,y) carried along e' : w' = w
Term pair2_transport(const Term& ep, const Term& p) {
  Term hop = proj0(ep(v("vk")));
  Term q = proj0(p)(proj0(hop));
  Term allv = lam("vk", tm::P(proj0(q))(rz_trans_t(proj1(hop), proj1(q))));
  return tm::P(allv)(tm::P(rz_mem_right_t(rz_sym_t(ep), proj(p, {1, 0})))(
      rz_mem_right_t(rz_sym_t(ep), proj(p, {1, 1}))));
}
}  // namespace

const Element& rz_op_cong3() {
  static const Element t = [] {
    Term q = proj0(v("o"))(v("k"));
    Term all = lam("k", tm::P(proj0(q))(tm::D(proj0(q))(num(0))(proj1(q))(
                            pair2_cong3(proj1(q), v("e")))));
    Term ex1 = proj(v("o"), {1, 0});
    Term ex2 = proj(v("o"), {1, 1});
    Term ex2p = tm::P(proj0(ex2))(pair2_cong3(proj1(ex2), v("e")));
    return build(lam({"o", "e"}, tm::P(all)(tm::P(ex1)(ex2p))));
  }();
  return t;
}

const Element& rz_op_cong1() {
  static const Element t = [] {
    // entries of z' land in z via e; transport the disjunct found there
    Term hop = proj0(v("e")(v("k")));
    Term q = proj0(v("o"))(proj0(hop));
    Term all = lam("k", tm::P(proj0(q))(tm::D(proj0(q))(num(0))(
                            sing_transport(proj1(hop), proj1(q)))(
                            pair2_transport(proj1(hop), proj1(q)))));
    // existential witnesses travel backwards along e
    Term ex1 = proj(v("o"), {1, 0});
    Term back1 = proj1(v("e")(proj0(ex1)));
    Term ex1p = tm::P(proj0(back1))(sing_transport(rz_sym_t(proj1(back1)), proj1(ex1)));
    Term ex2 = proj(v("o"), {1, 1});
    Term back2 = proj1(v("e")(proj0(ex2)));
    Term ex2p = tm::P(proj0(back2))(pair2_transport(rz_sym_t(proj1(back2)), proj1(ex2)));
    return build(lam({"e", "o"}, tm::P(all)(tm::P(ex1p)(ex2p))));
  }();
  return t;
}

}  // namespace extreal
