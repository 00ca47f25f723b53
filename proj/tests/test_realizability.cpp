#include <doctest.h>

#include <random>

#include "extreal/bracket.hpp"
#include "extreal/realizability.hpp"
#include "extreal/toolkit.hpp"
#include "rz_reference.hpp"

using namespace extreal;
using tm::num;
using tm::v;

namespace {
const Bounds kB{};
Pool refl_pool() { return Pool::explicit_pairs({{rz_refl(), rz_refl()}}); }
NameExpr L(const Name& n) { return NameExpr::lit(n); }
}  // namespace

TEST_CASE("atomic equality over the empty name is vacuous") {
  Verdict v1 = check(elem::k(), elem::s(), Formula::eq(L(dot(0)), L(dot(0))), refl_pool(), kB);
  CHECK(v1.state.holds());
}

TEST_CASE("membership against a small name") {
  // (P 0 i, P 0 i) realizes dot0 in dot1
  Element r = Element::trusted(tm::P(num(0))(rz_refl().term()));
  Verdict v1 = check(r, r, Formula::mem(L(dot(0)), L(dot(1))), refl_pool(), kB);
  CHECK(v1.state.holds());

  // wrong key
  Element r2 = Element::trusted(tm::P(num(1))(rz_refl().term()));
  CHECK(check(r2, r2, Formula::mem(L(dot(0)), L(dot(1))), refl_pool(), kB).state.refuted());

  // stuck projections refute
  CHECK(check(elem::num(0), elem::num(0), Formula::mem(L(dot(0)), L(dot(1))), refl_pool(), kB)
            .state.refuted());
}

TEST_CASE("dot0 = dot1 is refuted for any realizer pair") {
  std::vector<std::pair<Element, Element>> candidates = {
      {elem::k(), elem::k()},
      {rz_refl(), rz_refl()},
      {Element::trusted(tm::P(num(0))(num(0))), Element::trusted(tm::P(num(0))(num(0)))},
  };
  for (const auto& [a, b] : candidates)
    CHECK(check(a, b, Formula::eq(L(dot(0)), L(dot(1))), refl_pool(), kB).state.refuted());
}

TEST_CASE("reflexivity realizer works on every finite name in the grid") {
  std::vector<Name> grid = {dot(0), dot(1), dot(2), vpair(dot(0), dot(1)),
                            check_name(HfSet::of({HfSet{}, HfSet::of({HfSet{}})}))};
  for (const auto& n : grid) {
    Verdict vd = check(rz_refl(), rz_refl(), Formula::eq(L(n), L(n)), refl_pool(), kB);
    CHECK(vd.state.holds());
  }
}

TEST_CASE("symmetry and transitivity realizers") {
  // x = {0}, two distinct but extensionally equal presentations
  Name x = Name::make({{elem::num(0), elem::num(0), dot(0)}});
  Name y = Name::make({{elem::num(1), elem::num(1), dot(0)}});  // {0} keyed differently
  // i does not realize x = y (keys differ), but a tailored realizer does:
  // entries of x map to y's entry with key 1, and vice versa.
  Element to = eval_or_throw(lam("c", tm::P(tm::P(num(1))(rz_refl().term()))(
                                          tm::P(num(0))(rz_refl().term()))));
  Verdict vd = check(to, to, Formula::eq(L(x), L(y)), refl_pool(), kB);
  REQUIRE(vd.state.holds());

  // sym to realizes y = x
  Element sym_to = eval_or_throw(rz_sym()(to));
  CHECK(check(sym_to, sym_to, Formula::eq(L(y), L(x)), refl_pool(), kB).state.holds());

  // trans to (sym to) realizes x = x
  Element round = eval_or_throw(rz_trans()(to)(sym_to));
  CHECK(check(round, round, Formula::eq(L(x), L(x)), refl_pool(), kB).state.holds());
}

TEST_CASE("membership transports") {
  Name z = Name::make({{elem::num(0), elem::num(0), dot(1)}, {elem::num(1), elem::num(1), dot(0)}});
  // m : dot1 in z (at key 0)
  Element m = Element::trusted(tm::P(num(0))(rz_refl().term()));
  REQUIRE(check(m, m, Formula::mem(L(dot(1)), L(z)), refl_pool(), kB).state.holds());

  // mem_left: from dot1 = dot1 and the membership, conclude dot1 in z
  Element moved = eval_or_throw(rz_mem_left()(rz_refl().term())(m.term()));
  CHECK(check(moved, moved, Formula::mem(L(dot(1)), L(z)), refl_pool(), kB).state.holds());

  // mem_right: z = z gives dot1 in z again
  Element moved2 = eval_or_throw(rz_mem_right()(rz_refl().term())(m.term()));
  CHECK(check(moved2, moved2, Formula::mem(L(dot(1)), L(z)), refl_pool(), kB).state.holds());
}

TEST_CASE("vpair congruence") {
  Element c = eval_or_throw(rz_vpair_cong()(rz_refl().term())(rz_refl().term()));
  Name p = vpair(dot(1), dot(2));
  CHECK(check(c, c, Formula::eq(L(p), L(p)), refl_pool(), kB).state.holds());
}

TEST_CASE("conjunction, disjunction, bounded quantifiers") {
  Element i = rz_refl();
  Element both = elem::pair(i, i);
  Formula f = Formula::conj(Formula::eq(L(dot(1)), L(dot(1))), Formula::eq(L(dot(2)), L(dot(2))));
  CHECK(check(both, both, f, refl_pool(), kB).state.holds());

  Element left = elem::pair(elem::num(0), i);
  Formula g = Formula::disj(Formula::eq(L(dot(1)), L(dot(1))), Formula::eq(L(dot(0)), L(dot(1))));
  CHECK(check(left, left, g, refl_pool(), kB).state.holds());
  Element right = elem::pair(elem::num(1), i);
  CHECK(check(right, right, g, refl_pool(), kB).state.refuted());

  // allin over dot2: every member of dot2 equals itself
  Element all = eval_or_throw(lam("c", rz_refl().term()));
  Formula h = Formula::all_in("x", L(dot(2)), Formula::eq(NameExpr::var("x"), NameExpr::var("x")));
  CHECK(check(all, all, h, refl_pool(), kB).state.holds());

  // exin: dot2 has a member equal to dot1
  Element exr = Element::trusted(tm::P(num(1))(i.term()));
  Formula e = Formula::ex_in("x", L(dot(2)), Formula::eq(NameExpr::var("x"), L(dot(1))));
  CHECK(check(exr, exr, e, refl_pool(), kB).state.holds());
}

TEST_CASE("implication and negation follow the pool discipline") {
  // premise dot0=dot1 unrealizable: implication holds vacuously over an
  // explicit pool
  Formula imp = Formula::imp(Formula::eq(L(dot(0)), L(dot(1))), Formula::eq(L(dot(0)), L(dot(0))));
  CHECK(check(elem::k(), elem::k(), imp, refl_pool(), kB).state.holds());

  // same formula over an enumeration pool degrades to unknown
  Pool enum_pool = Pool::enumeration(2);
  CHECK(check(elem::k(), elem::k(), imp, enum_pool, kB).state.unknown());

  // K K realizes truth -> truth over the refl pool: K K applied to refl
  // gives K refl... whose projections are stuck, so this one refutes;
  // the right realizer forwards to i.
  Formula tt = Formula::imp(Formula::eq(L(dot(1)), L(dot(1))), Formula::eq(L(dot(1)), L(dot(1))));
  Element fwd = eval_or_throw(lam("c", v("c")));
  CHECK(check(fwd, fwd, tt, refl_pool(), kB).state.holds());

  // a realizer that breaks the conclusion on a live premise is refuted
  Element bad = eval_or_throw(lam("c", num(3)));
  CHECK(check(bad, bad, tt, refl_pool(), kB).state.refuted());

  // negation: pool-wide refutation of dot0 = dot1
  Formula neg = Formula::neg(Formula::eq(L(dot(0)), L(dot(1))));
  CHECK(check(elem::k(), elem::k(), neg, refl_pool(), kB).state.holds());
  Formula negGood = Formula::neg(Formula::eq(L(dot(0)), L(dot(0))));
  CHECK(check(elem::k(), elem::k(), negGood, refl_pool(), kB).state.refuted());
}

TEST_CASE("unbounded quantifiers require a universe fragment") {
  Formula all = Formula::all("x", Formula::eq(NameExpr::var("x"), NameExpr::var("x")));
  Pool bare = refl_pool();
  CHECK(check(rz_refl(), rz_refl(), all, bare, kB).state.unknown());

  Pool with_universe = Pool::explicit_pairs({{rz_refl(), rz_refl()}},
                                            {dot(0), dot(1), vpair(dot(0), dot(1))}, false);
  CHECK(check(rz_refl(), rz_refl(), all, with_universe, kB).state.unknown());

  Pool exhaustive = Pool::explicit_pairs({{rz_refl(), rz_refl()}},
                                         {dot(0), dot(1), vpair(dot(0), dot(1))}, true);
  CHECK(check(rz_refl(), rz_refl(), all, exhaustive, kB).state.holds());

  // existential: a witness makes it hold regardless of exhaustiveness
  Formula ex = Formula::ex("x", Formula::eq(NameExpr::var("x"), L(dot(1))));
  CHECK(check(rz_refl(), rz_refl(), ex, with_universe, kB).state.holds());
}

TEST_CASE("truncated generators degrade honestly") {
  // omega truncated at 3: membership of dot5 is unknown, not refuted
  Element r5 = Element::trusted(tm::P(num(5))(rz_refl().term()));
  Verdict vd = check(r5, r5, Formula::mem(L(dot(5)), L(dot_omega(3))), refl_pool(), kB);
  CHECK(vd.state.unknown());
  // membership of dot1 is found among the materialized entries
  Element r1 = Element::trusted(tm::P(num(1))(rz_refl().term()));
  CHECK(check(r1, r1, Formula::mem(L(dot(1)), L(dot_omega(3))), refl_pool(), kB).state.holds());
}

TEST_CASE("search: witnesses and bounded refutation") {
  // seed pairs carry the canonical equality and membership realizers
  std::vector<std::pair<Element, Element>> seeds = {{rz_refl(), rz_refl()}};
  for (uint64_t n = 0; n < 4; ++n) {
    Element m = Element::trusted(tm::P(num(n))(rz_refl().term()));
    seeds.emplace_back(m, m);
  }
  Pool p = Pool::enumeration(5, seeds);
  auto hit = search(Formula::eq(L(dot(0)), L(dot(0))), p, kB);
  REQUIRE(hit.has_value());

  auto miss = search(Formula::eq(L(dot(0)), L(dot(1))), p, kB);
  CHECK(!miss.has_value());

  auto mem_hit = search(Formula::mem(L(dot(1)), L(dot_omega(3))), p, kB);
  REQUIRE(mem_hit.has_value());
  // first projection of the witness realizer is the numeral 1
  Element fp = eval_or_throw(proj0(mem_hit->a.term()));
  CHECK(fp.term() == num(1));

  // pure enumeration (no seeds) also produces an equality witness
  Pool bare = Pool::enumeration(3);
  CHECK(search(Formula::eq(L(dot(0)), L(dot(0))), bare, kB).has_value());
}

TEST_CASE("check-name absoluteness at rank <= 3") {
  std::vector<HfSet> sets = {HfSet{}, HfSet::of({HfSet{}}), HfSet::number(2),
                             HfSet::of({HfSet::of({HfSet{}})}), HfSet::number(3)};
  Pool p = Pool::enumeration(3, {{rz_refl(), rz_refl()}});
  for (const auto& u : sets)
    for (const auto& w : sets) {
      auto hit = search(Formula::eq(L(check_name(u)), L(check_name(w))), p, kB);
      CHECK(hit.has_value() == (u == w));
    }
}

TEST_CASE("pairs lemma report") {
  PairsLemmaReport rep = check_pairs_lemma(kB);
  CHECK(rep.all_ok());
  size_t holds = 0;
  for (const auto& i : rep.instances) {
    INFO(i.description);
    CHECK(!i.state.refuted());
    if (i.state.holds()) ++holds;
  }
  CHECK(holds == rep.instances.size());  // every instance decides on this grid
}

TEST_CASE("checker agrees with the small-step reference on the decidable fragment") {
  std::vector<Name> names = {dot(0), dot(1), dot(2), vpair(dot(0), dot(1)),
                             check_name(HfSet::of({HfSet{}}))};
  std::vector<Formula> formulas;
  for (const auto& x : names)
    for (const auto& y : names) {
      formulas.push_back(Formula::mem(L(x), L(y)));
      formulas.push_back(Formula::eq(L(x), L(y)));
    }
  // a few composites
  formulas.push_back(Formula::conj(formulas[0], formulas[1]));
  formulas.push_back(Formula::disj(formulas[2], formulas[3]));
  formulas.push_back(
      Formula::all_in("x", L(dot(2)), Formula::eq(NameExpr::var("x"), NameExpr::var("x"))));
  formulas.push_back(
      Formula::ex_in("x", L(dot(2)), Formula::eq(NameExpr::var("x"), L(dot(1)))));

  std::vector<Element> cands = {rz_refl(), elem::k(),
                                Element::trusted(tm::P(num(0))(rz_refl().term())),
                                Element::trusted(tm::P(num(1))(rz_refl().term())),
                                elem::pair(rz_refl(), rz_refl()),
                                eval_or_throw(lam("c", rz_refl().term()))};
  Pool pool = refl_pool();
  for (const auto& f : formulas)
    for (const auto& c : cands) {
      Verdict vd = check(c, c, f, pool, kB);
      REQUIRE(!vd.state.unknown());
      bool ref = rz_ref::holds(c, c, f, {}, kB);
      CHECK(vd.state.holds() == ref);
    }
}

TEST_CASE("verdict digests are stable across runs") {
  Formula f = Formula::eq(L(dot(2)), L(dot(2)));
  Verdict v1 = check(rz_refl(), rz_refl(), f, refl_pool(), kB);
  Verdict v2 = check(rz_refl(), rz_refl(), f, refl_pool(), kB);
  CHECK(v1.digest() == v2.digest());
  CHECK(v1.state.holds());
}

TEST_CASE("inj converse agreement on finite types") {
  Pool p = Pool::enumeration(4, {{rz_refl(), rz_refl()}});
  TypeCode n2 = TypeCode::nfin(2);
  CHECK(check_inj_converse(elem::num(1), elem::num(1), n2, p, kB) == InjAgreement::Agree);
  CHECK(check_inj_converse(elem::num(0), elem::num(1), n2, p, kB) == InjAgreement::Agree);
  CHECK(check_inj_converse(elem::num(0), elem::num(0), TypeCode::nfin(0), p, kB) ==
        InjAgreement::Vacuous);
}
