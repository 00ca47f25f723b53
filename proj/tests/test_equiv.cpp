#include <doctest.h>

#include "extreal/bracket.hpp"
#include "extreal/combinators.hpp"
#include "extreal/equiv.hpp"

using namespace extreal;
using tm::num;

namespace {
Element kfam(const TypeCode& value) {
  return Element::trusted(tm::K(value.code().term()));
}
const Bounds kB{};
}  // namespace

TEST_CASE("type_equiv base clauses") {
  CHECK(type_equiv(TypeCode::nfin(2), TypeCode::nfin(2), kB).holds());
  CHECK(type_equiv(TypeCode::nfin(2), TypeCode::nfin(3), kB).refuted());
  CHECK(type_equiv(TypeCode::nat(), TypeCode::nat(), kB).holds());
  CHECK(type_equiv(TypeCode::nat(), TypeCode::nfin(2), kB).refuted());

  TypeCode pi1 = TypeCode::pi(TypeCode::nfin(1), kfam(TypeCode::nfin(2)));
  CHECK(type_equiv(pi1, pi1, kB).holds());

  // equivalent but not identical families
  Term code2 = TypeCode::nfin(2).code().term();
  Element f2 = eval_or_throw(lam("x", tm::D(tm::v("x"))(num(0))(code2)(code2)));
  CHECK(f2.term() != kfam(TypeCode::nfin(2)).term());
  CHECK(type_equiv(TypeCode::pi(TypeCode::nfin(1), kfam(TypeCode::nfin(2))),
                   TypeCode::pi(TypeCode::nfin(1), f2), kB)
            .holds());

  CHECK(type_equiv(TypeCode::pi(TypeCode::nfin(1), kfam(TypeCode::nfin(2))),
                   TypeCode::pi(TypeCode::nfin(1), kfam(TypeCode::nfin(3))), kB)
            .refuted());

  // identity types compare bases and endpoints
  TypeCode i00 = TypeCode::identity(TypeCode::nfin(2), elem::num(0), elem::num(0));
  TypeCode i01 = TypeCode::identity(TypeCode::nfin(2), elem::num(0), elem::num(1));
  CHECK(type_equiv(i00, i00, kB).holds());
  CHECK(type_equiv(i00, i01, kB).refuted());

  // Nat-based binders degrade to unknown rather than guessing
  TypeCode piN = TypeCode::pi(TypeCode::nat(), kfam(TypeCode::nfin(1)));
  CHECK(type_equiv(piN, piN, kB).unknown());
}

TEST_CASE("elem_equiv clauses") {
  TypeCode n2 = TypeCode::nfin(2), n3 = TypeCode::nfin(3);
  CHECK(elem_equiv(elem::num(1), elem::num(1), n2, kB).holds());
  CHECK(elem_equiv(elem::num(2), elem::num(2), n2, kB).refuted());
  CHECK(elem_equiv(elem::num(1), elem::num(2), n3, kB).refuted());
  CHECK(elem_equiv(elem::k(), elem::k(), n2, kB).refuted());

  // identity type: inhabitant must be 0 and the endpoints related
  TypeCode i00 = TypeCode::identity(n2, elem::num(0), elem::num(0));
  TypeCode i01 = TypeCode::identity(n2, elem::num(0), elem::num(1));
  CHECK(elem_equiv(elem::num(0), elem::num(0), i00, kB).holds());
  CHECK(elem_equiv(elem::num(0), elem::num(0), i01, kB).refuted());
  CHECK(elem_equiv(elem::num(1), elem::num(1), i00, kB).refuted());

  // sigma: componentwise
  TypeCode s = TypeCode::sigma(TypeCode::nfin(1), kfam(TypeCode::nfin(1)));
  CHECK(elem_equiv(elem::pair(elem::num(0), elem::num(0)),
                   elem::pair(elem::num(0), elem::num(0)), s, kB)
            .holds());
  CHECK(elem_equiv(elem::num(0), elem::num(0), s, kB).refuted());  // no projections

  // pi: extensional over the base; different tabulations of the same graph agree
  TypeCode p = TypeCode::pi(n2, kfam(n2));
  Element f = eval_or_throw(lam("x", tm::v("x")));
  Element g = eval_or_throw(lam("x", tm::D(tm::v("x"))(num(0))(num(0))(num(1))));
  CHECK(elem_equiv(f, g, p, kB).holds());
  Element h = eval_or_throw(lam("x", num(1)));
  CHECK(elem_equiv(f, h, p, kB).refuted());
  // functions leaving the fiber are refuted
  Element bad = eval_or_throw(lam("x", num(7)));
  CHECK(elem_equiv(bad, bad, p, kB).refuted());
}

TEST_CASE("per_enumerate base cases") {
  Per p2 = per_enumerate(TypeCode::nfin(2), kB);
  REQUIRE(p2.pairs.size() == 2);
  CHECK(p2.complete);
  CHECK(p2.pairs[0].first == elem::num(0));
  CHECK(p2.pairs[1].first == elem::num(1));

  Per p0 = per_enumerate(TypeCode::nfin(0), kB);
  CHECK(p0.pairs.empty());
  CHECK(p0.complete);

  Per pn = per_enumerate(TypeCode::nat(), kB);
  CHECK(pn.pairs.size() == kB.enum_bound);
  CHECK(!pn.complete);

  Per pid = per_enumerate(TypeCode::identity(TypeCode::nfin(2), elem::num(0), elem::num(0)), kB);
  REQUIRE(pid.pairs.size() == 1);
  CHECK(pid.complete);
  CHECK(pid.pairs[0].first == elem::num(0));

  Per pid2 = per_enumerate(TypeCode::identity(TypeCode::nfin(2), elem::num(0), elem::num(1)), kB);
  CHECK(pid2.pairs.empty());
  CHECK(pid2.complete);
}

TEST_CASE("per_enumerate composite cases") {
  TypeCode n1 = TypeCode::nfin(1), n2 = TypeCode::nfin(2);

  Per sig = per_enumerate(TypeCode::sigma(n2, kfam(n2)), kB);
  CHECK(sig.pairs.size() == 4);
  CHECK(sig.complete);

  Per pi = per_enumerate(TypeCode::pi(n2, kfam(n2)), kB);
  CHECK(pi.pairs.size() == 4);  // 2 keys, 2 values each
  CHECK(pi.complete);
  // every rep really is in the relation
  for (const auto& [f, g] : pi.pairs)
    CHECK(elem_equiv(f, g, TypeCode::pi(n2, kfam(n2)), kB).holds());

  // functions out of the empty type: a single class
  Per piEmpty = per_enumerate(TypeCode::pi(TypeCode::nfin(0), kfam(n2)), kB);
  CHECK(piEmpty.pairs.size() == 1);
  CHECK(piEmpty.complete);

  // functions into the empty type: none
  Per piInto = per_enumerate(TypeCode::pi(n2, kfam(TypeCode::nfin(0))), kB);
  CHECK(piInto.pairs.empty());
  CHECK(piInto.complete);

  // W with family uniformly empty: exactly the leaf trees
  Per wLeaf = per_enumerate(TypeCode::w(n1, kfam(TypeCode::nfin(0))), kB);
  REQUIRE(wLeaf.pairs.size() == 1);
  CHECK(wLeaf.complete);

  // W over the empty base: empty, and provably so
  Per wEmpty = per_enumerate(TypeCode::w(TypeCode::nfin(0), kfam(n1)), kB);
  CHECK(wEmpty.pairs.empty());
  CHECK(wEmpty.complete);

  // W with no leaves: provably empty (every node needs a child)
  Per wNoLeaf = per_enumerate(TypeCode::w(n1, kfam(n1)), kB);
  CHECK(wNoLeaf.pairs.empty());
  CHECK(wNoLeaf.complete);

  // genuinely growing W type: truncated
  Element mixed = eval_or_throw(
      lam("x", tm::D(tm::v("x"))(num(0))(TypeCode::nfin(0).code().term())(
                   TypeCode::nfin(1).code().term())));
  Per wGrow = per_enumerate(TypeCode::w(n2, mixed), kB);
  CHECK(!wGrow.complete);
  CHECK(!wGrow.pairs.empty());
  // members: leaf (label 0), unary nodes (label 1) over smaller trees
  TypeCode wg = TypeCode::w(n2, mixed);
  for (const auto& [c, d] : wGrow.pairs) CHECK(elem_equiv(c, d, wg, kB).holds());
}

TEST_CASE("W element equivalence at the leaf-only scale") {
  TypeCode w = TypeCode::w(TypeCode::nfin(1), kfam(TypeCode::nfin(0)));
  Element leafA = elem::pair(elem::num(0), elem::identity());
  Element leafB = elem::pair(elem::num(0), elem::k());  // same tree, different child function
  CHECK(elem_equiv(leafA, leafB, w, kB).holds());
  Element bad = elem::pair(elem::num(0), elem::k());
  CHECK(elem_equiv(leafA, bad, TypeCode::w(TypeCode::nfin(1), kfam(TypeCode::nfin(1))), kB)
            .refuted());  // label ok but children needed and none possible
}

TEST_CASE("family coherence") {
  TypeCode n2 = TypeCode::nfin(2);
  Element i = kfam(n2);
  Element j = eval_or_throw(lam("x", tm::P(num(0))(num(2))));  // same code, computed
  CHECK(family_equiv(i, j, n2, kB).holds());
  Element bad = eval_or_throw(
      lam("x", tm::D(tm::v("x"))(num(0))(n2.code().term())(TypeCode::nfin(3).code().term())));
  CHECK(family_equiv(i, bad, n2, kB).refuted());
}

TEST_CASE("tri-state answers are budget-stable") {
  // holds/refuted never flip when budgets grow
  TypeCode p = TypeCode::pi(TypeCode::nfin(2), kfam(TypeCode::nfin(2)));
  Element f = eval_or_throw(lam("x", tm::v("x")));
  Bounds big = kB;
  big.fuel.steps *= 10;
  big.enum_bound += 4;
  big.w_depth += 4;
  CHECK(elem_equiv(f, f, p, kB).holds());
  CHECK(elem_equiv(f, f, p, big).holds());
  Element h = eval_or_throw(lam("x", num(1)));
  CHECK(elem_equiv(f, h, p, kB).refuted());
  CHECK(elem_equiv(f, h, p, big).refuted());
}
