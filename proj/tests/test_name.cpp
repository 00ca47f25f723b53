#include <doctest.h>

#include "extreal/bracket.hpp"
#include "extreal/combinators.hpp"
#include "extreal/name.hpp"

using namespace extreal;
using tm::num;

namespace {
const Bounds kB{};
Element kfam(const TypeCode& value) { return Element::trusted(tm::K(value.code().term())); }
}  // namespace

TEST_CASE("dot names") {
  CHECK(dot(0) == Name::empty());
  Name d2 = dot(2);
  REQUIRE(d2.entries().size() == 2);
  CHECK(d2.entries()[0].left == elem::num(0));
  CHECK(d2.entries()[0].child == dot(0));
  CHECK(d2.entries()[1].child == dot(1));
  CHECK(d2.complete());
  CHECK(d2.rank() == 2);

  Name w3 = dot_omega(3);
  REQUIRE(w3.entries().size() == 3);
  CHECK(!w3.complete());
  CHECK(w3.generator() == Name::Gen::NatCanonical);
  CHECK(w3.entries()[2].child == dot(2));
}

TEST_CASE("internal pairing") {
  Name a = dot(0), b = dot(1);
  Name p = vpair(a, b);
  REQUIRE(p.entries().size() == 2);
  CHECK(p.entries()[0].left == elem::num(0));
  CHECK(p.entries()[0].child == vset1(a));
  CHECK(p.entries()[1].left == elem::num(1));
  CHECK(p.entries()[1].child == vset2(a, b));
  CHECK(vset1(a).entries().size() == 1);

  CHECK(vpair(dot(0), dot(1)) != vpair(dot(1), dot(0)));
  CHECK(vpair(dot(0), dot(0)) == vpair(dot(0), dot(0)));
}

TEST_CASE("check names") {
  CHECK(check_name(HfSet{}) == Name::empty());
  HfSet one = HfSet::of({HfSet{}});
  Name n1 = check_name(one);
  REQUIRE(n1.entries().size() == 1);
  CHECK(n1.entries()[0].left == elem::num(0));
  CHECK(n1.entries()[0].child == Name::empty());

  HfSet two = HfSet::of({HfSet{}, one});
  Name n2 = check_name(two);
  REQUIRE(n2.entries().size() == 2);
  CHECK(n2.entries()[0].left == elem::num(0));
  CHECK(n2.entries()[1].left == elem::num(0));

  // structural absoluteness at rank <= 4
  std::vector<HfSet> pool = {HfSet{}, one, two, HfSet::number(3), HfSet::of({two}),
                             HfSet::of({one, HfSet::number(2)})};
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = 0; j < pool.size(); ++j)
      CHECK((check_name(pool[i]) == check_name(pool[j])) == (pool[i] == pool[j]));
}

TEST_CASE("embedding typed elements") {
  CHECK(embed(elem::num(1), TypeCode::nfin(3), kB) == dot(1));
  CHECK(embed(elem::num(2), TypeCode::nat(), kB) == dot(2));
  CHECK_THROWS_AS(embed(elem::num(5), TypeCode::nfin(3), kB), NotInType);

  // identity inhabitants embed to the empty name
  TypeCode i00 = TypeCode::identity(TypeCode::nfin(2), elem::num(0), elem::num(0));
  CHECK(embed(elem::num(0), i00, kB) == Name::empty());

  // sigma embeds to the internal pair of the embedded projections
  TypeCode s = TypeCode::sigma(TypeCode::nfin(2), kfam(TypeCode::nfin(2)));
  CHECK(embed(elem::pair(elem::num(0), elem::num(1)), s, kB) == vpair(dot(0), dot(1)));

  // pi embeds to its tabulated graph
  TypeCode p = TypeCode::pi(TypeCode::nfin(2), kfam(TypeCode::nfin(2)));
  Element f = eval_or_throw(lam("x", tm::v("x")));
  Name g = embed(f, p, kB);
  REQUIRE(g.entries().size() == 2);
  CHECK(g.entries()[0].child == vpair(dot(0), dot(0)));
  CHECK(g.entries()[1].child == vpair(dot(1), dot(1)));
  CHECK(g.complete());
}

TEST_CASE("embedding respects the relation (injective presentation, forward)") {
  TypeCode p = TypeCode::pi(TypeCode::nfin(2), kfam(TypeCode::nfin(2)));
  Element f = eval_or_throw(lam("x", tm::v("x")));
  Element g = eval_or_throw(lam("x", tm::D(tm::v("x"))(num(0))(num(0))(num(1))));
  REQUIRE(elem_equiv(f, g, p, kB).holds());
  CHECK(embed(f, p, kB) == embed(g, p, kB));

  TypeCode s = TypeCode::sigma(TypeCode::nfin(1), kfam(p));
  Element sf = elem::pair(elem::num(0), f);
  Element sg = elem::pair(elem::num(0), g);
  REQUIRE(elem_equiv(sf, sg, s, kB).holds());
  CHECK(embed(sf, s, kB) == embed(sg, s, kB));
}

TEST_CASE("canonical extensions and families") {
  CHECK(x_of(TypeCode::nfin(2), kB) == dot(2));
  CHECK(x_of(TypeCode::nfin(0), kB) == Name::empty());
  Name xn = x_of(TypeCode::nat(), kB);
  CHECK(xn.entries().size() == kB.enum_bound);
  CHECK(!xn.complete());
  // same truncated entries as the canonical omega name
  CHECK(xn == dot_omega(kB.enum_bound));

  Name f1 = f_of(TypeCode::nfin(1), kfam(TypeCode::nfin(1)), kB);
  REQUIRE(f1.entries().size() == 1);
  CHECK(f1.entries()[0].child == vpair(dot(0), dot(1)));

  // structural invariance under type equivalence
  Term code2 = TypeCode::nfin(2).code().term();
  Element i = kfam(TypeCode::nfin(2));
  Element j = eval_or_throw(lam("x", tm::D(tm::v("x"))(num(0))(code2)(code2)));
  TypeCode pi_i = TypeCode::pi(TypeCode::nfin(2), i);
  TypeCode pi_j = TypeCode::pi(TypeCode::nfin(2), j);
  REQUIRE(type_equiv(pi_i, pi_j, kB).holds());
  CHECK(x_of(pi_i, kB) == x_of(pi_j, kB));
  CHECK(f_of(TypeCode::nfin(2), i, kB) == f_of(TypeCode::nfin(2), j, kB));
}

TEST_CASE("rank decreases to children") {
  std::vector<Name> pool = {dot(3), vpair(dot(1), dot(2)), check_name(HfSet::number(3)),
                            x_of(TypeCode::sigma(TypeCode::nfin(2), kfam(TypeCode::nfin(2))), kB)};
  for (const auto& n : pool)
    for (const auto& e : n.entries()) CHECK(e.child.rank() < n.rank());
}
