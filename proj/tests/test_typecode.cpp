#include <doctest.h>

#include "extreal/combinators.hpp"
#include "extreal/typecode.hpp"

using namespace extreal;
using tm::num;

TEST_CASE("encodings are the pinned pair shapes") {
  CHECK(TypeCode::nfin(2).code().term() == tm::P(num(0))(num(2)));
  CHECK(TypeCode::nat().code().term() == tm::P(num(1))(num(0)));
  Element fam = elem::k();
  TypeCode n2 = TypeCode::nfin(2);
  CHECK(TypeCode::pi(n2, fam).code().term() == tm::P(num(2))(tm::P(n2.code().term())(tm::K)));
  CHECK(TypeCode::sigma(n2, fam).code().term() == tm::P(num(3))(tm::P(n2.code().term())(tm::K)));
  CHECK(TypeCode::identity(n2, elem::num(0), elem::num(1)).code().term() ==
        tm::P(num(4))(tm::P(n2.code().term())(tm::P(num(0))(num(1)))));
  CHECK(TypeCode::w(n2, fam).code().term() == tm::P(num(5))(tm::P(n2.code().term())(tm::K)));
}

TEST_CASE("decode round trips and rejects junk") {
  CHECK(TypeCode::decode(Element::trusted(tm::P(num(0))(num(2)))).is_nfin());
  CHECK(TypeCode::decode(Element::trusted(tm::P(num(1))(num(0)))).is_nat());

  TypeCode pi = TypeCode::pi(TypeCode::nfin(1), Element::trusted(tm::K(TypeCode::nfin(2).code().term())));
  TypeCode back = TypeCode::decode(pi.code());
  CHECK(back == pi);
  CHECK(back.is_pi());
  CHECK(std::get<TypeCode::Pi>(back.view()).base->is_nfin());

  CHECK_THROWS_AS(TypeCode::decode(elem::num(3)), NotATypeCode);
  CHECK_THROWS_AS(TypeCode::decode(elem::k()), NotATypeCode);
  CHECK_THROWS_AS(TypeCode::decode(Element::trusted(tm::P(num(9))(num(0)))), NotATypeCode);
  CHECK_THROWS_AS(TypeCode::decode(Element::trusted(tm::P(num(1))(num(1)))), NotATypeCode);
}

TEST_CASE("unique readability: distinct constructors, distinct codes") {
  Element famA = Element::trusted(tm::K(TypeCode::nfin(1).code().term()));
  std::vector<TypeCode> pool = {
      TypeCode::nfin(0),  TypeCode::nfin(1), TypeCode::nat(),
      TypeCode::pi(TypeCode::nfin(1), famA), TypeCode::sigma(TypeCode::nfin(1), famA),
      TypeCode::w(TypeCode::nfin(1), famA),
      TypeCode::identity(TypeCode::nfin(2), elem::num(0), elem::num(1)),
      TypeCode::identity(TypeCode::nfin(2), elem::num(0), elem::num(0)),
  };
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i + 1; j < pool.size(); ++j) CHECK(pool[i].code() != pool[j].code());
}
