#include "extreal/typecode.hpp"

#include <sstream>
#include <vector>

#include "extreal/combinators.hpp"

namespace extreal {

namespace {
Element tag_pair(uint64_t tag, const Term& payload) {
  return Element::trusted(tm::P(tm::num(tag))(payload));
}
}  // namespace

TypeCode::TypeCode(Element code, Decoded decoded)
    : code_(std::move(code)), decoded_(std::make_shared<Decoded>(std::move(decoded))) {}

TypeCode TypeCode::nfin(uint64_t n) { return TypeCode(tag_pair(0, tm::num(n)), NFin{n}); }

TypeCode TypeCode::nat() { return TypeCode(tag_pair(1, tm::num(0)), Nat{}); }

TypeCode TypeCode::pi(TypeCode base, Element family) {
  Element code = tag_pair(2, tm::P(base.code().term())(family.term()));
  return TypeCode(std::move(code), Pi{std::make_shared<TypeCode>(std::move(base)), std::move(family)});
}

TypeCode TypeCode::sigma(TypeCode base, Element family) {
  Element code = tag_pair(3, tm::P(base.code().term())(family.term()));
  return TypeCode(std::move(code),
                  Sigma{std::make_shared<TypeCode>(std::move(base)), std::move(family)});
}

TypeCode TypeCode::identity(TypeCode base, Element left, Element right) {
  Element code =
      tag_pair(4, tm::P(base.code().term())(tm::P(left.term())(right.term())));
  return TypeCode(std::move(code), Id{std::make_shared<TypeCode>(std::move(base)),
                                      std::move(left), std::move(right)});
}

TypeCode TypeCode::w(TypeCode base, Element family) {
  Element code = tag_pair(5, tm::P(base.code().term())(family.term()));
  return TypeCode(std::move(code), W{std::make_shared<TypeCode>(std::move(base)), std::move(family)});
}

namespace {
// Splits a value of shape (P a b) into its components.
bool split_pair(const Term& t, Term* a, Term* b) {
  std::vector<Term> args;
  Term h = spine_head(t, args);
  if (!h.is_const() || h.comb() != Comb::P || args.size() != 2) return false;
  *a = args[0];
  *b = args[1];
  return true;
}
}  // namespace

TypeCode TypeCode::decode(const Element& e) {
  Term tag = e.term(), payload = e.term();
  if (!split_pair(e.term(), &tag, &payload))
    throw NotATypeCode("not a type code: " + e.to_string());
  if (!tag.is_numeral()) throw NotATypeCode("type tag is not a numeral: " + e.to_string());
  switch (tag.numeral_value()) {
    case 0:
      if (!payload.is_numeral()) throw NotATypeCode("finite type size is not a numeral");
      return nfin(payload.numeral_value());
    case 1:
      if (!(payload.is_numeral() && payload.numeral_value() == 0))
        throw NotATypeCode("malformed natural number code");
      return nat();
    case 2:
    case 3:
    case 5: {
      Term base = payload, family = payload;
      if (!split_pair(payload, &base, &family))
        throw NotATypeCode("malformed binder payload: " + e.to_string());
      TypeCode b = decode(Element::trusted(base));
      Element f = Element::trusted(family);
      uint64_t k = tag.numeral_value();
      return k == 2 ? pi(std::move(b), std::move(f))
                    : (k == 3 ? sigma(std::move(b), std::move(f)) : w(std::move(b), std::move(f)));
    }
    case 4: {
      Term base = payload, rest = payload, left = payload, right = payload;
      if (!split_pair(payload, &base, &rest) || !split_pair(rest, &left, &right))
        throw NotATypeCode("malformed identity payload: " + e.to_string());
      return identity(decode(Element::trusted(base)), Element::trusted(left),
                      Element::trusted(right));
    }
    default:
      throw NotATypeCode("unknown type tag: " + e.to_string());
  }
}

std::string TypeCode::to_string() const {
  std::ostringstream os;
  struct V {
    std::ostringstream& os;
    void operator()(const NFin& x) { os << "(nfin " << x.n << ")"; }
    void operator()(const Nat&) { os << "(nat)"; }
    void operator()(const Pi& x) {
      os << "(pi " << x.base->to_string() << " " << x.family.to_string() << ")";
    }
    void operator()(const Sigma& x) {
      os << "(sigma " << x.base->to_string() << " " << x.family.to_string() << ")";
    }
    void operator()(const Id& x) {
      os << "(id " << x.base->to_string() << " " << x.left.to_string() << " "
         << x.right.to_string() << ")";
    }
    void operator()(const W& x) {
      os << "(w " << x.base->to_string() << " " << x.family.to_string() << ")";
    }
  } v{os};
  std::visit(v, *decoded_);
  return os.str();
}

}  // namespace extreal
