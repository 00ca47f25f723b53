// Type codes with unique readability. Every code is a PCA element:
//   NFin n  = P 0 n          Nat     = P 1 0
//   Pi s i  = P 2 (P s i)    Sigma s i = P 3 (P s i)
//   Id s a b = P 4 (P s (P a b))
//   W s i   = P 5 (P s i)

#ifndef EXTREAL_TYPECODE_HPP
#define EXTREAL_TYPECODE_HPP

#include <memory>
#include <stdexcept>
#include <variant>

#include "extreal/term.hpp"

namespace extreal {

struct NotATypeCode : std::runtime_error {
  explicit NotATypeCode(const std::string& what) : std::runtime_error(what) {}
};

class TypeCode {
public:
  struct NFin {
    uint64_t n;
  };
  struct Nat {};
  struct Pi {
    std::shared_ptr<const TypeCode> base;
    Element family;
  };
  struct Sigma {
    std::shared_ptr<const TypeCode> base;
    Element family;
  };
  struct Id {
    std::shared_ptr<const TypeCode> base;
    Element left, right;
  };
  struct W {
    std::shared_ptr<const TypeCode> base;
    Element family;
  };
  using Decoded = std::variant<NFin, Nat, Pi, Sigma, Id, W>;

  static TypeCode nfin(uint64_t n);
  static TypeCode nat();
  static TypeCode pi(TypeCode base, Element family);
  static TypeCode sigma(TypeCode base, Element family);
  static TypeCode identity(TypeCode base, Element left, Element right);
  static TypeCode w(TypeCode base, Element family);

  // Pattern-matches a normal form; throws NotATypeCode when the shape
  // matches no constructor. Bases decode recursively, families stay raw.
  static TypeCode decode(const Element& e);

  const Element& code() const { return code_; }
  const Decoded& view() const { return *decoded_; }

  bool is_nfin() const { return std::holds_alternative<NFin>(*decoded_); }
  bool is_nat() const { return std::holds_alternative<Nat>(*decoded_); }
  bool is_pi() const { return std::holds_alternative<Pi>(*decoded_); }
  bool is_sigma() const { return std::holds_alternative<Sigma>(*decoded_); }
  bool is_id() const { return std::holds_alternative<Id>(*decoded_); }
  bool is_w() const { return std::holds_alternative<W>(*decoded_); }

  friend bool operator==(const TypeCode& a, const TypeCode& b) { return a.code_ == b.code_; }
  friend bool operator!=(const TypeCode& a, const TypeCode& b) { return !(a == b); }

  std::string to_string() const;

private:
  TypeCode(Element code, Decoded decoded);
  Element code_;
  std::shared_ptr<const Decoded> decoded_;
};

struct TypeCodeHash {
  size_t operator()(const TypeCode& t) const { return t.code().hash(); }
};

}  // namespace extreal

#endif
