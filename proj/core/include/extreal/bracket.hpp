// Translation of lambda bodies into pure applicative combinator terms.

#ifndef EXTREAL_BRACKET_HPP
#define EXTREAL_BRACKET_HPP

#include <initializer_list>
#include <string>

#include "extreal/term.hpp"

namespace extreal {

// Abstracts x out of t:
//   [x] x       = S K K
//   [x] atom    = K atom            (constants, numerals, other variables)
//   [x] (u v)   = S ([x]u) ([x]v)
//
// Applications are always descended into, even when x does not occur in
// them. The output is therefore a value whenever t's atoms are values,
// which keeps every abstraction defined no matter what closed subterms the
// body contains — required for the fixed-point construction, where the
// body mentions a self-application.
Term bracket_abstract(const std::string& x, const Term& t);

// lam({"x","y"}, body) abstracts right to left: [x]([y] body).
Term lam(std::initializer_list<std::string> vars, Term body);
Term lam(const std::string& var, Term body);

}  // namespace extreal

#endif
