#include "extreal/bracket.hpp"

namespace extreal {

Term bracket_abstract(const std::string& x, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (t.var_name() == x) return tm::S(tm::K)(tm::K);
      return tm::K(t);
    case Term::Kind::Const:
    case Term::Kind::Numeral:
      return tm::K(t);
    case Term::Kind::App:
      // Only closed values may be frozen under K; anything else is split so
      // the abstraction itself stays a value.
      if (t.closed() && is_value(t)) return tm::K(t);
      return tm::S(bracket_abstract(x, t.fun()))(bracket_abstract(x, t.arg()));
  }
  return tm::K(t);
}

Term lam(const std::string& var, Term body) { return bracket_abstract(var, body); }

Term lam(std::initializer_list<std::string> vars, Term body) {
  Term t = std::move(body);
  for (auto it = std::rbegin(vars); it != std::rend(vars); ++it) t = bracket_abstract(*it, t);
  return t;
}

}  // namespace extreal
