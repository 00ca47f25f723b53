#include "extreal/term.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace extreal {

std::string_view comb_name(Comb c) {
  switch (c) {
    case Comb::K: return "K";
    case Comb::S: return "S";
    case Comb::P: return "P";
    case Comb::P0: return "P0";
    case Comb::P1: return "P1";
    case Comb::Succ: return "SUCC";
    case Comb::Pred: return "PRED";
    case Comb::D: return "D";
    case Comb::Oracle: return "ORACLE";
  }
  return "?";
}

namespace {
size_t mix(size_t a, size_t b) {
  return a * 1000003u ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}
}  // namespace

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->closed = false;
  n->name = std::move(name);
  n->hash = mix(1, std::hash<std::string>()(n->name));
  return wrap(std::move(n));
}

Term Term::constant(Comb c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->closed = true;
  n->comb = c;
  n->hash = mix(2, static_cast<size_t>(c));
  return wrap(std::move(n));
}

Term Term::numeral(uint64_t v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Numeral;
  n->closed = true;
  n->num = v;
  n->hash = mix(3, static_cast<size_t>(v));
  return wrap(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->closed = fun.node_->closed && arg.node_->closed;
  n->hash = mix(4, mix(fun.node_->hash, arg.node_->hash));
  n->fun = fun.node_;
  n->arg = arg.node_;
  return wrap(std::move(n));
}

const std::string& Term::var_name() const {
  assert(is_var());
  return node_->name;
}
Comb Term::comb() const {
  assert(is_const());
  return node_->comb;
}
uint64_t Term::numeral_value() const {
  assert(is_numeral());
  return node_->num;
}
Term Term::fun() const {
  assert(is_app());
  return wrap(node_->fun);
}
Term Term::arg() const {
  assert(is_app());
  return wrap(node_->arg);
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Term::Kind::Var: return a.node_->name == b.node_->name;
    case Term::Kind::Const: return a.node_->comb == b.node_->comb;
    case Term::Kind::Numeral: return a.node_->num == b.node_->num;
    case Term::Kind::App: return a.fun() == b.fun() && a.arg() == b.arg();
  }
  return false;
}

int Term::compare(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return 0;
  auto ka = static_cast<int>(a.node_->kind), kb = static_cast<int>(b.node_->kind);
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (a.node_->kind) {
    case Kind::Var: return a.node_->name.compare(b.node_->name);
    case Kind::Const: {
      auto ca = static_cast<int>(a.node_->comb), cb = static_cast<int>(b.node_->comb);
      return ca == cb ? 0 : (ca < cb ? -1 : 1);
    }
    case Kind::Numeral:
      return a.node_->num == b.node_->num ? 0 : (a.node_->num < b.node_->num ? -1 : 1);
    case Kind::App: {
      int c = compare(a.fun(), b.fun());
      return c != 0 ? c : compare(a.arg(), b.arg());
    }
  }
  return 0;
}

std::string Term::to_string() const {
  std::ostringstream os;
  // Applications print as flattened spines: (h a1 a2 ...)
  if (is_app()) {
    std::vector<Term> args;
    Term h = spine_head(*this, args);
    os << '(' << h.to_string();
    for (const auto& a : args) os << ' ' << a.to_string();
    os << ')';
    return os.str();
  }
  switch (kind()) {
    case Kind::Var: return node_->name;
    case Kind::Const: return std::string(comb_name(node_->comb));
    case Kind::Numeral: return std::to_string(node_->num);
    default: break;
  }
  return "?";
}

Term spine_head(const Term& t, std::vector<Term>& args) {
  args.clear();
  Term cur = t;
  while (cur.is_app()) {
    args.push_back(cur.arg());
    cur = cur.fun();
  }
  std::reverse(args.begin(), args.end());
  return cur;
}

Term spine_build(Term head, const std::vector<Term>& args, size_t from) {
  Term t = std::move(head);
  for (size_t i = from; i < args.size(); ++i) t = Term::app(t, args[i]);
  return t;
}

Term substitute(const Term& t, const std::string& name, const Term& value) {
  switch (t.kind()) {
    case Term::Kind::Var: return t.var_name() == name ? value : t;
    case Term::Kind::Const:
    case Term::Kind::Numeral: return t;
    case Term::Kind::App: {
      if (t.closed()) return t;
      return Term::app(substitute(t.fun(), name, value), substitute(t.arg(), name, value));
    }
  }
  return t;
}

bool occurs_free(const Term& t, const std::string& name) {
  switch (t.kind()) {
    case Term::Kind::Var: return t.var_name() == name;
    case Term::Kind::Const:
    case Term::Kind::Numeral: return false;
    case Term::Kind::App:
      return !t.closed() && (occurs_free(t.fun(), name) || occurs_free(t.arg(), name));
  }
  return false;
}

namespace {
// Arguments a constant must see before its rule can fire. A spine with
// fewer arguments is a value head.
int comb_arity(Comb c) {
  switch (c) {
    case Comb::K: return 2;
    case Comb::S: return 3;
    case Comb::P: return 3;
    case Comb::P0: return 1;
    case Comb::P1: return 1;
    case Comb::Succ: return 1;
    case Comb::Pred: return 1;
    case Comb::D: return 4;
    case Comb::Oracle: return 1;
  }
  return 0;
}
}  // namespace

bool is_value(const Term& t) {
  if (t.is_var()) return false;
  if (!t.is_app()) return true;
  std::vector<Term> args;
  Term h = spine_head(t, args);
  if (!h.is_const()) return false;  // numeral or var applied
  if (static_cast<int>(args.size()) >= comb_arity(h.comb())) return false;
  for (const auto& a : args)
    if (!is_value(a)) return false;
  return true;
}

namespace tm {
const Term K = Term::constant(Comb::K);
const Term S = Term::constant(Comb::S);
const Term P = Term::constant(Comb::P);
const Term P0 = Term::constant(Comb::P0);
const Term P1 = Term::constant(Comb::P1);
const Term SUCC = Term::constant(Comb::Succ);
const Term PRED = Term::constant(Comb::Pred);
const Term D = Term::constant(Comb::D);
const Term ORACLE = Term::constant(Comb::Oracle);
Term num(uint64_t n) { return Term::numeral(n); }
Term v(std::string name) { return Term::var(std::move(name)); }
}  // namespace tm

Element Element::trusted(Term t) {
  if (!t.closed() || !is_value(t))
    throw std::logic_error("Element::trusted: term is not a closed value: " + t.to_string());
  return Element(std::move(t));
}

}  // namespace extreal
