#include "extreal/formula.hpp"

#include <atomic>
#include <stdexcept>

namespace extreal {

struct NameExpr::Node {
  Kind kind;
  Name name;                      // Lit
  std::string var;                // Var
  std::shared_ptr<const Node> a, b;  // Pair/Set1/Set2
  uint64_t n = 0;                 // Dot / DotOmega
  std::shared_ptr<TypeCode> sigma;   // XOf / FOf
  std::optional<Element> family;  // FOf
  HfSet hf;                       // Check
};

NameExpr NameExpr::lit(Name n) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Lit;
  node->name = std::move(n);
  NameExpr e;
  e.node_ = std::move(node);
  return e;
}
NameExpr NameExpr::var(std::string v) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->var = std::move(v);
  NameExpr e;
  e.node_ = std::move(node);
  return e;
}
NameExpr NameExpr::pair(NameExpr x, NameExpr y) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pair;
  node->a = x.node_;
  node->b = y.node_;
  NameExpr e;
  e.node_ = std::move(node);
  return e;
}
NameExpr NameExpr::set1(NameExpr x) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Set1;
  node->a = x.node_;
  NameExpr e;
  e.node_ = std::move(node);
  return e;
}
NameExpr NameExpr::set2(NameExpr x, NameExpr y) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Set2;
  node->a = x.node_;
  node->b = y.node_;
  NameExpr e;
  e.node_ = std::move(node);
  return e;
}
NameExpr NameExpr::dotn(uint64_t n) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Dot;
  node->n = n;
  NameExpr e;
  e.node_ = std::move(node);
  return e;
}
NameExpr NameExpr::dot_omega(uint64_t bound) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::DotOmega;
  node->n = bound;
  NameExpr e;
  e.node_ = std::move(node);
  return e;
}
NameExpr NameExpr::xof(TypeCode sigma) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::XOf;
  node->sigma = std::make_shared<TypeCode>(std::move(sigma));
  NameExpr e;
  e.node_ = std::move(node);
  return e;
}
NameExpr NameExpr::fof(TypeCode sigma, Element family) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::FOf;
  node->sigma = std::make_shared<TypeCode>(std::move(sigma));
  node->family = std::move(family);
  NameExpr e;
  e.node_ = std::move(node);
  return e;
}
NameExpr NameExpr::check(HfSet u) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Check;
  node->hf = std::move(u);
  NameExpr e;
  e.node_ = std::move(node);
  return e;
}

Name NameExpr::eval(const Env& env, const Bounds& bounds) const {
  NameExpr sub;  // helper for children
  switch (node_->kind) {
    case Kind::Lit: return node_->name;
    case Kind::Var: {
      auto it = env.find(node_->var);
      if (it == env.end()) throw std::runtime_error("unbound name variable: " + node_->var);
      return it->second;
    }
    case Kind::Pair: {
      sub.node_ = node_->a;
      Name x = sub.eval(env, bounds);
      sub.node_ = node_->b;
      return vpair(x, sub.eval(env, bounds));
    }
    case Kind::Set1: {
      sub.node_ = node_->a;
      return vset1(sub.eval(env, bounds));
    }
    case Kind::Set2: {
      sub.node_ = node_->a;
      Name x = sub.eval(env, bounds);
      sub.node_ = node_->b;
      return vset2(x, sub.eval(env, bounds));
    }
    case Kind::Dot: return dot(node_->n);
    case Kind::DotOmega: return extreal::dot_omega(node_->n);
    case Kind::XOf: return x_of(*node_->sigma, bounds);
    case Kind::FOf: return f_of(*node_->sigma, *node_->family, bounds);
    case Kind::Check: return check_name(node_->hf);
  }
  throw std::logic_error("unreachable");
}

std::string NameExpr::to_string() const {
  NameExpr sub;
  switch (node_->kind) {
    case Kind::Lit: return node_->name.to_string();
    case Kind::Var: return node_->var;
    case Kind::Pair: {
      sub.node_ = node_->a;
      std::string x = sub.to_string();
      sub.node_ = node_->b;
      return "(vpair " + x + " " + sub.to_string() + ")";
    }
    case Kind::Set1: {
      sub.node_ = node_->a;
      return "(vset1 " + sub.to_string() + ")";
    }
    case Kind::Set2: {
      sub.node_ = node_->a;
      std::string x = sub.to_string();
      sub.node_ = node_->b;
      return "(vset2 " + x + " " + sub.to_string() + ")";
    }
    case Kind::Dot: return "(dot " + std::to_string(node_->n) + ")";
    case Kind::DotOmega: return "(dotomega " + std::to_string(node_->n) + ")";
    case Kind::XOf: return "(xof " + node_->sigma->to_string() + ")";
    case Kind::FOf:
      return "(fof " + node_->sigma->to_string() + " " + node_->family->to_string() + ")";
    case Kind::Check: return "(check " + node_->hf.to_string() + ")";
  }
  return "?";
}

namespace {
std::string fresh(const char* base) {
  static std::atomic<uint64_t> counter{0};
  return std::string("?") + base + std::to_string(counter.fetch_add(1));
}
}  // namespace

Formula sing_formula(NameExpr w, NameExpr x) {
  std::string v = fresh("v");
  return Formula::conj(Formula::all_in(v, w, Formula::eq(NameExpr::var(v), x)),
                       Formula::mem(x, w));
}

Formula pair2_formula(NameExpr w, NameExpr x, NameExpr y) {
  std::string v = fresh("v");
  return Formula::conj(
      Formula::all_in(v, w,
                      Formula::disj(Formula::eq(NameExpr::var(v), x),
                                    Formula::eq(NameExpr::var(v), y))),
      Formula::conj(Formula::mem(x, w), Formula::mem(y, w)));
}

Formula op_formula(NameExpr z, NameExpr x, NameExpr y) {
  std::string w = fresh("w");
  return Formula::conj(
      Formula::all_in(w, z,
                      Formula::disj(sing_formula(NameExpr::var(w), x),
                                    pair2_formula(NameExpr::var(w), x, y))),
      Formula::conj(Formula::ex_in(w, z, sing_formula(NameExpr::var(w), x)),
                    Formula::ex_in(w, z, pair2_formula(NameExpr::var(w), x, y))));
}

Formula rel_domsub_formula(NameExpr f, NameExpr x) {
  std::string z = fresh("z"), xv = fresh("x"), yv = fresh("y");
  return Formula::all_in(
      z, f,
      Formula::ex_in(xv, x,
                     Formula::ex(yv, op_formula(NameExpr::var(z), NameExpr::var(xv),
                                                NameExpr::var(yv)))));
}

Formula totality_formula(NameExpr x, NameExpr f) {
  std::string xv = fresh("x"), yv = fresh("y"), z = fresh("z");
  return Formula::all_in(
      xv, x,
      Formula::ex(yv, Formula::ex_in(z, f,
                                     op_formula(NameExpr::var(z), NameExpr::var(xv),
                                                NameExpr::var(yv)))));
}

Formula functional_formula(NameExpr f) {
  std::string z0 = fresh("z0"), z1 = fresh("z1"), xv = fresh("x"), y0 = fresh("y0"),
              y1 = fresh("y1");
  Formula prem = Formula::conj(
      op_formula(NameExpr::var(z0), NameExpr::var(xv), NameExpr::var(y0)),
      op_formula(NameExpr::var(z1), NameExpr::var(xv), NameExpr::var(y1)));
  Formula concl = Formula::eq(NameExpr::var(y0), NameExpr::var(y1));
  return Formula::all_in(
      z0, f,
      Formula::all_in(
          z1, f,
          Formula::all(xv, Formula::all(y0, Formula::all(y1, Formula::imp(prem, concl))))));
}

Formula fun_dom_formula(NameExpr f, NameExpr x) {
  return Formula::conj(rel_domsub_formula(f, x),
                       Formula::conj(totality_formula(x, f), functional_formula(f)));
}

Formula empty_formula(NameExpr z) {
  return Formula::eq(z, NameExpr::lit(Name::empty()));
}

}  // namespace extreal
