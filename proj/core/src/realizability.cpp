#include "extreal/realizability.hpp"

#include <cstdio>
#include <functional>
#include <unordered_map>

#include "extreal/toolkit.hpp"

namespace extreal {

Pool Pool::explicit_pairs(std::vector<std::pair<Element, Element>> pairs,
                          std::vector<Name> universe, bool exhaustive) {
  Pool p;
  p.pairs = std::move(pairs);
  p.universe = std::move(universe);
  p.provenance = Provenance::Explicit;
  p.universe_exhaustive = exhaustive;
  return p;
}

Pool Pool::enumeration(uint64_t size_bound, std::vector<std::pair<Element, Element>> seed_pairs,
                       std::vector<Name> universe) {
  Pool p;
  p.pairs = std::move(seed_pairs);
  p.universe = std::move(universe);
  p.provenance = Provenance::TermEnum;
  p.size_bound = size_bound;
  p.alphabet = default_alphabet();
  return p;
}

std::vector<Element> Pool::default_alphabet() {
  return {elem::k(), elem::s(), elem::p(), elem::num(0), elem::num(1)};
}

std::string Verdict::digest() const {
  // FNV-1a over a canonical rendering of the trace
  uint64_t h = 1469598103934665603ull;
  auto eat = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  std::function<void(const TraceNode&)> walk = [&](const TraceNode& n) {
    eat(n.clause);
    eat(n.note);
    eat(tri_name(n.state.v));
    eat("(");
    for (const auto& k : n.children) walk(k);
    eat(")");
  };
  walk(trace);
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

int comb_arity_for_enum(Comb c) {
  switch (c) {
    case Comb::K: return 2;
    case Comb::S: return 3;
    case Comb::P: return 3;
    case Comb::D: return 4;
    default: return 1;
  }
}

struct Checker {
  const Pool& pool;
  const Bounds& bounds;
  uint64_t pairs_checked = 0;

  struct JKey {
    Element a, b;
    Name x, y;
    bool is_mem;
    bool operator==(const JKey& o) const {
      return is_mem == o.is_mem && a == o.a && b == o.b && x == o.x && y == o.y;
    }
  };
  struct JKeyHash {
    size_t operator()(const JKey& k) const {
      size_t h = k.a.hash();
      h = h * 1000003u ^ k.b.hash();
      h = h * 1000003u ^ k.x.hash();
      h = h * 1000003u ^ k.y.hash();
      return h * 2u + (k.is_mem ? 1 : 0);
    }
  };
  std::unordered_map<JKey, TriState, JKeyHash> memo;

  struct Proj {
    TriState st = TriState::yes();
    std::optional<Element> val;
  };

  // The same realizer pieces are applied to the same small set of entry
  // elements over and over across quantifier scans; caching the rewrite
  // outcomes makes the scans tree-walks instead of re-evaluations.
  std::unordered_map<std::pair<Element, Element>, Proj, ElementPairHash> app_cache;

  Proj project(const Element& e, int idx) {
    return app(idx == 0 ? elem::p0() : elem::p1(), e);
  }

  Proj app(const Element& f, const Element& x) {
    auto key = std::make_pair(f, x);
    if (auto it = app_cache.find(key); it != app_cache.end()) return it->second;
    EvalOutcome o = apply(f, x, bounds.fuel);
    Proj r;
    if (o.defined())
      r = {TriState::yes(), o.value};
    else if (o.fuel_out())
      r = {TriState::maybe(UnknownReason::Fuel), std::nullopt};
    else
      r = {TriState::no(), std::nullopt};
    app_cache.emplace(std::move(key), r);
    return r;
  }

  // a=b realizes x in y
  TriState mem(const Element& a, const Element& b, const Name& x, const Name& y,
               TraceNode& out) {
    out.clause = "mem";
    JKey key{a, b, x, y, true};
    if (auto it = memo.find(key); it != memo.end()) {
      out.note = "cached";
      return out.state = it->second;
    }
    TriState r = mem_raw(a, b, x, y, out);
    memo[key] = r;
    return out.state = r;
  }

  TriState mem_raw(const Element& a, const Element& b, const Name& x, const Name& y,
                   TraceNode& out) {
    Proj a0 = project(a, 0), b0 = project(b, 0), a1 = project(a, 1), b1 = project(b, 1);
    TriState pr = a0.st.and_then(b0.st).and_then(a1.st).and_then(b1.st);
    if (!pr.holds()) {
      out.note = "projection failed";
      return pr;
    }
    bool saw_unknown = false;
    size_t idx = 0;
    for (const auto& e : y.entries()) {
      ++idx;
      if (!(e.left == *a0.val && e.right == *b0.val)) continue;
      TraceNode sub;
      TriState r = eq(*a1.val, *b1.val, x, e.child, sub);
      out.children.push_back(std::move(sub));
      if (r.holds()) {
        out.note = "witness entry " + std::to_string(idx - 1);
        return r;
      }
      if (r.unknown()) saw_unknown = true;
    }
    if (saw_unknown) return TriState::maybe(UnknownReason::Fuel);
    if (!y.complete()) return TriState::maybe(UnknownReason::EnumBound);
    return TriState::no();
  }

  // a=b realizes x = y
  TriState eq(const Element& a, const Element& b, const Name& x, const Name& y,
              TraceNode& out) {
    out.clause = "eq";
    JKey key{a, b, x, y, false};
    if (auto it = memo.find(key); it != memo.end()) {
      out.note = "cached";
      return out.state = it->second;
    }
    // cycle guard; names are well-founded so a genuine revisit cannot decide
    memo.emplace(key, TriState::maybe(UnknownReason::EnumBound));
    TriState r = eq_raw(a, b, x, y, out);
    memo[key] = r;
    return out.state = r;
  }

  TriState eq_raw(const Element& a, const Element& b, const Name& x, const Name& y,
                  TraceNode& out) {
    TriState acc = TriState::yes();
    for (int side = 0; side < 2; ++side) {
      const Name& src = side == 0 ? x : y;
      const Name& dst = side == 0 ? y : x;
      for (const auto& e : src.entries()) {
        Proj ac = app(a, e.left), bd = app(b, e.right);
        TriState pr = ac.st.and_then(bd.st);
        if (!pr.holds()) {
          acc = acc.and_then(pr);
          if (acc.refuted()) return acc;
          continue;
        }
        Proj pa = project(*ac.val, side), pb = project(*bd.val, side);
        pr = pa.st.and_then(pb.st);
        if (!pr.holds()) {
          acc = acc.and_then(pr);
          if (acc.refuted()) return acc;
          continue;
        }
        TraceNode sub;
        acc = acc.and_then(mem(*pa.val, *pb.val, e.child, dst, sub));
        out.children.push_back(std::move(sub));
        if (acc.refuted()) return acc;
      }
      if (!src.complete()) acc = acc.capped(UnknownReason::EnumBound);
    }
    return acc;
  }

  TriState fml(const Element& a, const Element& b, const Formula& f,
               const NameExpr::Env& env, TraceNode& out) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Mem: {
        Name x = f.lhs().eval(env, bounds);
        Name y = f.rhs().eval(env, bounds);
        return out.state = mem(a, b, x, y, out);
      }
      case K::Eq: {
        Name x = f.lhs().eval(env, bounds);
        Name y = f.rhs().eval(env, bounds);
        return out.state = eq(a, b, x, y, out);
      }
      case K::And: {
        out.clause = "and";
        Proj a0 = project(a, 0), b0 = project(b, 0), a1 = project(a, 1), b1 = project(b, 1);
        TriState pr = a0.st.and_then(b0.st).and_then(a1.st).and_then(b1.st);
        if (!pr.holds()) {
          out.note = "projection failed";
          return out.state = pr;
        }
        TraceNode l, r;
        TriState rl = fml(*a0.val, *b0.val, f.left(), env, l);
        TriState rr = rl.refuted() ? TriState::no()
                                   : fml(*a1.val, *b1.val, f.right(), env, r);
        out.children.push_back(std::move(l));
        if (!rl.refuted()) out.children.push_back(std::move(r));
        return out.state = rl.and_then(rr);
      }
      case K::Or: {
        out.clause = "or";
        Proj a0 = project(a, 0), b0 = project(b, 0), a1 = project(a, 1), b1 = project(b, 1);
        TriState pr = a0.st.and_then(b0.st).and_then(a1.st).and_then(b1.st);
        if (!pr.holds()) {
          out.note = "projection failed";
          return out.state = pr;
        }
        const Term& ta = a0.val->term();
        const Term& tb = b0.val->term();
        if (!(ta.is_numeral() && tb.is_numeral() &&
              ta.numeral_value() == tb.numeral_value() && ta.numeral_value() <= 1)) {
          out.note = "bad disjunction tag";
          return out.state = TriState::no();
        }
        TraceNode sub;
        out.note = ta.numeral_value() == 0 ? "left" : "right";
        TriState r = fml(*a1.val, *b1.val, ta.numeral_value() == 0 ? f.left() : f.right(),
                         env, sub);
        out.children.push_back(std::move(sub));
        return out.state = r;
      }
      case K::Not: {
        out.clause = "not";
        bool saw_unknown = false;
        for (const auto& [c, d] : pool.pairs) {
          ++pairs_checked;
          TraceNode sub;
          TriState r = fml(c, d, f.body(), env, sub);
          out.children.push_back(std::move(sub));
          if (r.holds()) {
            out.note = "pool pair realizes the body";
            return out.state = TriState::no();
          }
          if (r.unknown()) saw_unknown = true;
        }
        if (saw_unknown) return out.state = TriState::maybe(UnknownReason::Fuel);
        if (pool.provenance == Pool::Provenance::TermEnum)
          return out.state = TriState::maybe(UnknownReason::EnumBound);
        return out.state = TriState::yes();
      }
      case K::Imp: {
        out.clause = "imp";
        bool saw_unknown = false;
        for (const auto& [c, d] : pool.pairs) {
          ++pairs_checked;
          TraceNode prem;
          TriState rp = fml(c, d, f.left(), env, prem);
          if (rp.refuted()) continue;
          Proj ac = app(a, c), bd = app(b, d);
          TriState ap = ac.st.and_then(bd.st);
          if (!ap.holds()) {
            // undefined on a live premise: definite failure only if the
            // premise definitely holds and the application is stuck
            if (rp.holds() && ap.refuted()) {
              out.note = "application stuck on premise " + c.to_string();
              return out.state = TriState::no();
            }
            saw_unknown = true;
            continue;
          }
          TraceNode concl;
          TriState rc = fml(*ac.val, *bd.val, f.right(), env, concl);
          TraceNode step;
          step.clause = "imp-step";
          step.note = "premise " + c.to_string() + " / " + d.to_string();
          step.state = rc;
          step.children.push_back(std::move(prem));
          step.children.push_back(std::move(concl));
          out.children.push_back(std::move(step));
          if (rc.refuted()) {
            if (rp.holds()) {
              out.note = "counterexample pair";
              return out.state = TriState::no();
            }
            saw_unknown = true;
          } else if (rc.unknown()) {
            saw_unknown = true;
          }
        }
        if (saw_unknown) return out.state = TriState::maybe(UnknownReason::Fuel);
        if (pool.provenance == Pool::Provenance::TermEnum)
          return out.state = TriState::maybe(UnknownReason::EnumBound);
        return out.state = TriState::yes();
      }
      case K::AllIn: {
        out.clause = "allin";
        Name dom = f.domain().eval(env, bounds);
        TriState acc = TriState::yes();
        for (const auto& e : dom.entries()) {
          Proj ac = app(a, e.left), bd = app(b, e.right);
          TriState ap = ac.st.and_then(bd.st);
          if (!ap.holds()) {
            acc = acc.and_then(ap);
            if (acc.refuted()) {
              out.note = "application failed on entry";
              return out.state = acc;
            }
            continue;
          }
          NameExpr::Env env2 = env;
          env2.insert_or_assign(f.var(), e.child);
          TraceNode sub;
          acc = acc.and_then(fml(*ac.val, *bd.val, f.body(), env2, sub));
          out.children.push_back(std::move(sub));
          if (acc.refuted()) return out.state = acc;
        }
        if (!dom.complete()) acc = acc.capped(UnknownReason::EnumBound);
        return out.state = acc;
      }
      case K::ExIn: {
        out.clause = "exin";
        Name dom = f.domain().eval(env, bounds);
        Proj a0 = project(a, 0), b0 = project(b, 0), a1 = project(a, 1), b1 = project(b, 1);
        TriState pr = a0.st.and_then(b0.st).and_then(a1.st).and_then(b1.st);
        if (!pr.holds()) {
          out.note = "projection failed";
          return out.state = pr;
        }
        bool saw_unknown = false;
        size_t idx = 0;
        for (const auto& e : dom.entries()) {
          ++idx;
          if (!(e.left == *a0.val && e.right == *b0.val)) continue;
          NameExpr::Env env2 = env;
          env2.insert_or_assign(f.var(), e.child);
          TraceNode sub;
          TriState r = fml(*a1.val, *b1.val, f.body(), env2, sub);
          out.children.push_back(std::move(sub));
          if (r.holds()) {
            out.note = "witness entry " + std::to_string(idx - 1);
            return out.state = r;
          }
          if (r.unknown()) saw_unknown = true;
        }
        if (saw_unknown) return out.state = TriState::maybe(UnknownReason::Fuel);
        if (!dom.complete()) return out.state = TriState::maybe(UnknownReason::EnumBound);
        return out.state = TriState::no();
      }
      case K::All: {
        out.clause = "all";
        if (pool.universe.empty()) {
          out.note = "no universe fragment";
          return out.state = TriState::maybe(UnknownReason::EnumBound);
        }
        TriState acc = TriState::yes();
        for (const auto& u : pool.universe) {
          NameExpr::Env env2 = env;
          env2.insert_or_assign(f.var(), u);
          TraceNode sub;
          acc = acc.and_then(fml(a, b, f.body(), env2, sub));
          out.children.push_back(std::move(sub));
          if (acc.refuted()) return out.state = acc;
        }
        if (!pool.universe_exhaustive) acc = acc.capped(UnknownReason::EnumBound);
        return out.state = acc;
      }
      case K::Ex: {
        out.clause = "ex";
        bool saw_unknown = false;
        size_t idx = 0;
        for (const auto& u : pool.universe) {
          ++idx;
          NameExpr::Env env2 = env;
          env2.insert_or_assign(f.var(), u);
          TraceNode sub;
          TriState r = fml(a, b, f.body(), env2, sub);
          out.children.push_back(std::move(sub));
          if (r.holds()) {
            out.note = "witness " + std::to_string(idx - 1);
            return out.state = r;
          }
          if (r.unknown()) saw_unknown = true;
        }
        if (saw_unknown) return out.state = TriState::maybe(UnknownReason::Fuel);
        if (pool.universe_exhaustive) return out.state = TriState::no();
        return out.state = TriState::maybe(UnknownReason::EnumBound);
      }
    }
    return out.state = TriState::maybe(UnknownReason::None);
  }
};

void enum_with_atoms(const std::vector<Element>& alphabet, uint64_t max_atoms,
                     std::vector<std::vector<Element>>& by_size) {
  by_size.assign(max_atoms + 1, {});
  if (max_atoms == 0) return;
  by_size[1] = alphabet;
  // spines: head constant applied to fewer arguments than its rule needs
  for (uint64_t n = 2; n <= max_atoms; ++n) {
    for (const auto& head : alphabet) {
      if (!head.term().is_const()) continue;
      int max_args = comb_arity_for_enum(head.term().comb()) - 1;
      if (max_args < 1) continue;
      // compositions of n-1 atoms into k argument slots
      std::function<void(Term, uint64_t, int)> fill = [&](Term acc, uint64_t left, int slots) {
        if (slots == 0) {
          if (left == 0) by_size[n].push_back(Element::trusted(acc));
          return;
        }
        for (uint64_t take = 1; take + (slots - 1) <= left; ++take)
          for (const auto& arg : by_size[take])
            fill(Term::app(acc, arg.term()), left - take, slots - 1);
      };
      for (int k = 1; k <= max_args && static_cast<uint64_t>(k) <= n - 1; ++k)
        fill(head.term(), n - 1, k);
    }
  }
}

}  // namespace

std::vector<Element> enumerate_values(const std::vector<Element>& alphabet,
                                      uint64_t max_atoms) {
  std::vector<std::vector<Element>> by_size;
  enum_with_atoms(alphabet, max_atoms, by_size);
  std::vector<Element> out;
  for (const auto& bucket : by_size)
    for (const auto& e : bucket) out.push_back(e);
  return out;
}

Verdict check(const Element& a, const Element& b, const Formula& phi, const Pool& pool,
              const Bounds& bounds, const NameExpr::Env& env) {
  Checker ck{pool, bounds};
  Verdict v;
  v.state = ck.fml(a, b, phi, env, v.trace);
  v.checked_pairs = ck.pairs_checked;
  return v;
}

std::optional<SearchHit> search(const Formula& phi, const Pool& pool, const Bounds& bounds) {
  uint64_t tried = 0;
  for (const auto& [a, b] : pool.pairs) {
    ++tried;
    Verdict v = check(a, b, phi, pool, bounds);
    if (v.state.holds()) return SearchHit{a, b, std::move(v), tried};
  }
  if (pool.provenance == Pool::Provenance::TermEnum) {
    std::vector<std::vector<Element>> by_size;
    enum_with_atoms(pool.alphabet.empty() ? Pool::default_alphabet() : pool.alphabet,
                    pool.size_bound, by_size);
    for (const auto& bucket : by_size)
      for (const auto& t : bucket) {
        ++tried;
        Verdict v = check(t, t, phi, pool, bounds);
        if (v.state.holds()) return SearchHit{t, t, std::move(v), tried};
      }
  }
  return std::nullopt;
}

PairsLemmaReport check_pairs_lemma(const Bounds& bounds) {
  PairsLemmaReport report;
  std::vector<std::pair<std::string, Name>> grid = {
      {"0", dot(0)}, {"1", dot(1)}, {"2", dot(2)}, {"{{0}}", check_name(HfSet::of({HfSet::of({HfSet{}})}))}};

  // refl feeds equality premises; u0 feeds op premises, so the implications
  // below are exercised on live premises rather than vacuously
  Pool pool = Pool::explicit_pairs({{rz_refl(), rz_refl()}, {rz_u0(), rz_u0()}});

  auto run = [&](const std::string& desc, const Element& r, const Formula& f) {
    Verdict v = check(r, r, f, pool, bounds);
    report.instances.push_back({desc, v.state});
  };

  for (const auto& [nx, x] : grid)
    for (const auto& [ny, y] : grid) {
      NameExpr ex = NameExpr::lit(x), ey = NameExpr::lit(y);
      NameExpr pxy = NameExpr::lit(vpair(x, y));
      // u0 : op(<x,y>, x, y)
      run("u0 " + nx + "," + ny, rz_u0(), op_formula(pxy, ex, ey));
      // u2 : op(z,x,y) -> z = <x,y>, with z instantiated to the canonical pair
      run("u2 " + nx + "," + ny, rz_u2(),
          Formula::imp(op_formula(pxy, ex, ey), Formula::eq(pxy, pxy)));
    }

  // u1 : <x,y> = <u,v> -> x=u and y=v, on identical pairs (where the
  // premise is realizable from the pool)
  for (const auto& [nx, x] : grid)
    for (const auto& [ny, y] : grid) {
      NameExpr pxy = NameExpr::lit(vpair(x, y));
      Formula target = Formula::imp(
          Formula::eq(pxy, pxy),
          Formula::conj(Formula::eq(NameExpr::lit(x), NameExpr::lit(x)),
                        Formula::eq(NameExpr::lit(y), NameExpr::lit(y))));
      run("u1 " + nx + "," + ny, rz_u1(), target);
    }

  // distinct pairs: no pool pair realizes the premise, so the implication
  // holds vacuously over the pool
  {
    NameExpr p00 = NameExpr::lit(vpair(dot(0), dot(0)));
    NameExpr p01 = NameExpr::lit(vpair(dot(0), dot(1)));
    Formula target = Formula::imp(Formula::eq(p00, p01),
                                  Formula::eq(NameExpr::lit(dot(0)), NameExpr::lit(dot(1))));
    run("u1 vacuous premise", rz_u1(), target);
  }

  return report;
}

bool PairsLemmaReport::all_ok() const {
  for (const auto& i : instances)
    if (i.state.refuted()) return false;
  return true;
}

InjAgreement check_inj_converse(const Element& a, const Element& b, const TypeCode& sigma,
                                const Pool& pool, const Bounds& bounds) {
  TriState ina = elem_equiv(a, a, sigma, bounds);
  TriState inb = elem_equiv(b, b, sigma, bounds);
  if (ina.refuted() || inb.refuted()) return InjAgreement::Vacuous;
  if (ina.unknown() || inb.unknown()) return InjAgreement::Unknown;
  Name na, nb;
  try {
    na = embed(a, sigma, bounds);
    nb = embed(b, sigma, bounds);
  } catch (const NotInType&) {
    return InjAgreement::Vacuous;
  }
  auto hit = search(Formula::eq(NameExpr::lit(na), NameExpr::lit(nb)), pool, bounds);
  TriState ee = elem_equiv(a, b, sigma, bounds);
  if (ee.unknown()) return InjAgreement::Unknown;
  if (hit && ee.holds()) return InjAgreement::Agree;
  if (!hit && ee.refuted()) return InjAgreement::Agree;
  return InjAgreement::Disagree;
}

}  // namespace extreal
