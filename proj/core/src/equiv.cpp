#include "extreal/equiv.hpp"

#include <algorithm>
#include <unordered_map>

#include "extreal/bracket.hpp"
#include "extreal/combinators.hpp"

namespace extreal {

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::Holds: return "holds";
    case Tri::Refuted: return "refuted";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

namespace {

// Caps that keep degenerate enumerations from exploding. Exceeding a cap
// yields an honest incomplete Per, never a wrong one.
constexpr size_t kMaxReps = 20000;

struct Ctx {
  Bounds bounds;
  std::unordered_map<Element, Per, ElementHash> per_cache;
  struct EqKey {
    Element a, b, sigma;
    uint64_t depth;
    bool operator==(const EqKey& o) const {
      return a == o.a && b == o.b && sigma == o.sigma && depth == o.depth;
    }
  };
  struct EqKeyHash {
    size_t operator()(const EqKey& k) const {
      size_t h = k.a.hash();
      h = h * 1000003u ^ k.b.hash();
      h = h * 1000003u ^ k.sigma.hash();
      h = h * 1000003u ^ k.depth;
      return h;
    }
  };
  std::unordered_map<EqKey, TriState, EqKeyHash> eq_cache;

  TriState elem_eq(const Element& a, const Element& b, const TypeCode& sigma, uint64_t w_depth);
  TriState type_eq(const TypeCode& a, const TypeCode& b);
  Per per(const TypeCode& sigma);
  TriState family_eq(const Element& i, const Element& j, const TypeCode& sigma);

  FamilyApp family(const Element& i, const Element& a) {
    EvalOutcome o = apply(i, a, bounds.fuel);
    if (o.fuel_out()) return {TriState::maybe(UnknownReason::Fuel), std::nullopt};
    if (!o.defined()) return {TriState::no(), std::nullopt};
    try {
      return {TriState::yes(), TypeCode::decode(*o.value)};
    } catch (const NotATypeCode&) {
      return {TriState::no(), std::nullopt};
    }
  }

  struct Projected {
    TriState status;
    std::optional<Element> value;
  };
  Projected project(const Element& a, int idx) {
    EvalOutcome o = reduce(idx == 0 ? proj0(a.term()) : proj1(a.term()), bounds.fuel);
    if (o.fuel_out()) return {TriState::maybe(UnknownReason::Fuel), std::nullopt};
    if (!o.defined()) return {TriState::no(), std::nullopt};
    return {TriState::yes(), o.value};
  }
};

// Equality test on tabulation keys: numerals and pairs of keys compare by
// nested D dispatch. Function-valued keys are not testable this way.
std::optional<Term> rep_matcher(const Term& rep, const Term& scrutinee, const Term& yes,
                                const Term& no) {
  if (rep.is_numeral()) return tm::D(scrutinee)(rep)(yes)(no);
  std::vector<Term> args;
  Term h = spine_head(rep, args);
  if (h.is_const() && h.comb() == Comb::P && args.size() == 2) {
    auto inner = rep_matcher(args[1], proj1(scrutinee), yes, no);
    if (!inner) return std::nullopt;
    return rep_matcher(args[0], proj0(scrutinee), *inner, no);
  }
  return std::nullopt;
}

// Builds the canonical table function sending key[j] to value[j]; the last
// value doubles as the innermost fallback.
std::optional<Element> tabulate(const std::vector<Element>& keys,
                                const std::vector<Element>& values, Fuel fuel) {
  if (keys.empty()) return elem::identity();
  Term body = values.back().term();
  for (size_t j = keys.size() - 1; j-- > 0;) {
    auto m = rep_matcher(keys[j].term(), tm::v("x"), values[j].term(), body);
    if (!m) return std::nullopt;
    body = *m;
  }
  EvalOutcome o = reduce(lam("x", body), fuel);
  if (!o.defined()) return std::nullopt;
  return o.value;
}

TriState Ctx::elem_eq(const Element& a, const Element& b, const TypeCode& sigma,
                      uint64_t w_depth) {
  EqKey key{a, b, Element::trusted(sigma.code().term()), w_depth};
  if (auto it = eq_cache.find(key); it != eq_cache.end()) return it->second;
  // In-flight marker: structural recursion on W elements cannot revisit a
  // strictly smaller obligation, so a revisit means the budget shape allows
  // a cycle; report unknown for it.
  eq_cache.emplace(key, TriState::maybe(UnknownReason::EnumBound));

  TriState result = TriState::maybe(UnknownReason::None);
  const auto& view = sigma.view();
  if (auto* nf = std::get_if<TypeCode::NFin>(&view)) {
    bool ok = a.term().is_numeral() && b.term().is_numeral() &&
              a.term().numeral_value() == b.term().numeral_value() &&
              a.term().numeral_value() < nf->n;
    result = ok ? TriState::yes() : TriState::no();
  } else if (std::holds_alternative<TypeCode::Nat>(view)) {
    bool ok = a.term().is_numeral() && b.term().is_numeral() &&
              a.term().numeral_value() == b.term().numeral_value();
    result = ok ? TriState::yes() : TriState::no();
  } else if (auto* pi = std::get_if<TypeCode::Pi>(&view)) {
    Per base = per(*pi->base);
    result = TriState::yes();
    for (const auto& [c, d] : base.pairs) {
      EvalOutcome fa = apply(a, c, bounds.fuel), gb = apply(b, d, bounds.fuel);
      if (fa.fuel_out() || gb.fuel_out()) {
        result = result.and_then(TriState::maybe(UnknownReason::Fuel));
        continue;
      }
      if (!fa.defined() || !gb.defined()) {
        result = TriState::no();
        break;
      }
      FamilyApp tau = family(pi->family, c);
      if (!tau.status.holds()) {
        result = result.and_then(tau.status);
        if (result.refuted()) break;
        continue;
      }
      result = result.and_then(elem_eq(*fa.value, *gb.value, *tau.value, w_depth));
      if (result.refuted()) break;
    }
    if (!base.complete) result = result.capped(UnknownReason::EnumBound);
  } else if (auto* sg = std::get_if<TypeCode::Sigma>(&view)) {
    auto a0 = project(a, 0), b0 = project(b, 0);
    auto a1 = project(a, 1), b1 = project(b, 1);
    TriState proj_ok =
        a0.status.and_then(b0.status).and_then(a1.status).and_then(b1.status);
    if (!proj_ok.holds()) {
      result = proj_ok;
    } else {
      result = elem_eq(*a0.value, *b0.value, *sg->base, w_depth);
      if (result.holds()) {
        FamilyApp tau = family(sg->family, *a0.value);
        result = tau.status.holds()
                     ? elem_eq(*a1.value, *b1.value, *tau.value, w_depth)
                     : tau.status;
      }
    }
  } else if (auto* id = std::get_if<TypeCode::Id>(&view)) {
    bool zeros = a.term() == tm::num(0) && b.term() == tm::num(0);
    result = zeros ? elem_eq(id->left, id->right, *id->base, w_depth) : TriState::no();
  } else if (auto* w = std::get_if<TypeCode::W>(&view)) {
    auto a0 = project(a, 0), b0 = project(b, 0);
    auto a1 = project(a, 1), b1 = project(b, 1);
    TriState proj_ok =
        a0.status.and_then(b0.status).and_then(a1.status).and_then(b1.status);
    if (!proj_ok.holds()) {
      result = proj_ok;
    } else {
      result = elem_eq(*a0.value, *b0.value, *w->base, w_depth);
      if (result.holds()) {
        FamilyApp tau = family(w->family, *a0.value);
        if (!tau.status.holds()) {
          result = tau.status;
        } else {
          Per child = per(*tau.value);
          if (!child.pairs.empty() && w_depth == 0) {
            result = TriState::maybe(UnknownReason::EnumBound);
          } else {
            for (const auto& [p, q] : child.pairs) {
              EvalOutcome cp = apply(*a1.value, p, bounds.fuel);
              EvalOutcome dq = apply(*b1.value, q, bounds.fuel);
              if (cp.fuel_out() || dq.fuel_out()) {
                result = result.and_then(TriState::maybe(UnknownReason::Fuel));
                continue;
              }
              if (!cp.defined() || !dq.defined()) {
                result = TriState::no();
                break;
              }
              result = result.and_then(elem_eq(*cp.value, *dq.value, sigma, w_depth - 1));
              if (result.refuted()) break;
            }
            if (!child.complete) result = result.capped(UnknownReason::EnumBound);
          }
        }
      }
    }
  }

  eq_cache[key] = result;
  return result;
}

TriState Ctx::type_eq(const TypeCode& a, const TypeCode& b) {
  const auto& va = a.view();
  const auto& vb = b.view();
  if (va.index() != vb.index()) return TriState::no();
  if (auto* na = std::get_if<TypeCode::NFin>(&va))
    return na->n == std::get<TypeCode::NFin>(vb).n ? TriState::yes() : TriState::no();
  if (std::holds_alternative<TypeCode::Nat>(va)) return TriState::yes();
  if (auto* ia = std::get_if<TypeCode::Id>(&va)) {
    const auto& ib = std::get<TypeCode::Id>(vb);
    TriState r = type_eq(*ia->base, *ib.base);
    if (!r.holds()) return r;
    r = r.and_then(elem_eq(ia->left, ib.left, *ia->base, bounds.w_depth));
    r = r.and_then(elem_eq(ia->right, ib.right, *ia->base, bounds.w_depth));
    return r;
  }
  // Pi / Sigma / W share the binder shape.
  const TypeCode* base_a;
  const Element* fam_a;
  const TypeCode* base_b;
  const Element* fam_b;
  if (auto* pa = std::get_if<TypeCode::Pi>(&va)) {
    base_a = pa->base.get(); fam_a = &pa->family;
    const auto& pb = std::get<TypeCode::Pi>(vb);
    base_b = pb.base.get(); fam_b = &pb.family;
  } else if (auto* sa = std::get_if<TypeCode::Sigma>(&va)) {
    base_a = sa->base.get(); fam_a = &sa->family;
    const auto& sb = std::get<TypeCode::Sigma>(vb);
    base_b = sb.base.get(); fam_b = &sb.family;
  } else {
    auto* wa = std::get_if<TypeCode::W>(&va);
    base_a = wa->base.get(); fam_a = &wa->family;
    const auto& wb = std::get<TypeCode::W>(vb);
    base_b = wb.base.get(); fam_b = &wb.family;
  }
  TriState r = type_eq(*base_a, *base_b);
  if (!r.holds()) return r;
  (void)base_b;
  Per base = per(*base_a);
  for (const auto& [x, y] : base.pairs) {
    FamilyApp ia = family(*fam_a, x), jb = family(*fam_b, y);
    if (!ia.status.holds() || !jb.status.holds()) {
      r = r.and_then(ia.status).and_then(jb.status);
      if (r.refuted()) return r;
      continue;
    }
    r = r.and_then(type_eq(*ia.value, *jb.value));
    if (r.refuted()) return r;
  }
  if (!base.complete) r = r.capped(UnknownReason::EnumBound);
  return r;
}

Per Ctx::per(const TypeCode& sigma) {
  auto it = per_cache.find(Element::trusted(sigma.code().term()));
  if (it != per_cache.end()) return it->second;

  Per out;
  const auto& view = sigma.view();
  auto diag = [](std::vector<Element> reps, bool complete) {
    Per p;
    p.complete = complete;
    p.pairs.reserve(reps.size());
    for (auto& r : reps) p.pairs.emplace_back(r, r);
    return p;
  };

  if (auto* nf = std::get_if<TypeCode::NFin>(&view)) {
    std::vector<Element> reps;
    for (uint64_t m = 0; m < nf->n; ++m) reps.push_back(elem::num(m));
    out = diag(std::move(reps), true);
  } else if (std::holds_alternative<TypeCode::Nat>(view)) {
    std::vector<Element> reps;
    for (uint64_t m = 0; m < bounds.enum_bound; ++m) reps.push_back(elem::num(m));
    out = diag(std::move(reps), false);
  } else if (auto* sg = std::get_if<TypeCode::Sigma>(&view)) {
    Per base = per(*sg->base);
    bool complete = base.complete;
    std::vector<Element> reps;
    for (const auto& [x, _] : base.pairs) {
      FamilyApp tau = family(sg->family, x);
      if (!tau.status.holds()) {
        complete = false;
        continue;
      }
      Per fiber = per(*tau.value);
      complete = complete && fiber.complete;
      for (const auto& [v, __] : fiber.pairs) {
        reps.push_back(elem::pair(x, v));
        if (reps.size() > kMaxReps) {
          out = diag({}, false);
          per_cache.emplace(Element::trusted(sigma.code().term()), out);
          return out;
        }
      }
    }
    out = diag(std::move(reps), complete);
  } else if (auto* id = std::get_if<TypeCode::Id>(&view)) {
    TriState eq = elem_eq(id->left, id->right, *id->base, bounds.w_depth);
    if (eq.holds())
      out = diag({elem::num(0)}, true);
    else
      out = diag({}, eq.refuted());
  } else if (auto* pi = std::get_if<TypeCode::Pi>(&view)) {
    Per base = per(*pi->base);
    if (!base.complete) {
      out = diag({}, false);
    } else {
      std::vector<Element> keys = base.reps();
      std::vector<std::vector<Element>> fibers;
      bool complete = true;
      size_t total = 1;
      for (const auto& k : keys) {
        FamilyApp tau = family(pi->family, k);
        if (!tau.status.holds()) {
          complete = false;
          break;
        }
        Per fiber = per(*tau.value);
        complete = complete && fiber.complete;
        fibers.push_back(fiber.reps());
        total *= std::max<size_t>(fibers.back().size(), 1);
        if (fibers.back().empty() || total > kMaxReps) {
          // an empty fiber empties the product; a huge one is truncated
          complete = complete && fibers.back().empty();
          break;
        }
      }
      if (!complete && fibers.size() < keys.size()) {
        out = diag({}, false);
      } else if (std::any_of(fibers.begin(), fibers.end(),
                             [](const auto& f) { return f.empty(); })) {
        out = diag({}, complete);
      } else if (keys.empty()) {
        // one extensional class: everything is a function out of nothing
        out = diag({elem::identity()}, complete);
      } else {
        // cartesian product of fiber choices, tabulated
        std::vector<Element> reps;
        std::vector<size_t> idx(keys.size(), 0);
        bool tab_ok = true;
        for (;;) {
          std::vector<Element> values;
          values.reserve(keys.size());
          for (size_t j = 0; j < keys.size(); ++j) values.push_back(fibers[j][idx[j]]);
          auto tab = tabulate(keys, values, bounds.fuel);
          if (!tab) {
            tab_ok = false;
            break;
          }
          reps.push_back(*tab);
          if (reps.size() > kMaxReps) {
            tab_ok = false;
            break;
          }
          size_t j = 0;
          while (j < idx.size() && ++idx[j] == fibers[j].size()) idx[j++] = 0;
          if (j == idx.size()) break;
        }
        out = diag(std::move(reps), complete && tab_ok);
      }
    }
  } else if (auto* w = std::get_if<TypeCode::W>(&view)) {
    Per base = per(*w->base);
    std::vector<Element> cur;  // tree reps of bounded depth, grown level by level
    bool complete = false;
    bool truncated = !base.complete;
    for (uint64_t depth = 0; depth < bounds.w_depth; ++depth) {
      std::vector<Element> next;
      for (const auto& [x, _] : base.pairs) {
        FamilyApp tau = family(w->family, x);
        if (!tau.status.holds()) {
          truncated = true;
          continue;
        }
        Per arity = per(*tau.value);
        truncated = truncated || !arity.complete;
        std::vector<Element> keys = arity.reps();
        if (keys.empty()) {
          next.push_back(elem::pair(x, elem::identity()));
          continue;
        }
        if (cur.empty()) continue;  // no subtrees to attach yet
        // product of subtree choices per key
        std::vector<size_t> idx(keys.size(), 0);
        for (;;) {
          std::vector<Element> values;
          for (size_t j = 0; j < keys.size(); ++j) values.push_back(cur[idx[j]]);
          auto tab = tabulate(keys, values, bounds.fuel);
          if (!tab) {
            truncated = true;
            break;
          }
          next.push_back(elem::pair(x, *tab));
          if (next.size() > kMaxReps) {
            truncated = true;
            break;
          }
          size_t j = 0;
          while (j < idx.size() && ++idx[j] == cur.size()) idx[j++] = 0;
          if (j == idx.size()) break;
        }
        if (next.size() > kMaxReps) break;
      }
      std::sort(next.begin(), next.end(),
                [](const Element& a, const Element& b) { return Element::compare(a, b) < 0; });
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (!truncated && next.size() == cur.size() && std::equal(next.begin(), next.end(), cur.begin())) {
        complete = true;
        cur = std::move(next);
        break;
      }
      cur = std::move(next);
      if (cur.size() > kMaxReps) break;
    }
    out = diag(std::move(cur), complete && !truncated);
  }

  per_cache.emplace(Element::trusted(sigma.code().term()), out);
  return out;
}

TriState Ctx::family_eq(const Element& i, const Element& j, const TypeCode& sigma) {
  Per base = per(sigma);
  TriState r = TriState::yes();
  for (const auto& [a, b] : base.pairs) {
    FamilyApp ia = family(i, a), jb = family(j, b);
    if (!ia.status.holds() || !jb.status.holds()) {
      r = r.and_then(ia.status).and_then(jb.status);
      if (r.refuted()) return r;
      continue;
    }
    r = r.and_then(type_eq(*ia.value, *jb.value));
    if (r.refuted()) return r;
  }
  if (!base.complete) r = r.capped(UnknownReason::EnumBound);
  return r;
}

}  // namespace

TriState type_equiv(const TypeCode& a, const TypeCode& b, const Bounds& bounds) {
  Ctx ctx{bounds};
  return ctx.type_eq(a, b);
}

TriState elem_equiv(const Element& a, const Element& b, const TypeCode& sigma,
                    const Bounds& bounds) {
  Ctx ctx{bounds};
  return ctx.elem_eq(a, b, sigma, bounds.w_depth);
}

Per per_enumerate(const TypeCode& sigma, const Bounds& bounds) {
  Ctx ctx{bounds};
  return ctx.per(sigma);
}

TriState family_equiv(const Element& i, const Element& j, const TypeCode& sigma,
                      const Bounds& bounds) {
  Ctx ctx{bounds};
  return ctx.family_eq(i, j, sigma);
}

FamilyApp apply_family(const Element& family, const Element& arg, const Bounds& bounds) {
  Ctx ctx{bounds};
  return ctx.family(family, arg);
}

std::optional<Element> tabulate_values(const std::vector<Element>& keys,
                                       const std::vector<Element>& values, Fuel fuel) {
  return tabulate(keys, values, fuel);
}

std::optional<Element> tabulator(const std::vector<Element>& keys, Fuel fuel) {
  if (keys.empty()) return std::nullopt;
  std::vector<std::string> vars;
  for (size_t j = 0; j < keys.size(); ++j) vars.push_back("v" + std::to_string(j));
  Term body = tm::v(vars.back());
  for (size_t j = keys.size() - 1; j-- > 0;) {
    auto m = rep_matcher(keys[j].term(), tm::v("x"), tm::v(vars[j]), body);
    if (!m) return std::nullopt;
    body = *m;
  }
  Term t = lam("x", body);
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) t = bracket_abstract(*it, t);
  EvalOutcome o = reduce(t, fuel);
  if (!o.defined()) return std::nullopt;
  return o.value;
}

}  // namespace extreal
