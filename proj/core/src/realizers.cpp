#include "extreal/realizers.hpp"

#include "extreal/bracket.hpp"

namespace extreal {

using tm::num;
using tm::v;

namespace {
constexpr uint64_t kBuildFuel = 1u << 22;
Element build(const Term& t) { return eval_or_throw(t, Fuel{kBuildFuel}); }
Element kf(const TypeCode& value) { return Element::trusted(tm::K(value.code().term())); }
NameExpr L(const Name& n) { return NameExpr::lit(n); }
NameExpr V(const std::string& s) { return NameExpr::var(s); }

// the composed extraction realizers need room to unfold; verification runs
// with at least this step budget
Bounds verify_bounds(const Bounds& b) {
  Bounds out = b;
  out.fuel.steps = std::max<uint64_t>(out.fuel.steps, 1u << 21);
  return out;
}

// op(z,x,y) and phi(x,y) conjoined the way the choice targets nest them
Formula op_and(Formula op, Formula rest) { return Formula::conj(std::move(op), std::move(rest)); }
}  // namespace

// ---------------------------------------------------------------- id case

Element id_realizer() {
  static const Element e = [] {
    const Term i = rz_refl().term();
    return build(tm::P(tm::K(tm::P(i)(i)))(tm::K(tm::P(num(0))(i))));
  }();
  return e;
}

Formula id_target(const TypeCode& sigma, const Element& a, const Element& b,
                  const Bounds& bounds) {
  Name xi = x_of(TypeCode::identity(sigma, a, b), bounds);
  Name na = embed(a, sigma, bounds);
  Name nb = embed(b, sigma, bounds);
  Formula endpoints = Formula::eq(L(na), L(nb));
  return Formula::conj(
      Formula::all_in("w", L(xi),
                      Formula::conj(Formula::eq(V("w"), L(Name::empty())), endpoints)),
      Formula::imp(endpoints, Formula::mem(L(Name::empty()), L(xi))));
}

VerifyReport verify_id_case(const Bounds& bounds) {
  Bounds vb = verify_bounds(vb);
  VerifyReport rep{"id", {}};
  Pool pool = Pool::explicit_pairs({{rz_refl(), rz_refl()}});
  TypeCode n2 = TypeCode::nfin(2);
  for (uint64_t a = 0; a < 2; ++a)
    for (uint64_t b = 0; b < 2; ++b) {
      Formula t = id_target(n2, elem::num(a), elem::num(b), vb);
      Verdict vd = check(id_realizer(), id_realizer(), t, pool, vb);
      rep.instances.push_back({"sigma=N2 a=" + std::to_string(a) + " b=" + std::to_string(b),
                               vd.state});
    }
  return rep;
}

// ----------------------------------------------------------------- o case

Element o_realizer() { return rz_refl(); }

VerifyReport verify_o_case(const Bounds& bounds) {
  Bounds vb = verify_bounds(vb);
  VerifyReport rep{"o", {}};
  Pool pool = Pool::explicit_pairs({{rz_refl(), rz_refl()}});
  {
    // truncated canonical omega: never refuted, may stay unknown
    Bounds b4 = vb;
    b4.enum_bound = 4;
    Formula t = Formula::eq(NameExpr::xof(TypeCode::nat()), NameExpr::dot_omega(4));
    Verdict vd = check(o_realizer(), o_realizer(), t, pool, b4);
    rep.instances.push_back({"X_N vs omega (truncated at 4)", vd.state, false});
  }
  for (uint64_t n = 0; n <= 3; ++n) {
    Formula t = Formula::eq(NameExpr::xof(TypeCode::nfin(n)), NameExpr::dotn(n));
    Verdict vd = check(o_realizer(), o_realizer(), t, pool, vb);
    rep.instances.push_back({"X_{N_" + std::to_string(n) + "} is the numeral name", vd.state});
  }
  return rep;
}

// --------------------------------------------------------------- fun case

Element fun_realizer() {
  static const Element e = [] {
    Term witness = lam("a", tm::P(v("a"))(rz_u0().term()));
    Term fnl = lam({"a", "e", "c"}, rz_op_snd_eq()(v("c")));
    return build(tm::P(witness)(tm::P(witness)(fnl)));
  }();
  return e;
}

Formula fun_target(const TypeCode& sigma, const Element& family, const Bounds& bounds) {
  NameExpr F = L(f_of(sigma, family, bounds));
  NameExpr X = L(x_of(sigma, bounds));
  Formula relsub = Formula::all_in(
      "z", F, Formula::ex_in("x", X, Formula::ex("y", op_formula(V("z"), V("x"), V("y")))));
  Formula tot = Formula::all_in(
      "x", X, Formula::ex("y", Formula::ex_in("z", F, op_formula(V("z"), V("x"), V("y")))));
  return Formula::conj(relsub, Formula::conj(tot, functional_formula(F)));
}

namespace {
// universe fragment for a family case: embedded base points and the
// canonical extensions of the family values
std::vector<Name> family_universe(const TypeCode& sigma, const Element& family,
                                  const Bounds& bounds) {
  std::vector<Name> u;
  Per per = per_enumerate(sigma, bounds);
  for (const auto& [a, b] : per.pairs) {
    u.push_back(embed(a, sigma, bounds));
    FamilyApp fa = apply_family(family, a, bounds);
    if (fa.status.holds()) {
      u.push_back(x_of(*fa.value, bounds));
      Per fiber = per_enumerate(*fa.value, bounds);
      for (const auto& [c, _] : fiber.pairs) u.push_back(embed(c, *fa.value, bounds));
    }
  }
  std::sort(u.begin(), u.end(), [](const Name& a, const Name& b) { return Name::compare(a, b) < 0; });
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

Pool case_pool(std::vector<Name> universe,
               std::vector<std::pair<Element, Element>> extra = {}) {
  std::vector<std::pair<Element, Element>> pairs = {{rz_refl(), rz_refl()},
                                                    {rz_u0(), rz_u0()}};
  Element u0u0 = build(tm::P(rz_u0().term())(rz_u0().term()));
  pairs.emplace_back(u0u0, u0u0);
  for (auto& p : extra) pairs.push_back(std::move(p));
  return Pool::explicit_pairs(std::move(pairs), std::move(universe), /*exhaustive=*/true);
}
}  // namespace

VerifyReport verify_fun_case(const Bounds& bounds) {
  Bounds vb = verify_bounds(vb);
  VerifyReport rep{"fun", {}};
  struct Inst {
    TypeCode sigma;
    Element family;
    std::string desc;
  };
  std::vector<Inst> insts = {
      {TypeCode::nfin(2), kf(TypeCode::nfin(1)), "sigma=N2, constant family N1"},
      {TypeCode::nfin(2), kf(TypeCode::nfin(2)), "sigma=N2, constant family N2"},
      {TypeCode::nfin(1),
       build(lam("x", tm::D(v("x"))(num(0))(TypeCode::nfin(2).code().term())(
                          TypeCode::nfin(2).code().term()))),
       "sigma=N1, computed family"},
  };
  for (const auto& in : insts) {
    Pool pool = case_pool(family_universe(in.sigma, in.family, vb));
    Formula t = fun_target(in.sigma, in.family, vb);
    Verdict vd = check(fun_realizer(), fun_realizer(), t, pool, vb);
    rep.instances.push_back({in.desc, vd.state});
  }
  return rep;
}

// --------------------------------------------------------------- sum case

Element sum_realizer(const TypeCode&, const Element&, const Bounds&) {
  static const Element e = [] {
    const Term i = rz_refl().term();
    const Term u0 = rz_u0().term();
    Term l = lam("a", tm::P(proj0(v("a")))(tm::P(proj0(v("a")))(
                          tm::P(u0)(tm::P(u0)(tm::P(proj1(v("a")))(i))))));
    // converse: rebuild the witness pair from the premise components
    Term e_xY = rz_u1()(rz_u2()(proj(v("c"), {1, 0})));
    Term ex = proj0(e_xY);   // a^ = x
    Term eY = proj1(e_xY);   // X_tau = Y
    Term m = rz_mem_right_t(rz_sym_t(eY), proj(v("c"), {1, 1}));  // y in X_tau
    Term zeq = rz_trans_t(rz_u2()(proj0(v("c"))),
                          rz_vpair_cong_t(rz_sym_t(ex), proj1(m)));
    Term r = lam({"x", "a", "c"}, tm::P(tm::P(v("a"))(proj0(m)))(zeq));
    return build(tm::P(l)(r));
  }();
  return e;
}

Formula sum_target(const TypeCode& sigma, const Element& family, const Bounds& bounds) {
  NameExpr XS = L(x_of(TypeCode::sigma(sigma, family), bounds));
  NameExpr X = L(x_of(sigma, bounds));
  NameExpr F = L(f_of(sigma, family, bounds));
  Formula body = Formula::conj(
      op_formula(V("z"), V("x"), V("y")),
      Formula::conj(op_formula(V("Z"), V("x"), V("Y")), Formula::mem(V("y"), V("Y"))));
  Formula l2r = Formula::all_in(
      "z", XS,
      Formula::ex_in(
          "x", X, Formula::ex("y", Formula::ex("Y", Formula::ex_in("Z", F, body)))));
  Formula r2l = Formula::all(
      "z", Formula::all_in(
               "x", X,
               Formula::all("y", Formula::all_in(
                                     "Z", F, Formula::all("Y", Formula::imp(
                                                                   body, Formula::mem(
                                                                             V("z"), XS)))))));
  return Formula::conj(l2r, r2l);
}

// -------------------------------------------------------------- prod case

namespace {
// membership of a function value: from the transcript of the premise
// parts at base point a, produce "y_a in X_tau" together with the key.
// ct, cr are the totality and relation parts of the premise realizer.
struct ProdExtract {
  Term k;    // h-entry key chosen by totality at a
  Term rop;  // op(z_k, a^, y_a)
  Term m;    // y_a in X_tau : <value key, y_a = value^tau>
};
ProdExtract prod_extract(const Term& cr, const Term& ct, const Term& a) {
  ProdExtract out{tm::K, tm::K, tm::K};
  Term mt = ct(a);
  out.k = proj0(mt);
  out.rop = proj1(mt);
  Term mr = cr(out.k);
  Term body = proj1(proj1(mr));
  Term op1 = proj0(body);
  Term op2 = proj(body, {1, 0});
  Term memY = proj(body, {1, 1});
  Term E = rz_trans_t(rz_sym_t(rz_u2()(out.rop)), rz_u2()(op1));
  Term exy = proj1(rz_u1()(E));                       // y_a = y-breve
  Term eY = proj1(rz_u1()(rz_u2()(op2)));             // X_tau = Y
  Term m1 = rz_mem_right_t(rz_sym_t(eY), memY);       // y-breve in X_tau
  out.m = rz_mem_left_t(rz_sym_t(exy), m1);           // y_a in X_tau
  return out;
}
}  // namespace

Element prod_realizer(const TypeCode& sigma, const Element&, const Bounds& bounds) {
  const Term i = rz_refl().term();
  const Term u0 = rz_u0().term();

  // forward: each canonical function value satisfies the three parts
  Term rel = lam("a", tm::P(v("a"))(tm::P(v("a"))(
                          tm::P(u0)(tm::P(u0)(tm::P(v("f")(v("a")))(i))))));
  Term tot = lam("a", tm::P(v("a"))(u0));
  Term fnl = lam({"a0", "a1", "cc"}, rz_op_snd_eq()(v("cc")));
  Term fwd = lam("f", tm::P(rel)(tm::P(tot)(fnl)));

  // converse: rebuild the table function and the graph equality
  Per base = per_enumerate(sigma, bounds);
  std::vector<Element> keys = base.reps();

  Term cr = proj0(v("c"));
  Term ct = proj(v("c"), {1, 0});
  Term cf = proj(v("c"), {1, 1});

  Term gtab = elem::identity();
  if (!keys.empty()) {
    auto tab = tabulator(keys, Fuel{kBuildFuel});
    gtab = tab->term();
    for (const auto& key : keys) {
      ProdExtract ex = prod_extract(cr, ct, key.term());
      gtab = Term::app(gtab, proj0(ex.m));
    }
  }

  // equality between the premise function h and the canonical graph:
  // role one (entries of h) uses the relation part, role two (entries of
  // the graph, keyed by base representatives) replays the extraction.
  ProdExtract exk = prod_extract(cr, ct, v("k"));
  Term mrk = cr(v("k"));
  Term a_breve = proj0(mrk);
  Term op1k = proj(mrk, {1, 1, 0});
  ProdExtract exab = prod_extract(cr, ct, a_breve);
  Term prem = tm::P(op1k)(rz_op_cong3()(exab.rop)(proj1(exab.m)));
  Term val_eq = cf(v("k"))(exab.k)(prem);  // y-breve = value^tau
  Term l2r = tm::P(a_breve)(
      rz_trans_t(rz_u2()(op1k), rz_vpair_cong_t(i, val_eq)));
  Term r2l = tm::P(exk.k)(rz_trans_t(rz_vpair_cong_t(i, rz_sym_t(proj1(exk.m))),
                                     rz_sym_t(rz_u2()(exk.rop))));
  Term heq = lam("k", tm::P(l2r)(r2l));

  Term bwd = lam("c", tm::P(gtab)(heq));
  return build(tm::P(fwd)(bwd));
}

Formula prod_target(const TypeCode& sigma, const Element& family, const Bounds& bounds) {
  NameExpr XP = L(x_of(TypeCode::pi(sigma, family), bounds));
  NameExpr X = L(x_of(sigma, bounds));
  NameExpr F = L(f_of(sigma, family, bounds));
  auto psi = [&](NameExpr h) {
    Formula body = Formula::conj(
        op_formula(V("z"), V("x"), V("y")),
        Formula::conj(op_formula(V("Z"), V("x"), V("Y")), Formula::mem(V("y"), V("Y"))));
    Formula rel = Formula::all_in(
        "z", h,
        Formula::ex_in("x", X,
                       Formula::ex("y", Formula::ex_in("Z", F, Formula::ex("Y", body)))));
    Formula tot = Formula::all_in(
        "x", X, Formula::ex_in("z", h, Formula::ex("y", op_formula(V("z"), V("x"), V("y")))));
    return Formula::conj(rel, Formula::conj(tot, functional_formula(h)));
  };
  return Formula::conj(Formula::all_in("h", XP, psi(V("h"))),
                       Formula::all("h", Formula::imp(psi(V("h")), Formula::mem(V("h"), XP))));
}

VerifyReport verify_prod_case(const Bounds& bounds) {
  Bounds vb = verify_bounds(vb);
  VerifyReport rep{"prod", {}};
  struct Inst {
    TypeCode sigma;
    Element family;
    std::string desc;
  };
  std::vector<Inst> insts = {
      {TypeCode::nfin(1), kf(TypeCode::nfin(2)), "sigma=N1, constant family N2"},
      {TypeCode::nfin(2), kf(TypeCode::nfin(2)), "sigma=N2, constant family N2"},
  };
  for (const auto& in : insts) {
    Element r = prod_realizer(in.sigma, in.family, vb);
    Element fwd_part = build(proj0(r.term()));

    // universe: the canonical function names plus the ingredient names
    std::vector<Name> uni = family_universe(in.sigma, in.family, vb);
    TypeCode pi = TypeCode::pi(in.sigma, in.family);
    Name xp = x_of(pi, vb);
    std::vector<std::pair<Element, Element>> prem;
    for (const auto& e : xp.entries()) {
      uni.push_back(e.child);
      for (const auto& ge : e.child.entries()) uni.push_back(ge.child);
      // the forward part applied to the table element realizes psi(h)
      Element p = build(Term::app(fwd_part.term(), e.left.term()));
      prem.emplace_back(p, p);
    }
    std::sort(uni.begin(), uni.end(),
              [](const Name& a, const Name& b) { return Name::compare(a, b) < 0; });
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());

    Pool pool = case_pool(std::move(uni), std::move(prem));
    Formula t = prod_target(in.sigma, in.family, vb);
    Verdict vd = check(r, r, t, pool, vb);
    rep.instances.push_back({in.desc, vd.state});
  }
  return rep;
}

VerifyReport verify_sum_case(const Bounds& bounds) {
  Bounds vb = verify_bounds(vb);
  VerifyReport rep{"sum", {}};
  struct Inst {
    TypeCode sigma;
    Element family;
    std::string desc;
  };
  std::vector<Inst> insts = {
      {TypeCode::nfin(1), kf(TypeCode::nfin(2)), "sigma=N1, constant family N2"},
      {TypeCode::nfin(2), kf(TypeCode::nfin(1)), "sigma=N2, constant family N1"},
  };
  for (const auto& in : insts) {
    // premise feeders for the converse direction: op /\ (op /\ mem)
    std::vector<std::pair<Element, Element>> prem;
    Per base = per_enumerate(in.sigma, vb);
    for (const auto& [a, _] : base.pairs) {
      FamilyApp tau = apply_family(in.family, a, vb);
      Per fiber = per_enumerate(*tau.value, vb);
      for (const auto& [c, __] : fiber.pairs) {
        Element p = build(tm::P(rz_u0().term())(
            tm::P(rz_u0().term())(tm::P(c.term())(rz_refl().term()))));
        prem.emplace_back(p, p);
      }
    }
    // universe: embedded points, fiber extensions, and the pair names
    std::vector<Name> uni = family_universe(in.sigma, in.family, vb);
    Name xs = x_of(TypeCode::sigma(in.sigma, in.family), vb);
    for (const auto& e : xs.entries()) uni.push_back(e.child);
    Name xbase = x_of(in.sigma, vb);
    for (const auto& e : xbase.entries()) uni.push_back(e.child);
    FamilyApp t0 = apply_family(in.family, base.pairs.front().first, vb);
    Name xfiber = x_of(*t0.value, vb);
    for (const auto& e : xfiber.entries()) uni.push_back(e.child);
    std::sort(uni.begin(), uni.end(),
              [](const Name& a, const Name& b) { return Name::compare(a, b) < 0; });
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());

    Pool pool = case_pool(std::move(uni), std::move(prem));
    Formula t = sum_target(in.sigma, in.family, vb);
    Element r = sum_realizer(in.sigma, in.family, vb);
    Verdict vd = check(r, r, t, pool, vb);
    rep.instances.push_back({in.desc, vd.state});
  }
  return rep;
}

// ----------------------------------------------------------------- w case

Element w_realizer(const TypeCode&, const Element&, const Bounds&) {
  static const Element e = [] {
    const Term i = rz_refl().term();
    const Term u0 = rz_u0().term();
    // membership to characterization: label key, the pair shape of the
    // embedded tree, and vacuous child obligations at leaf scale
    Term theta0 = lam({"zk", "cp"}, tm::P(num(0))(num(0)));
    Term chi = tm::P(proj0(proj0(v("m"))))(
        tm::P(rz_op_cong1()(proj1(v("m")))(u0))(
            tm::P(theta0)(tm::P(num(0))(num(0)))));
    Term l = lam("m", chi);
    // characterization to membership: rebuild the canonical leaf
    Term empty_eq = lam("q", tm::P(num(0))(num(0)));
    Term eq = rz_trans_t(rz_u2()(proj(v("c"), {1, 0})),
                         rz_vpair_cong_t(i, empty_eq));
    Term r = lam("c", tm::P(tm::P(proj0(v("c")))(elem::identity().term()))(eq));
    return build(tm::P(l)(r));
  }();
  return e;
}

Formula w_target(const TypeCode& sigma, const Element& family, const Bounds& bounds) {
  NameExpr XD = L(x_of(TypeCode::w(sigma, family), bounds));
  NameExpr X = L(x_of(sigma, bounds));
  NameExpr F = L(f_of(sigma, family, bounds));
  Formula psi0 = Formula::conj(
      Formula::all_in("vv", V("f"),
                      Formula::ex_in("u", V("Xv"),
                                     Formula::ex("zz", op_formula(V("vv"), V("u"), V("zz"))))),
      Formula::all_in(
          "u", V("Xv"),
          Formula::ex("zz", Formula::ex_in("vv", V("f"), op_formula(V("vv"), V("u"), V("zz"))))));
  Formula theta0 = Formula::all_in(
      "Zk", F,
      Formula::all("Xv", Formula::imp(op_formula(V("Zk"), V("x"), V("Xv")), psi0)));
  Formula theta2 = Formula::all_in(
      "vv", V("f"),
      Formula::all("u", Formula::all("zz", Formula::imp(op_formula(V("vv"), V("u"), V("zz")),
                                                        Formula::mem(V("zz"), XD)))));
  Formula chi = Formula::ex_in(
      "x", X,
      Formula::ex("f", Formula::conj(op_formula(V("y"), V("x"), V("f")),
                                     Formula::conj(theta0, Formula::conj(
                                                               functional_formula(V("f")),
                                                               theta2)))));
  return Formula::all(
      "y", Formula::conj(Formula::imp(Formula::mem(V("y"), XD), chi),
                         Formula::imp(chi, Formula::mem(V("y"), XD))));
}

VerifyReport verify_w_case(const Bounds& bounds) {
  Bounds vb = verify_bounds(vb);
  VerifyReport rep{"w", {}};
  struct Inst {
    TypeCode sigma;
    std::string desc;
  };
  std::vector<Inst> insts = {{TypeCode::nfin(1), "base N1, family uniformly N0"},
                             {TypeCode::nfin(2), "base N2, family uniformly N0"}};
  for (const auto& in : insts) {
    Element fam = kf(TypeCode::nfin(0));
    TypeCode wt = TypeCode::w(in.sigma, fam);
    Element r = w_realizer(in.sigma, fam, vb);
    Element l_part = build(proj0(r.term()));

    std::vector<Name> uni = family_universe(in.sigma, fam, vb);
    uni.push_back(Name::empty());
    Name xd = x_of(wt, vb);
    std::vector<std::pair<Element, Element>> prem;
    for (const auto& e : xd.entries()) {
      uni.push_back(e.child);
      Element memr = build(tm::P(e.left.term())(rz_refl().term()));
      prem.emplace_back(memr, memr);
      Element chir = build(Term::app(l_part.term(), memr.term()));
      prem.emplace_back(chir, chir);
    }
    std::sort(uni.begin(), uni.end(),
              [](const Name& a, const Name& b) { return Name::compare(a, b) < 0; });
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());

    Pool pool = case_pool(std::move(uni), std::move(prem));
    Verdict vd = check(r, r, w_target(in.sigma, fam, vb), pool, vb);
    rep.instances.push_back({in.desc, vd.state});
  }
  return rep;
}

std::vector<VerifyReport> verify_structural_cases(const Bounds& bounds) {
  return {verify_o_case(bounds), verify_fun_case(bounds), verify_sum_case(bounds),
          verify_prod_case(bounds), verify_w_case(bounds)};
}

// -------------------------------------------------------------------- AC

AcRealizer mk_ac_realizer(const TypeCode& sigma, const TypeCode& tau,
                          std::function<Formula(NameExpr, NameExpr)> phi,
                          const Bounds& bounds) {
  AcRealizer out{sigma, tau, rz_refl(), {}, {}};

  const Term u0 = rz_u0().term();
  Term rel = lam("a", tm::P(v("a"))(tm::P(proj0(v("c")(v("a"))))(u0)));
  Term tot = lam("a", tm::P(v("a"))(u0));
  Term fnl = lam({"a0", "a1", "cc"}, rz_op_snd_eq()(v("cc")));
  Term choice = lam("a", tm::P(v("a"))(tm::P(u0)(proj1(v("c")(v("a"))))));
  out.term = build(lam("c", tm::P(rel)(tm::P(tot)(tm::P(fnl)(choice)))));

  TypeCode s = sigma, t = tau;
  Bounds bo = bounds;
  out.choice_name = [s, t, bo](const Element& premise) {
    Per base = per_enumerate(s, bo);
    std::vector<Name::Entry> entries;
    for (const auto& [a, b] : base.pairs) {
      Element pa = eval_or_throw(proj0(Term::app(premise, a)), bo.fuel);
      entries.push_back({a, b, vpair(embed(a, s, bo), embed(pa, t, bo))});
    }
    return Name::make(std::move(entries), base.complete);
  };

  NameExpr X = L(x_of(sigma, bounds));
  NameExpr Y = L(x_of(tau, bounds));
  auto phi_copy = phi;
  out.conclusion = [X, Y, phi_copy](const Name& f) {
    NameExpr fe = L(f);
    Formula rel = Formula::all_in(
        "z", fe, Formula::ex_in("x", X, Formula::ex_in("y", Y, op_formula(V("z"), V("x"), V("y")))));
    Formula tot = Formula::all_in(
        "x", X, Formula::ex("y", Formula::ex_in("z", fe, op_formula(V("z"), V("x"), V("y")))));
    Formula choice = Formula::all_in(
        "x", X,
        Formula::ex_in("z", fe,
                       Formula::ex("y", Formula::conj(op_formula(V("z"), V("x"), V("y")),
                                                      phi_copy(V("x"), V("y"))))));
    return Formula::conj(rel,
                         Formula::conj(tot, Formula::conj(functional_formula(fe), choice)));
  };
  return out;
}

VerifyReport verify_ac_case(const Bounds& bounds) {
  Bounds vb = verify_bounds(vb);
  VerifyReport rep{"ac", {}};
  TypeCode n2 = TypeCode::nfin(2);

  struct Inst {
    std::string desc;
    std::function<Formula(NameExpr, NameExpr)> phi;
    Element premise;
  };
  std::vector<Inst> insts = {
      {"identity choice (phi: y = x)",
       [](NameExpr x, NameExpr y) { return Formula::eq(y, x); },
       build(lam("a", tm::P(v("a"))(rz_refl().term())))},
      {"constant choice (phi: y = y)",
       [](NameExpr x, NameExpr y) { return Formula::eq(y, y); },
       build(lam("a", tm::P(num(0))(rz_refl().term())))},
  };

  for (const auto& in : insts) {
    AcRealizer ac = mk_ac_realizer(n2, n2, in.phi, vb);
    Name f = ac.choice_name(in.premise);
    Element concl_r = build(Term::app(ac.term, in.premise));

    std::vector<Name> uni = {x_of(n2, vb)};
    for (const auto& e : f.entries()) {
      uni.push_back(e.child);
      for (const auto& inner : e.child.entries()) uni.push_back(inner.child);
    }
    uni.push_back(embed(elem::num(0), n2, vb));
    uni.push_back(embed(elem::num(1), n2, vb));
    Pool pool = case_pool(uni);
    Verdict vd = check(concl_r, concl_r, ac.conclusion(f), pool, vb);
    rep.instances.push_back({in.desc, vd.state});

    // the emitted name is canonical: wrapping the premise in an
    // equivalent but syntactically different element changes nothing
    Element premise2 = build(lam("a", Term::app(in.premise, v("a"))));
    Name f2 = ac.choice_name(premise2);
    rep.instances.push_back({in.desc + " (name canonical under premise reshaping)",
                             f == f2 ? TriState::yes() : TriState::no()});
  }

  // empty domain: the conclusion realizer holds vacuously with f empty
  {
    AcRealizer ac = mk_ac_realizer(TypeCode::nfin(0), n2,
                                   [](NameExpr, NameExpr y) { return Formula::eq(y, y); },
                                   vb);
    Element anyc = build(lam("a", tm::P(num(0))(rz_refl().term())));
    Name f = ac.choice_name(anyc);
    Element concl_r = build(Term::app(ac.term, anyc));
    Pool pool = case_pool({Name::empty()});
    Verdict vd = check(concl_r, concl_r, ac.conclusion(f), pool, vb);
    rep.instances.push_back({"empty domain", vd.state});
    rep.instances.push_back({"empty domain name", f == Name::empty() ? TriState::yes()
                                                                     : TriState::no()});
  }
  return rep;
}

// ------------------------------------------------------------------- RDC

RdcRealizer mk_rdc_realizer(const TypeCode& sigma, const Bounds& bounds) {
  RdcRealizer out{sigma, primrec(), {}, {}};
  Bounds bo = bounds;
  TypeCode s = sigma;
  out.sequence_at = [bo](const Element& c, const Element& a0, const Element& c0, uint64_t n) {
    Term r = primrec()(c)(a0)(c0)(tm::num(n));
    return eval_or_throw(proj0(r), Fuel{bo.fuel.steps * 8});
  };
  auto seq = out.sequence_at;
  out.trajectory_name = [bo, s, seq](const Element& c, const Element& a0, const Element& c0,
                                     uint64_t bound) {
    std::vector<Name::Entry> entries;
    for (uint64_t n = 0; n <= bound; ++n) {
      Element an = seq(c, a0, c0, n);
      entries.push_back({elem::num(n), elem::num(n), vpair(dot(n), embed(an, s, bo))});
    }
    return Name::make(std::move(entries), /*complete=*/false, Name::Gen::NatCanonical, bound);
  };
  return out;
}

VerifyReport verify_rdc_case(const Bounds& bounds) {
  Bounds vb = verify_bounds(vb);
  VerifyReport rep{"rdc", {}};
  const Term u0 = rz_u0().term();

  // constant instance on N1: psi(x) := x = x, phi(x,y) := y = x
  {
    RdcRealizer rdc = mk_rdc_realizer(TypeCode::nfin(1), vb);
    Element c = build(lam({"a", "w"}, tm::P(v("a"))(tm::P(v("w"))(num(0)))));
    Element a0 = elem::num(0);
    Element c0 = rz_refl();

    // base equation, verbatim shape
    Term rterm = primrec()(c)(a0)(c0);
    KleeneResult base = kleene_eq(rterm(num(0)), tm::P(a0.term())(tm::P(c0.term())(num(0))),
                                  Fuel{vb.fuel.steps * 8});
    rep.instances.push_back(
        {"base equation", base == KleeneResult::Agree ? TriState::yes() : TriState::no()});

    for (uint64_t n = 0; n <= 5; ++n) {
      Element an = rdc.sequence_at(c, a0, c0, n);
      rep.instances.push_back({"constant sequence at " + std::to_string(n),
                               an == elem::num(0) ? TriState::yes() : TriState::no()});
    }

    // conclusion formula over the truncated trajectory
    uint64_t bound = 4;
    Name f = rdc.trajectory_name(c, a0, c0, bound).with_complete(true);
    Name omega = dot_omega(bound + 1).with_complete(true);
    std::vector<Name::Entry> sp;
    for (uint64_t n = 0; n < bound; ++n)
      sp.push_back({elem::num(n), elem::num(n), vpair(dot(n), dot(n + 1))});
    Name succ_pairs = Name::make(std::move(sp));

    Formula rel = Formula::all_in(
        "z", L(f),
        Formula::ex_in("x", L(omega), Formula::ex("y", op_formula(V("z"), V("x"), V("y")))));
    Formula tot = Formula::all_in(
        "x", L(omega),
        Formula::ex("y", Formula::ex_in("z", L(f), op_formula(V("z"), V("x"), V("y")))));
    Formula f0 = Formula::ex_in("z", L(f), op_formula(V("z"), L(dot(0)), L(dot(0))));
    Formula step_body = Formula::ex_in(
        "s0", V("n"),
        Formula::ex_in(
            "x0", V("s0"),
            Formula::ex_in(
                "s1", V("n"),
                Formula::ex_in(
                    "x1", V("s1"),
                    Formula::ex_in(
                        "z0", L(f),
                        Formula::ex_in(
                            "z1", L(f),
                            Formula::ex(
                                "u",
                                Formula::ex(
                                    "vv",
                                    Formula::conj(
                                        op_formula(V("z0"), V("x0"), V("u")),
                                        Formula::conj(op_formula(V("z1"), V("x1"), V("vv")),
                                                      Formula::eq(V("vv"), V("u"))))))))))));
    Formula concl = Formula::conj(
        rel, Formula::conj(tot, Formula::conj(functional_formula(L(f)),
                                              Formula::conj(f0, Formula::all_in(
                                                                    "n", L(succ_pairs),
                                                                    step_body)))));

    Term reln = lam("a", tm::P(v("a"))(u0));
    Term fnl = lam({"a0", "a1", "cc"}, rz_op_snd_eq()(v("cc")));
    Term stepr =
        lam("n", tm::P(num(0))(tm::P(num(0))(tm::P(num(1))(tm::P(num(1))(
                     tm::P(v("n"))(tm::P(tm::SUCC(v("n")))(
                         tm::P(u0)(tm::P(u0)(rz_refl().term())))))))));
    Element concl_r = build(tm::P(reln)(tm::P(reln)(
        tm::P(fnl)(tm::P(tm::P(num(0))(u0))(stepr)))));

    std::vector<Name> uni = {dot(0), dot(1), dot(2), dot(3), dot(4), dot(5)};
    for (const auto& e : f.entries()) uni.push_back(e.child);
    Pool pool = case_pool(uni);
    Verdict vd = check(concl_r, concl_r, concl, pool, vb);
    rep.instances.push_back({"conclusion on the truncated trajectory", vd.state});
  }

  // alternating instance on N2
  {
    RdcRealizer rdc = mk_rdc_realizer(TypeCode::nfin(2), vb);
    Element c = build(lam(
        {"a", "w"},
        tm::P(tm::D(v("a"))(num(0))(num(1))(num(0)))(tm::P(v("w"))(num(0)))));
    Element a0 = elem::num(0);
    Element c0 = rz_refl();
    for (uint64_t n = 0; n <= 5; ++n) {
      Element an = rdc.sequence_at(c, a0, c0, n);
      rep.instances.push_back({"alternating sequence at " + std::to_string(n),
                               an == elem::num(n % 2) ? TriState::yes() : TriState::no()});
    }
    // step equation against its own unfolding
    Term rc = primrec()(c)(a0)(c0);
    Term r2 = rc(num(2));
    Term w = c(proj0(r2))(proj(r2, {1, 0}));
    KleeneResult st = kleene_eq(rc(num(3)), tm::P(proj0(w))(proj1(w)),
                                Fuel{vb.fuel.steps * 8});
    rep.instances.push_back(
        {"step equation at 3", st == KleeneResult::Agree ? TriState::yes() : TriState::no()});
  }
  return rep;
}

}  // namespace extreal
