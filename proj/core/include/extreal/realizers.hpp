// The concrete realizer constructions: equality of canonical type
// extensions with their set-theoretic counterparts, the choice and
// dependent-choice realizers, the code-extraction pair for represented
// sets, and the bounded refutation of the presentation statement. Each
// case carries a target-formula builder and a verification harness over
// its declared finite instances.

#ifndef EXTREAL_REALIZERS_HPP
#define EXTREAL_REALIZERS_HPP

#include <functional>

#include "extreal/realizability.hpp"
#include "extreal/toolkit.hpp"

namespace extreal {

struct VerifyInstance {
  std::string description;
  TriState state;
  bool expect_decided = true;  // when false, unknown is acceptable
  bool ok() const { return expect_decided ? state.holds() : !state.refuted(); }
};

struct VerifyReport {
  std::string case_name;
  std::vector<VerifyInstance> instances;
  bool ok() const {
    for (const auto& i : instances)
      if (!i.ok()) return false;
    return !instances.empty();
  }
};

// --- equality of X_sigma with the set-theoretic construction ---

// The identity-type case: the realizer is independent of the instance;
// target(sigma, a, b) states X_{I_sigma(a,b)} equals {z in {0} | a^ = b^}.
Element id_realizer();
Formula id_target(const TypeCode& sigma, const Element& a, const Element& b,
                  const Bounds& bounds);
VerifyReport verify_id_case(const Bounds& bounds);

// The infinity case: X_N against the canonical omega name (truncated).
Element o_realizer();
VerifyReport verify_o_case(const Bounds& bounds);

// fun(F_{sigma,i}) and dom(F) = X_sigma.
Element fun_realizer();
Formula fun_target(const TypeCode& sigma, const Element& family, const Bounds& bounds);
VerifyReport verify_fun_case(const Bounds& bounds);

// X_{Sigma_sigma i} = Sigma(X_sigma, F_{sigma,i}).
Element sum_realizer(const TypeCode& sigma, const Element& family, const Bounds& bounds);
Formula sum_target(const TypeCode& sigma, const Element& family, const Bounds& bounds);
VerifyReport verify_sum_case(const Bounds& bounds);

// X_{Pi_sigma i} = Pi(X_sigma, F_{sigma,i}).
Element prod_realizer(const TypeCode& sigma, const Element& family, const Bounds& bounds);
Formula prod_target(const TypeCode& sigma, const Element& family, const Bounds& bounds);
VerifyReport verify_prod_case(const Bounds& bounds);

// X_{W_sigma i} = W(X_sigma, F_{sigma,i}) via the membership
// characterization of W.
Element w_realizer(const TypeCode& sigma, const Element& family, const Bounds& bounds);
Formula w_target(const TypeCode& sigma, const Element& family, const Bounds& bounds);
VerifyReport verify_w_case(const Bounds& bounds);

std::vector<VerifyReport> verify_structural_cases(const Bounds& bounds);

// --- choice ---

struct AcRealizer {
  TypeCode sigma, tau;
  Element term;  // applied to a premise realizer, yields the conclusion realizer
  // the canonical choice-function name extracted from a premise realizer
  std::function<Name(const Element& premise)> choice_name;
  // conclusion formula, given the property phi(x, y) as a formula builder
  std::function<Formula(const Name& f)> conclusion;
};
AcRealizer mk_ac_realizer(const TypeCode& sigma, const TypeCode& tau,
                          std::function<Formula(NameExpr, NameExpr)> phi, const Bounds& bounds);
VerifyReport verify_ac_case(const Bounds& bounds);

struct RdcRealizer {
  TypeCode sigma;
  Element recursor;  // specialized r with r c a0 c0 satisfying the step laws
  std::function<Element(const Element& c, const Element& a0, const Element& c0, uint64_t n)>
      sequence_at;
  std::function<Name(const Element& c, const Element& a0, const Element& c0, uint64_t bound)>
      trajectory_name;
};
RdcRealizer mk_rdc_realizer(const TypeCode& sigma, const Bounds& bounds);
VerifyReport verify_rdc_case(const Bounds& bounds);

// --- represented sets ---

// The mutually recursive extraction pair: applied to a realizer of
// theta(u, Y), the first component computes a type code and the second a
// realizer of Y = X_sigma. Cases 0, 1, 4 are fully verified; 2, 3, 5 are
// wired and smoke-checked structurally.
struct CanonPair {
  Element dispatcher;  // c -> P (code) (equality realizer)
  Element code_of;     // i = \c. P0 (dispatcher c)
  Element eq_of;       // e = \c. P1 (dispatcher c)
};
const CanonPair& mk_canon();

// theta(u, Y): the finitary expansion of the defining disjunction for a
// concrete finite name u. Tags: 0 membership in omega, 1 equality with
// omega, 2 product, 3 sum, 4 identity.
Formula theta_formula(const Name& u, NameExpr y, const Bounds& bounds);

VerifyReport verify_canon_cases(const Bounds& bounds);

// --- failure of presentation ---

struct PresentationReport {
  std::vector<VerifyInstance> instances;
  bool counterexample_name_ok = false;
  bool forced_subgoal_refuted = false;
  std::vector<std::string> surjection_candidates;  // per candidate: found / none
  bool any_realizer_found = false;
  uint64_t candidates_tried = 0;
  bool ok() const {
    return counterexample_name_ok && forced_subgoal_refuted && !any_realizer_found;
  }
};
PresentationReport refute_presentation(uint64_t size_bound, const Bounds& bounds);

}  // namespace extreal

#endif
