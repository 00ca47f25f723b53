#include "extreal/reduce.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace extreal {

namespace {

struct StuckSignal {};
struct FuelOutSignal {};
struct OracleSignal {
  uint64_t key;
};

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

struct Engine {
  uint64_t fuel;
  uint64_t used = 0;
  const OracleView* oracle;  // nullptr: ORACLE redexes are stuck

  void burn() {
    if (fuel == 0) throw FuelOutSignal{};
    --fuel;
    ++used;
  }

  // Fires head rules until the spine head is under-saturated (a value head).
  // The result may still contain redexes inside argument positions.
  Term whnf(Term t) {
    std::vector<Term> args;
    for (;;) {
      Term h = spine_head(t, args);
      if (h.is_var()) throw std::logic_error("reduce: open term");
      if (h.is_numeral()) {
        if (args.empty()) return t;
        throw StuckSignal{};  // numerals are not functions
      }
      Comb c = h.comb();
      size_t ar = static_cast<size_t>(comb_arity(c));
      if (args.size() < ar) return t;
      switch (c) {
        case Comb::K:
          burn();
          t = spine_build(args[0], args, 2);
          break;
        case Comb::S:
          burn();
          t = spine_build(args[0](args[2])(args[1](args[2])), args, 3);
          break;
        case Comb::P:
          burn();
          t = spine_build(args[2](args[0])(args[1]), args, 3);
          break;
        case Comb::P0:
        case Comb::P1: {
          Term a = whnf(args[0]);
          std::vector<Term> pargs;
          Term ph = spine_head(a, pargs);
          if (!(ph.is_const() && ph.comb() == Comb::P && pargs.size() == 2)) throw StuckSignal{};
          burn();
          t = spine_build(c == Comb::P0 ? pargs[0] : pargs[1], args, 1);
          break;
        }
        case Comb::Succ: {
          Term a = whnf(args[0]);
          if (!a.is_numeral()) throw StuckSignal{};
          burn();
          t = spine_build(Term::numeral(a.numeral_value() + 1), args, 1);
          break;
        }
        case Comb::Pred: {
          Term a = whnf(args[0]);
          if (!a.is_numeral() || a.numeral_value() == 0) throw StuckSignal{};
          burn();
          t = spine_build(Term::numeral(a.numeral_value() - 1), args, 1);
          break;
        }
        case Comb::D: {
          Term a = whnf(args[0]);
          if (!a.is_numeral()) throw StuckSignal{};
          Term b = whnf(args[1]);
          if (!b.is_numeral()) throw StuckSignal{};
          burn();
          t = spine_build(a.numeral_value() == b.numeral_value() ? args[2] : args[3], args, 4);
          break;
        }
        case Comb::Oracle: {
          if (oracle == nullptr) throw StuckSignal{};
          Term a = whnf(args[0]);
          if (!a.is_numeral()) throw StuckSignal{};
          uint64_t key = a.numeral_value();
          auto it = std::lower_bound(
              oracle->begin(), oracle->end(), key,
              [](const std::pair<uint64_t, uint64_t>& e, uint64_t k) { return e.first < k; });
          if (it == oracle->end() || it->first != key) throw OracleSignal{key};
          burn();
          t = spine_build(Term::numeral(it->second), args, 1);
          break;
        }
      }
    }
  }

  Term normalize(Term t) {
    t = whnf(std::move(t));
    if (!t.is_app()) return t;
    std::vector<Term> args;
    Term h = spine_head(t, args);
    bool changed = false;
    for (auto& a : args) {
      Term na = normalize(a);
      if (na != a) {
        a = std::move(na);
        changed = true;
      }
    }
    return changed ? spine_build(h, args) : t;
  }
};

EvalOutcome run(const Term& t, Fuel fuel, const OracleView* oracle) {
  Engine eng{fuel.steps, 0, oracle};
  EvalOutcome out{};
  try {
    Term nf = eng.normalize(t);
    out.kind = EvalOutcome::Kind::Defined;
    out.value = Element::trusted(std::move(nf));
  } catch (const StuckSignal&) {
    out.kind = EvalOutcome::Kind::Stuck;
  } catch (const FuelOutSignal&) {
    out.kind = EvalOutcome::Kind::FuelOut;
  } catch (const OracleSignal& sig) {
    out.kind = EvalOutcome::Kind::NeedsOracle;
    out.oracle_key = sig.key;
  }
  out.steps_used = eng.used;
  return out;
}

}  // namespace

EvalOutcome reduce(const Term& t, Fuel fuel) { return run(t, fuel, nullptr); }

EvalOutcome reduce(const Term& t, Fuel fuel, OracleView oracle) { return run(t, fuel, &oracle); }

EvalOutcome apply(const Element& a, const Element& b, Fuel fuel) {
  return reduce(Term::app(a.term(), b.term()), fuel);
}

EvalOutcome apply_spine(const Element& f, std::span<const Element> args, Fuel fuel) {
  Term t = f.term();
  for (const auto& a : args) t = Term::app(t, a.term());
  return reduce(t, fuel);
}

KleeneResult kleene_eq(const Term& t, const Term& s, Fuel fuel) {
  EvalOutcome lt = reduce(t, fuel);
  EvalOutcome rt = reduce(s, fuel);
  if (lt.fuel_out() || rt.fuel_out()) return KleeneResult::Unknown;
  if (lt.stuck() && rt.stuck()) return KleeneResult::Agree;
  if (lt.defined() && rt.defined())
    return *lt.value == *rt.value ? KleeneResult::Agree : KleeneResult::Disagree;
  return KleeneResult::Disagree;
}

Element eval_or_throw(const Term& t, Fuel fuel) {
  EvalOutcome o = reduce(t, fuel);
  if (!o.defined())
    throw std::runtime_error("evaluation did not produce a value: " + t.to_string());
  return *o.value;
}

}  // namespace extreal
