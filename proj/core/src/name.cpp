#include "extreal/name.hpp"

#include <algorithm>
#include <sstream>

#include "extreal/combinators.hpp"

namespace extreal {

struct Name::Node {
  std::vector<Entry> entries;
  bool complete = true;
  Gen gen = Gen::None;
  uint64_t bound = 0;
  size_t rank = 0;
  size_t hash = 0;
};

namespace {
int entry_compare(const Name::Entry& a, const Name::Entry& b) {
  if (int c = Element::compare(a.left, b.left)) return c;
  if (int c = Element::compare(a.right, b.right)) return c;
  return Name::compare(a.child, b.child);
}
}  // namespace

Name Name::make(std::vector<Entry> entries, bool complete, Gen gen, uint64_t bound) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return entry_compare(a, b) < 0; });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const Entry& a, const Entry& b) { return entry_compare(a, b) == 0; }),
                entries.end());
  if (entries.empty() && complete && gen == Gen::None) return empty();
  auto node = std::make_shared<Node>();
  node->complete = complete;
  node->gen = gen;
  node->bound = bound;
  size_t h = 0x51ed27;
  size_t rk = 0;
  for (const auto& e : entries) {
    rk = std::max(rk, e.child.rank() + 1);
    size_t eh = e.left.hash() * 1000003u ^ e.right.hash();
    eh = eh * 1000003u ^ e.child.hash();
    h = h * 1000003u ^ eh;
  }
  node->rank = rk;
  node->hash = h;
  node->entries = std::move(entries);
  Name n;
  n.node_ = std::move(node);
  return n;
}

const Name& Name::empty() {
  static const Name e;
  return e;
}

std::span<const Name::Entry> Name::entries() const {
  if (!node_) return {};
  return node_->entries;
}
bool Name::complete() const { return node_ ? node_->complete : true; }
Name::Gen Name::generator() const { return node_ ? node_->gen : Gen::None; }
uint64_t Name::generator_bound() const { return node_ ? node_->bound : 0; }
size_t Name::rank() const { return node_ ? node_->rank : 0; }
size_t Name::hash() const { return node_ ? node_->hash : 0x9e3779b9; }

int Name::compare(const Name& a, const Name& b) {
  if (a.node_ == b.node_) return 0;
  auto ea = a.entries(), eb = b.entries();
  if (ea.size() != eb.size()) return ea.size() < eb.size() ? -1 : 1;
  for (size_t i = 0; i < ea.size(); ++i)
    if (int c = entry_compare(ea[i], eb[i])) return c;
  return 0;
}

Name Name::with_complete(bool complete) const {
  std::vector<Entry> es(entries().begin(), entries().end());
  return make(std::move(es), complete, generator(), generator_bound());
}

std::string Name::to_string() const {
  std::ostringstream os;
  os << "(name (";
  bool first = true;
  for (const auto& e : entries()) {
    if (!first) os << ' ';
    first = false;
    os << '(' << e.left.to_string() << ' ' << e.right.to_string() << ' '
       << e.child.to_string() << ')';
  }
  os << ')';
  if (!complete()) os << " :truncated";
  os << ')';
  return os.str();
}

HfSet::HfSet(std::vector<HfSet> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(),
            [](const HfSet& a, const HfSet& b) { return compare(a, b) < 0; });
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

int HfSet::compare(const HfSet& a, const HfSet& b) {
  if (a.members_.size() != b.members_.size())
    return a.members_.size() < b.members_.size() ? -1 : 1;
  for (size_t i = 0; i < a.members_.size(); ++i)
    if (int c = compare(a.members_[i], b.members_[i])) return c;
  return 0;
}

size_t HfSet::rank() const {
  size_t r = 0;
  for (const auto& m : members_) r = std::max(r, m.rank() + 1);
  return r;
}

HfSet HfSet::number(uint64_t n) {
  std::vector<HfSet> members;
  for (uint64_t m = 0; m < n; ++m) members.push_back(number(m));
  return HfSet(std::move(members));
}

std::string HfSet::to_string() const {
  std::ostringstream os;
  os << "(set";
  for (const auto& m : members_) os << ' ' << m.to_string();
  os << ')';
  return os.str();
}

Name dot(uint64_t n) {
  std::vector<Name::Entry> entries;
  for (uint64_t m = 0; m < n; ++m)
    entries.push_back({elem::num(m), elem::num(m), dot(m)});
  return Name::make(std::move(entries));
}

Name dot_omega(uint64_t bound) {
  std::vector<Name::Entry> entries;
  for (uint64_t m = 0; m < bound; ++m)
    entries.push_back({elem::num(m), elem::num(m), dot(m)});
  return Name::make(std::move(entries), /*complete=*/false, Name::Gen::NatCanonical, bound);
}

Name vset1(const Name& x) {
  return Name::make({{elem::num(0), elem::num(0), x}});
}

Name vset2(const Name& x, const Name& y) {
  return Name::make({{elem::num(0), elem::num(0), x}, {elem::num(1), elem::num(1), y}});
}

Name vpair(const Name& x, const Name& y) {
  return Name::make({{elem::num(0), elem::num(0), vset1(x)},
                     {elem::num(1), elem::num(1), vset2(x, y)}});
}

Name check_name(const HfSet& u) {
  std::vector<Name::Entry> entries;
  for (const auto& v : u.members())
    entries.push_back({elem::num(0), elem::num(0), check_name(v)});
  return Name::make(std::move(entries), true, Name::Gen::CheckOfSet, 0);
}

namespace {

Element force_app(const Element& f, const Element& a, const Bounds& bounds, bool* truncated) {
  EvalOutcome o = apply(f, a, bounds.fuel);
  if (o.defined()) return *o.value;
  if (o.fuel_out()) {
    *truncated = true;
    throw NotInType("fuel exhausted while embedding " + f.to_string());
  }
  throw NotInType("application stuck while embedding: " + f.to_string() + " applied to " +
                  a.to_string());
}

TypeCode family_at(const Element& family, const Element& a, const Bounds& bounds) {
  FamilyApp fa = apply_family(family, a, bounds);
  if (!fa.status.holds())
    throw NotInType("family application failed at " + a.to_string());
  return *fa.value;
}

Name embed_impl(const Element& a, const TypeCode& sigma, const Bounds& bounds);

Name embed_graph(const Element& f, const TypeCode::Pi& pi, const Bounds& bounds) {
  Per base = per_enumerate(*pi.base, bounds);
  std::vector<Name::Entry> entries;
  bool truncated = !base.complete;
  for (const auto& [c, d] : base.pairs) {
    Element fc = force_app(f, c, bounds, &truncated);
    TypeCode tau = family_at(pi.family, c, bounds);
    Name key = embed_impl(c, *pi.base, bounds);
    Name value = embed_impl(fc, tau, bounds);
    entries.push_back({c, d, vpair(key, value)});
  }
  return Name::make(std::move(entries), !truncated);
}

Name embed_impl(const Element& a, const TypeCode& sigma, const Bounds& bounds) {
  const auto& view = sigma.view();
  if (std::holds_alternative<TypeCode::NFin>(view) ||
      std::holds_alternative<TypeCode::Nat>(view)) {
    if (!a.term().is_numeral()) throw NotInType("numeral expected: " + a.to_string());
    return dot(a.term().numeral_value());
  }
  if (auto* pi = std::get_if<TypeCode::Pi>(&view)) return embed_graph(a, *pi, bounds);
  if (auto* sg = std::get_if<TypeCode::Sigma>(&view)) {
    bool trunc = false;
    Element a0 = force_app(elem::p0(), a, bounds, &trunc);
    Element a1 = force_app(elem::p1(), a, bounds, &trunc);
    TypeCode tau = family_at(sg->family, a0, bounds);
    return vpair(embed_impl(a0, *sg->base, bounds), embed_impl(a1, tau, bounds));
  }
  if (std::holds_alternative<TypeCode::Id>(view)) return Name::empty();
  if (auto* w = std::get_if<TypeCode::W>(&view)) {
    bool trunc = false;
    Element c0 = force_app(elem::p0(), a, bounds, &trunc);
    Element c1 = force_app(elem::p1(), a, bounds, &trunc);
    TypeCode tau = family_at(w->family, c0, bounds);
    Per arity = per_enumerate(tau, bounds);
    std::vector<Name::Entry> sub;
    bool truncated = !arity.complete;
    for (const auto& [p, q] : arity.pairs) {
      Element child = force_app(c1, p, bounds, &truncated);
      sub.push_back({p, q, vpair(embed_impl(p, tau, bounds), embed_impl(child, sigma, bounds))});
    }
    return vpair(embed_impl(c0, *w->base, bounds), Name::make(std::move(sub), !truncated));
  }
  throw NotInType("unsupported type code");
}

}  // namespace

Name embed(const Element& a, const TypeCode& sigma, const Bounds& bounds) {
  TriState in = elem_equiv(a, a, sigma, bounds);
  if (in.refuted())
    throw NotInType(a.to_string() + " is not of type " + sigma.to_string());
  Name n = embed_impl(a, sigma, bounds);
  // an unknown membership degrades the completeness claim, never the shape
  if (in.unknown()) return n.with_complete(false);
  return n;
}

Name x_of(const TypeCode& sigma, const Bounds& bounds) {
  Per per = per_enumerate(sigma, bounds);
  std::vector<Name::Entry> entries;
  bool truncated = !per.complete;
  for (const auto& [a, b] : per.pairs) {
    try {
      entries.push_back({a, b, embed_impl(a, sigma, bounds)});
    } catch (const NotInType&) {
      truncated = true;
    }
  }
  return Name::make(std::move(entries), !truncated, Name::Gen::XOfType, bounds.enum_bound);
}

Name f_of(const TypeCode& sigma, const Element& family, const Bounds& bounds) {
  Per per = per_enumerate(sigma, bounds);
  std::vector<Name::Entry> entries;
  bool truncated = !per.complete;
  for (const auto& [a, b] : per.pairs) {
    try {
      TypeCode tau = family_at(family, a, bounds);
      Name xt = x_of(tau, bounds);
      truncated = truncated || !xt.complete();
      entries.push_back({a, b, vpair(embed_impl(a, sigma, bounds), xt)});
    } catch (const NotInType&) {
      truncated = true;
    }
  }
  return Name::make(std::move(entries), !truncated, Name::Gen::XOfType, bounds.enum_bound);
}

}  // namespace extreal
