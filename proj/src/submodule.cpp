#include "sublat/submodule.hpp"

#include <algorithm>

#include "sublat/arith.hpp"
#include "sublat/errors.hpp"

namespace sublat {

Submodule::Submodule(ModulePtr module, MemberSet members, std::vector<ElemId> gens)
    : module_(std::move(module)),
      members_(std::move(members)),
      gens_(std::move(gens)),
      order_(static_cast<std::uint32_t>(members_.count())) {}

std::vector<ElemId> Submodule::member_ids() const {
  std::vector<ElemId> out;
  out.reserve(order_);
  for (auto i = members_.find_first(); i != MemberSet::npos; i = members_.find_next(i))
    out.push_back(static_cast<ElemId>(i));
  return out;
}

std::vector<Element> Submodule::elements() const {
  std::vector<Element> out;
  for (auto id : member_ids()) out.push_back(module_->decode(id));
  return out;
}

std::vector<Element> Submodule::generators() const {
  std::vector<Element> out;
  for (auto id : gens_) out.push_back(module_->decode(id));
  return out;
}

bool Submodule::contains(const Submodule& other) const {
  return other.members_.is_subset_of(members_);
}

bool same_module(const FiniteModule& a, const FiniteModule& b) {
  if (&a == &b) return true;
  if (!(a.ring() == b.ring()) || a.block_count() != b.block_count()) return false;
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    auto x = a.block(i);
    auto y = b.block(i);
    if (!std::equal(x.begin(), x.end(), y.begin(), y.end())) return false;
  }
  return true;
}

bool operator==(const Submodule& a, const Submodule& b) {
  return a.members_ == b.members_ && same_module(*a.module_, *b.module_);
}

namespace {

// Adds the cyclic subgroup <g> to the subgroup held in (members, list),
// one coset at a time. Returns false when g was already inside.
bool absorb(const FiniteModule& m, MemberSet& members, std::vector<ElemId>& list, ElemId g) {
  if (members.test(g)) return false;
  const std::size_t base = list.size();
  ElemId x = g;
  while (!members.test(x)) {
    for (std::size_t i = 0; i < base; ++i) {
      const ElemId y = m.add(list[i], x);
      members.set(y);
      list.push_back(y);
    }
    x = m.add(x, g);
  }
  return true;
}

// Generators whose additive span is the R-span: over a product ring every
// block projection e_b·g must be included.
std::vector<ElemId> ring_closed_gens(const FiniteModule& m, std::span<const ElemId> gens) {
  if (m.block_count() == 1) return {gens.begin(), gens.end()};
  std::vector<ElemId> out;
  for (auto g : gens)
    for (std::size_t b = 0; b < m.block_count(); ++b) out.push_back(m.project_block(b, g));
  return out;
}

}  // namespace

Submodule extend(const Submodule& base, std::span<const ElemId> extra) {
  const auto& m = base.module();
  MemberSet members = base.members();
  std::vector<ElemId> list = base.member_ids();
  std::vector<ElemId> gens(base.gens().begin(), base.gens().end());
  for (auto g : ring_closed_gens(m, extra))
    if (absorb(m, members, list, g)) gens.push_back(g);
  return Submodule(base.module_ptr(), std::move(members), std::move(gens));
}

Submodule zero_submodule(const ModulePtr& module) {
  MemberSet members(module->order());
  members.set(module->zero());
  return Submodule(module, std::move(members), {});
}

Submodule span(const ModulePtr& module, std::span<const ElemId> gens) {
  for (auto g : gens)
    if (g >= module->order()) throw DomainError("span: generator outside the module");
  return extend(zero_submodule(module), gens);
}

Submodule span(const ModulePtr& module, const std::vector<Element>& gens) {
  std::vector<ElemId> ids;
  for (const auto& e : gens) ids.push_back(module->encode(e));
  return span(module, ids);
}

Submodule whole_module(const ModulePtr& module) {
  std::vector<ElemId> basis;
  for (std::size_t j = 0; j < module->component_count(); ++j) basis.push_back(module->basis(j));
  return span(module, basis);
}

Submodule from_members(const ModulePtr& module, const MemberSet& members) {
  if (members.size() != module->order()) throw DomainError("from_members: size mismatch");
  std::vector<ElemId> ids;
  for (auto i = members.find_first(); i != MemberSet::npos; i = members.find_next(i))
    ids.push_back(static_cast<ElemId>(i));
  Submodule s = span(module, ids);
  if (s.members() != members) throw DomainError("from_members: set is not a submodule");
  return s;
}

Submodule sub_combine(const Submodule& a, const Submodule& b, SubOp op) {
  if (!same_module(a.module(), b.module()))
    throw DomainError("sub_combine: submodules of different modules");
  if (op == SubOp::Intersect) return from_members(a.module_ptr(), a.members() & b.members());
  return extend(a, b.gens());
}

namespace {

// Smallest divisor d of the block exponent such that d·x ∈ target for every
// x in `tests`; per block, this is the canonical generator of the ideal
// {r : r·tests ⊆ target}.
Ideal block_ideal(const FiniteModule& m, const MemberSet& target,
                  const std::vector<std::vector<ElemId>>& tests) {
  std::vector<std::int64_t> gens(m.block_count());
  for (std::size_t b = 0; b < m.block_count(); ++b) {
    for (auto d : divisors(m.block_exponent(b))) {
      const auto r = m.block_scalar(b, d);
      const bool ok = std::all_of(tests[b].begin(), tests[b].end(),
                                  [&](ElemId x) { return target.test(m.scale(r, x)); });
      if (ok) {
        gens[b] = d;
        break;
      }
    }
  }
  return Ideal(m.ring(), std::move(gens));
}

}  // namespace

Ideal colon_into(const Submodule& n) {
  const auto& m = n.module();
  std::vector<std::vector<ElemId>> tests(m.block_count());
  for (std::size_t j = 0; j < m.component_count(); ++j) tests[m.block_of(j)].push_back(m.basis(j));
  return block_ideal(m, n.members(), tests);
}

Ideal annihilator(const Submodule& n) {
  const auto& m = n.module();
  std::vector<std::vector<ElemId>> tests(m.block_count());
  for (auto g : n.gens())
    for (std::size_t b = 0; b < m.block_count(); ++b) tests[b].push_back(m.project_block(b, g));
  MemberSet zero(m.order());
  zero.set(m.zero());
  return block_ideal(m, zero, tests);
}

Submodule ideal_apply(const Ideal& ideal, const Submodule& n, IdealAction mode) {
  const auto& m = n.module();
  if (!(ideal.ring() == m.ring()))
    throw DomainError("ideal_apply: ideal over " + ideal.ring().descriptor() + ", module over " +
                      m.ring().descriptor());
  const RingElement g(ideal.gens().begin(), ideal.gens().end());
  if (mode == IdealAction::Product) {
    std::vector<ElemId> images;
    for (auto x : n.gens()) images.push_back(m.scale(g, x));
    return span(n.module_ptr(), images);
  }
  MemberSet out(m.order());
  for (ElemId x = 0; x < m.order(); ++x)
    if (n.contains(m.scale(g, x))) out.set(x);
  return from_members(n.module_ptr(), out);
}

std::vector<RingElement> scalar_representatives(const FiniteModule& m) {
  std::vector<RingElement> out{RingElement{}};
  for (std::size_t b = 0; b < m.block_count(); ++b) {
    std::vector<RingElement> next;
    for (const auto& prefix : out)
      for (auto d : divisors(m.block_exponent(b))) {
        auto r = prefix;
        r.push_back(d);
        next.push_back(std::move(r));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Ideal> relevant_ideals(const FiniteModule& m) {
  std::vector<Ideal> out;
  for (const auto& r : scalar_representatives(m)) out.emplace_back(m.ring(), r);
  return out;
}

namespace {

void require_proper(const Submodule& n, const char* what) {
  if (n.is_whole()) throw DomainError(std::string(what) + " is defined only for proper submodules");
}

RingElement ring_product(const RingElement& a, const RingElement& b) {
  RingElement out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

}  // namespace

bool is_prime_submodule(const Submodule& n) {
  require_proper(n, "prime");
  const auto& m = n.module();
  const Ideal colon = colon_into(n);
  for (const auto& r : scalar_representatives(m)) {
    if (colon.contains_element(r)) continue;
    for (ElemId x = 0; x < m.order(); ++x)
      if (!n.contains(x) && n.contains(m.scale(r, x))) return false;
  }
  return true;
}

bool is_primary_submodule(const Submodule& n) {
  require_proper(n, "primary");
  const auto& m = n.module();
  const Ideal root = ideal_radical(colon_into(n));
  for (const auto& r : scalar_representatives(m)) {
    if (root.contains_element(r)) continue;
    for (ElemId x = 0; x < m.order(); ++x)
      if (!n.contains(x) && n.contains(m.scale(r, x))) return false;
  }
  return true;
}

bool is_two_absorbing_submodule(const Submodule& n) {
  require_proper(n, "two_absorbing");
  const auto& m = n.module();
  const Ideal colon = colon_into(n);
  const auto reps = scalar_representatives(m);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i; j < reps.size(); ++j) {
      const auto ab = ring_product(reps[i], reps[j]);
      if (colon.contains_element(ab)) continue;
      for (ElemId x = 0; x < m.order(); ++x) {
        if (!n.contains(m.scale(ab, x))) continue;
        if (!n.contains(m.scale(reps[i], x)) && !n.contains(m.scale(reps[j], x))) return false;
      }
    }
  return true;
}

bool is_pure_submodule(const Submodule& n) {
  const auto whole = whole_module(n.module_ptr());
  for (const auto& ideal : relevant_ideals(n.module())) {
    const auto in = ideal_apply(ideal, n, IdealAction::Product);
    const auto im = ideal_apply(ideal, whole, IdealAction::Product);
    if (in.members() != (im.members() & n.members())) return false;
  }
  return true;
}

std::string submodule_to_string(const Submodule& n) {
  std::string out = "<";
  bool first = true;
  for (const auto& g : n.generators()) {
    if (!first) out += ", ";
    out += element_to_string(g);
    first = false;
  }
  return out + ">";
}

}  // namespace sublat
