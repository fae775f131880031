#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <span>
#include <vector>

#include "sublat/module.hpp"
#include "sublat/ring.hpp"

namespace sublat {

/// Membership bitmap over element indices.
using MemberSet = boost::dynamic_bitset<std::uint64_t>;

/// A ring-stable subgroup stored as its explicit member set, plus the
/// generators that were actually needed to span it.
class Submodule {
 public:
  Submodule(ModulePtr module, MemberSet members, std::vector<ElemId> gens);

  const FiniteModule& module() const noexcept { return *module_; }
  const ModulePtr& module_ptr() const noexcept { return module_; }
  const MemberSet& members() const noexcept { return members_; }
  std::uint32_t order() const noexcept { return order_; }
  std::span<const ElemId> gens() const noexcept { return gens_; }

  /// Sorted member indices (lexicographic element order).
  std::vector<ElemId> member_ids() const;
  std::vector<Element> elements() const;
  std::vector<Element> generators() const;

  bool contains(ElemId x) const { return members_.test(x); }
  /// this ⊇ other.
  bool contains(const Submodule& other) const;
  bool is_zero() const noexcept { return order_ == 1; }
  bool is_whole() const noexcept { return order_ == module_->order(); }
  bool is_proper() const noexcept { return !is_whole(); }

  friend bool operator==(const Submodule& a, const Submodule& b);

 private:
  ModulePtr module_;
  MemberSet members_;
  std::vector<ElemId> gens_;
  std::uint32_t order_;
};

/// Same module, structurally.
bool same_module(const FiniteModule& a, const FiniteModule& b);

/// Smallest submodule containing `gens`.
Submodule span(const ModulePtr& module, std::span<const ElemId> gens);
Submodule span(const ModulePtr& module, const std::vector<Element>& gens);
/// Smallest submodule containing `base` and `extra`.
Submodule extend(const Submodule& base, std::span<const ElemId> extra);
Submodule zero_submodule(const ModulePtr& module);
Submodule whole_module(const ModulePtr& module);
/// Wraps an explicit member set; DomainError if it is not a submodule.
Submodule from_members(const ModulePtr& module, const MemberSet& members);

enum class SubOp { Intersect, Sum };
/// DomainError when the owning modules differ.
Submodule sub_combine(const Submodule& a, const Submodule& b, SubOp op);

/// (N :_R M) = {r : rM ⊆ N}.
Ideal colon_into(const Submodule& n);
/// Ann_R(N) = {r : rN = 0}.
Ideal annihilator(const Submodule& n);

enum class IdealAction { Product, Torsion };
/// Product: IN. Torsion: (N :_M I) = {m : Im ⊆ N}.
Submodule ideal_apply(const Ideal& ideal, const Submodule& n, IdealAction mode);

/// One ring element per ideal that can act differently on the module:
/// per block, the divisors of the block exponent. Any scalar r acts on M as
/// a unit multiple of one of these, so quantifying "for all r" over this
/// list is exact.
std::vector<RingElement> scalar_representatives(const FiniteModule& m);
/// The ideals generated by scalar_representatives.
std::vector<Ideal> relevant_ideals(const FiniteModule& m);

/// Proper-only element predicates that do not need the lattice.
bool is_prime_submodule(const Submodule& n);
bool is_primary_submodule(const Submodule& n);
bool is_two_absorbing_submodule(const Submodule& n);
/// IN = IM ∩ N for every ideal I.
bool is_pure_submodule(const Submodule& n);

std::string submodule_to_string(const Submodule& n);

}  // namespace sublat
