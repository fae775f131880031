#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "sublat/module.hpp"
#include "sublat/submodule.hpp"

namespace sublat {

/// Set of lattice indices.
using IndexSet = boost::dynamic_bitset<std::uint64_t>;

/// The complete submodule lattice of a finite module, sorted by
/// (order, member list). Index 0 is the zero submodule and the last index
/// is the whole module. Immutable once built; meet, join and containment
/// are table lookups.
class SubmoduleLattice {
 public:
  using Index = std::uint32_t;

  /// Join-closure from the cyclic submodules. Throws ResourceError once more
  /// than `cap` submodules are found (default: the module's lattice cap).
  static SubmoduleLattice enumerate(const ModulePtr& module, std::optional<std::size_t> cap = {});

  const FiniteModule& module() const noexcept { return *module_; }
  const ModulePtr& module_ptr() const noexcept { return module_; }
  std::size_t size() const noexcept { return subs_.size(); }
  const Submodule& operator[](Index i) const { return subs_.at(i); }
  std::span<const Submodule> subs() const noexcept { return subs_; }

  Index zero_index() const noexcept { return 0; }
  Index whole_index() const noexcept { return static_cast<Index>(subs_.size() - 1); }

  std::optional<Index> find(const MemberSet& members) const;
  /// Index of a submodule of this lattice's module; DomainError otherwise.
  Index index_of(const Submodule& n) const;

  Index meet(Index a, Index b) const { return meet_[a * subs_.size() + b]; }
  Index join(Index a, Index b) const { return join_[a * subs_.size() + b]; }
  /// a ⊆ b.
  bool leq(Index a, Index b) const { return below_[b].test(a); }
  /// {x : x ⊆ a}.
  const IndexSet& below(Index a) const { return below_.at(a); }
  /// {x : a ⊆ x}.
  const IndexSet& above(Index a) const { return above_.at(a); }

  std::span<const Index> prime_indices() const noexcept { return primes_; }
  std::span<const Index> maximal_indices() const noexcept { return maximal_; }
  /// Distinct cyclic submodules Rx.
  std::span<const Index> cyclic_indices() const noexcept { return cyclic_; }

 private:
  SubmoduleLattice() = default;

  ModulePtr module_;
  std::vector<Submodule> subs_;
  std::unordered_map<MemberSet, Index> lookup_;
  std::vector<Index> meet_, join_;
  std::vector<IndexSet> below_, above_;
  std::vector<Index> primes_, maximal_, cyclic_;
};

/// Proper submodules not strictly inside another proper submodule.
std::vector<Submodule> maximal_submodules(const SubmoduleLattice& lattice);

/// A minimum-length irredundant list of irreducible submodules meeting in N,
/// in lattice order. DomainError for the whole module.
std::vector<SubmoduleLattice::Index> irreducible_decomposition(const SubmoduleLattice& lattice,
                                                               SubmoduleLattice::Index n);

}  // namespace sublat
