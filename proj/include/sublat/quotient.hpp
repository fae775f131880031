#pragma once

#include <cstdint>
#include <vector>

#include "sublat/module.hpp"
#include "sublat/submodule.hpp"

namespace sublat {

/// A surjective module homomorphism given by its value table.
class Projection {
 public:
  /// Throws InternalError if `table` is not onto `target`.
  Projection(ModulePtr source, ModulePtr target, std::vector<ElemId> table);

  const ModulePtr& source() const noexcept { return source_; }
  const ModulePtr& target() const noexcept { return target_; }
  ElemId apply(ElemId x) const { return table_.at(x); }
  const Submodule& kernel() const noexcept { return kernel_; }
  /// Least source element (lexicographic) mapping to q.
  ElemId representative(ElemId q) const { return min_rep_.at(q); }

  Submodule image(const Submodule& n) const;
  Submodule preimage(const Submodule& n) const;

 private:
  ModulePtr source_;
  ModulePtr target_;
  std::vector<ElemId> table_;
  std::vector<ElemId> min_rep_;
  Submodule kernel_;
};

struct Quotient {
  ModulePtr module;
  Projection projection;
};

/// M/K, rewritten as a direct sum of cyclic groups via a Smith normal form
/// of the relation matrix, with the canonical projection M → M/K.
Quotient quotient(const Submodule& k);

struct Localization {
  std::int64_t prime;
  ModulePtr module;
  Projection map;
};

/// Localization of a finite Z-module at S = Z \ pZ, realized as its
/// p-primary component; the map sends N to S^{-1}N. DomainError if p is
/// not prime or the ring is not the integers.
Localization localize(const ModulePtr& m, std::int64_t p);

/// Whether s·N ⊆ K for some s not divisible by p (the finite-module test
/// behind S^{-1}N ⊆ S^{-1}K).
bool exists_unit_multiplier(const Submodule& n, const Submodule& k, std::int64_t p);

/// Per-factor components of a submodule of a product-ring module, as
/// submodules of the factor modules.
std::vector<Submodule> decompose_submodule(const Submodule& n);
/// Inverse of decompose_submodule: the submodule N_1 × ... × N_k of `m`.
Submodule product_submodule(const ModulePtr& m, const std::vector<Submodule>& parts);

}  // namespace sublat
