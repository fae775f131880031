#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sublat/lattice.hpp"
#include "sublat/predicates.hpp"

namespace sublat {

/// The irreducibility family decided over the submodule lattice.
enum class SubPredicate {
  Irreducible,
  StronglyIrreducible,
  TwoIrreducible,
  StronglyTwoIrreducible,
  StronglySumTwoIrreducible,
};

std::string_view to_string(SubPredicate p);

struct ClassifyOptions {
  /// Accept the whole module for the irreducible / 2-irreducible tests
  /// (their definitions do not demand a proper submodule).
  bool allow_whole = false;
  /// Quantify only over submodules of this ambient submodule T, i.e. decide
  /// the predicate for N as a submodule of T.
  std::optional<SubmoduleLattice::Index> ambient;
};

struct Verdict {
  bool holds = false;
  /// On failure: the lexicographically least offending pair or triple of
  /// lattice indices.
  std::vector<SubmoduleLattice::Index> witness;
};

/// Exhaustive decision over lattice pairs/triples (unordered, repetition
/// allowed). DomainError for the whole module (or the ambient T), except for
/// strong sum 2-irreducibility and, with allow_whole, the irreducible pair.
Verdict classify(const SubmoduleLattice& lattice, SubmoduleLattice::Index n, SubPredicate p,
                 const ClassifyOptions& options = {});
bool classify(const Submodule& n, const SubmoduleLattice& lattice, SubPredicate p);

/// Strong 2-irreducibility via the element-wise criterion on
/// (Rx+Ry) ∩ (Rx+Rz) ∩ (Ry+Rz); independent of any lattice. Since Rx+Ry
/// depends only on the cyclic submodules Rx and Ry, the triples run over
/// distinct cyclic submodules.
bool classify_via_elements(const Submodule& n);

/// Whether Rx ∩ Ry ∩ Rz ⊆ N always forces a pairwise intersection into N.
bool cyclic_triple_condition(const Submodule& n);

enum class RowFlag {
  Irreducible,
  StronglyIrreducible,
  TwoIrreducible,
  StronglyTwoIrreducible,
  StronglySumTwoIrreducible,
  Prime,
  Primary,
  TwoAbsorbing,
  TwoAbsorbingPrimary,
  Radical,
  Pure,
  Waist,
};
inline constexpr std::size_t kRowFlagCount = 12;
std::string_view to_string(RowFlag f);

struct ReportRow {
  SubmoduleLattice::Index id = 0;
  std::uint32_t order = 0;
  std::vector<Element> generators;
  std::array<bool, kRowFlagCount> flags{};
  Ideal colon = Ideal::zero(Ring::integers());
  Ideal annihilator = Ideal::zero(Ring::integers());
  SubmoduleLattice::Index radical = 0;

  bool flag(RowFlag f) const { return flags[static_cast<std::size_t>(f)]; }
};

struct ModuleFlags {
  bool distributive = false;
  bool multiplication = false;
  bool comultiplication = false;
  bool fully_pure = false;
  /// Only decidable over rings with finitely many ideals.
  std::optional<bool> strong_comultiplication;
};

struct ClassificationReport {
  std::string module;
  std::string ring;
  std::uint32_t order = 0;
  std::int64_t exponent = 0;
  std::vector<ReportRow> rows;
  ModuleFlags module_flags;
};

/// Full per-submodule table. Throws InternalError if a row breaks the
/// implication chain (strongly irreducible ⇒ strongly 2-irreducible ⇒
/// 2-irreducible, irreducible ⇒ 2-irreducible, prime ⇒ radical).
ClassificationReport classify_all(const SubmoduleLattice& lattice);
ClassificationReport classify_all(const ModulePtr& module);

}  // namespace sublat
