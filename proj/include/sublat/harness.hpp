#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sublat/classification.hpp"
#include "sublat/quotient.hpp"

namespace sublat {

struct InstanceConfig {
  std::int64_t max_order = 60;
  std::size_t max_lattice = 512;
  bool integer_modules = true;
  bool residue_modules = true;
  bool product_modules = true;
  bool include_noncyclic = false;
  /// Largest order of a single factor in product-ring instances
  /// (default: max_order / 2).
  std::optional<std::int64_t> max_factor_order;
  /// Extra randomly drawn Z-modules (up to three cyclic factors).
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  Limits limits;
};

/// Deterministic instance list; ResourceError if the bounds exceed the
/// global caps.
std::vector<ModulePtr> generate_instances(const InstanceConfig& cfg);

using Index = SubmoduleLattice::Index;

/// Lazily computed facts about one instance, shared by all theorems run on
/// it. Not thread-safe; one context per worker.
class InstanceContext {
 public:
  InstanceContext(ModulePtr module, std::size_t lattice_cap);

  const ModulePtr& module_ptr() const noexcept { return module_; }
  const FiniteModule& module() const noexcept { return *module_; }
  const SubmoduleLattice& lattice() const noexcept { return lattice_; }
  std::size_t lattice_cap() const noexcept { return lattice_cap_; }
  std::vector<Index> proper() const;

  /// Lattice predicates; false for the whole module.
  bool holds(Index n, SubPredicate p);
  bool has(Index n, SubmoduleProperty p);
  Index radical(Index n);
  const Ideal& colon(Index n);

  bool module_has(ModuleProperty p);

  /// M/K and its lattice.
  const Quotient& quotient(Index k);
  const SubmoduleLattice& quotient_lattice(Index k);
  const Localization& localization(std::int64_t p);
  const SubmoduleLattice& localization_lattice(std::int64_t p);
  /// R as a module over itself (finite rings only).
  const SubmoduleLattice& ring_lattice();
  /// Lattice of the b-th factor module (product rings only).
  const SubmoduleLattice& factor_lattice(std::size_t b);

 private:
  ModulePtr module_;
  std::size_t lattice_cap_;
  SubmoduleLattice lattice_;
  std::map<std::pair<int, Index>, bool> flags_;
  std::map<Index, Index> radicals_;
  std::map<Index, Ideal> colons_;
  std::map<ModuleProperty, bool> module_flags_;
  std::map<Index, std::unique_ptr<std::pair<Quotient, SubmoduleLattice>>> quotients_;
  std::map<std::int64_t, std::unique_ptr<std::pair<Localization, SubmoduleLattice>>> localizations_;
  std::unique_ptr<SubmoduleLattice> ring_lattice_;
  std::map<std::size_t, std::unique_ptr<SubmoduleLattice>> factor_lattices_;
};

/// One candidate configuration for a theorem: labeled submodules of the
/// instance plus integer parameters.
struct Witness {
  std::vector<std::pair<std::string, Index>> subs;
  std::vector<std::pair<std::string, std::int64_t>> params;

  Index sub(std::string_view label) const;
  std::int64_t param(std::string_view label) const;
};

/// Raised from a candidate enumerator to abandon an instance (e.g. too many
/// chains); the result is recorded as skipped.
struct SkipInstance {
  std::string reason;
};

struct Theorem {
  std::string id;
  std::string statement;
  /// Reason the instance fails the standing hypotheses, if it does.
  std::function<std::optional<std::string>(InstanceContext&)> hypothesis_failure;
  /// Visits every candidate meeting the per-candidate hypotheses; the
  /// visitor returns false to stop early.
  std::function<void(InstanceContext&, const std::function<bool(const Witness&)>&)> candidates;
  /// The violated clause for this candidate, or nullopt if the conclusion
  /// holds. Must recheck any premise so replays are self-contained.
  std::function<std::optional<std::string>(InstanceContext&, const Witness&)> violated;
};

const std::vector<Theorem>& theorem_registry();
/// UsageError for an unknown id.
const Theorem& find_theorem(std::string_view id);

enum class Outcome { Pass, Fail, HypothesisNotMet, Skipped };
std::string_view to_string(Outcome o);

struct Counterexample {
  std::string claim;
  std::vector<std::pair<std::string, std::vector<Element>>> submodules;
  std::vector<std::pair<std::string, std::int64_t>> params;
};

struct TheoremCheckResult {
  std::string theorem_id;
  std::string module;
  std::string ring;
  Outcome verdict = Outcome::Pass;
  std::size_t candidates = 0;
  std::string note;
  std::optional<Counterexample> counterexample;
  std::chrono::nanoseconds elapsed{0};
};

/// Runs the theorem on one instance context.
TheoremCheckResult check(const Theorem& theorem, InstanceContext& ctx);

/// Runs over the given instances; lattice-cap overflows become skipped
/// results. `threads` > 1 evaluates instances concurrently; the result order
/// is always instance order.
std::vector<TheoremCheckResult> verify(const Theorem& theorem, const std::vector<ModulePtr>& instances,
                                       std::size_t lattice_cap = 512, unsigned threads = 1);
std::vector<TheoremCheckResult> verify(std::string_view theorem_id, const InstanceConfig& cfg, unsigned threads = 1);

struct OutcomeCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t hypothesis_not_met = 0;
  std::size_t skipped = 0;

  void add(Outcome o);
  std::size_t total() const { return pass + fail + hypothesis_not_met + skipped; }
};

struct VerifySummary {
  std::vector<std::string> theorem_ids;
  std::map<std::string, OutcomeCounts> per_theorem;
  OutcomeCounts totals;
  /// Grouped by theorem (registry order), then instance order.
  std::vector<TheoremCheckResult> results;
  std::size_t instance_count = 0;
};

VerifySummary summarize(std::vector<std::string> ids, std::vector<TheoremCheckResult> results,
                        std::size_t instance_count);
/// Every registered theorem over one shared context per instance.
VerifySummary verify_all(const InstanceConfig& cfg, unsigned threads = 1);
VerifySummary verify_theorems(const std::vector<const Theorem*>& theorems, const std::vector<ModulePtr>& instances,
                              std::size_t lattice_cap = 512, unsigned threads = 1);

/// Rebuilds the instance from its descriptors and the witness from its
/// generators, then re-runs the violated check. True iff the violation
/// reproduces.
bool replay(const Theorem& theorem, const TheoremCheckResult& result, const Limits& limits = {});

}  // namespace sublat
