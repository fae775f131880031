#include "sublat/lattice.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "sublat/classification.hpp"
#include "sublat/errors.hpp"

namespace sublat {

SubmoduleLattice SubmoduleLattice::enumerate(const ModulePtr& module, std::optional<std::size_t> cap) {
  const std::size_t bound = cap.value_or(module->limits().lattice_cap);
  auto overflow = [&] {
    return ResourceError("submodule lattice of " + module->descriptor() + " exceeds the lattice cap of " +
                         std::to_string(bound) + " submodules");
  };

  std::vector<Submodule> found;
  std::unordered_map<MemberSet, std::size_t> seen;
  auto insert = [&](Submodule s) -> bool {
    if (seen.contains(s.members())) return false;
    if (found.size() >= bound) throw overflow();
    seen.emplace(s.members(), found.size());
    found.push_back(std::move(s));
    return true;
  };

  // Cyclic submodules first; every submodule is a join of these.
  std::vector<std::size_t> cyclic;
  for (ElemId x = 0; x < module->order(); ++x) {
    const ElemId g[] = {x};
    Submodule s = span(module, g);
    if (insert(std::move(s))) cyclic.push_back(found.size() - 1);
  }
  std::deque<std::size_t> frontier(cyclic.begin(), cyclic.end());
  while (!frontier.empty()) {
    const std::size_t f = frontier.front();
    frontier.pop_front();
    for (auto c : cyclic) {
      if (found[f].contains(found[c])) continue;
      Submodule joined = extend(found[f], found[c].gens());
      if (insert(std::move(joined))) frontier.push_back(found.size() - 1);
    }
  }

  // Deterministic order: by order, then by sorted member list.
  std::vector<std::vector<ElemId>> keys;
  for (const auto& s : found) keys.push_back(s.member_ids());
  std::vector<std::size_t> perm(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (found[a].order() != found[b].order()) return found[a].order() < found[b].order();
    return keys[a] < keys[b];
  });
  std::vector<std::size_t> new_pos(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) new_pos[perm[i]] = i;

  SubmoduleLattice lat;
  lat.module_ = module;
  lat.subs_.reserve(found.size());
  for (auto i : perm) lat.subs_.push_back(found[i]);
  for (auto c : cyclic) lat.cyclic_.push_back(static_cast<Index>(new_pos[c]));
  std::sort(lat.cyclic_.begin(), lat.cyclic_.end());
  const std::size_t n = lat.subs_.size();
  for (std::size_t i = 0; i < n; ++i) lat.lookup_.emplace(lat.subs_[i].members(), static_cast<Index>(i));

  lat.below_.assign(n, IndexSet(n));
  lat.above_.assign(n, IndexSet(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      if (lat.subs_[b].contains(lat.subs_[a])) {
        lat.below_[b].set(a);
        lat.above_[a].set(b);
      }

  // Submodules grouped by order, for joins: |A + B| = |A||B| / |A ∩ B|.
  std::map<std::uint32_t, std::vector<Index>> by_order;
  for (std::size_t i = 0; i < n; ++i) by_order[lat.subs_[i].order()].push_back(static_cast<Index>(i));

  lat.meet_.assign(n * n, 0);
  lat.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const auto it = lat.lookup_.find(lat.subs_[a].members() & lat.subs_[b].members());
      if (it == lat.lookup_.end()) throw InternalError("lattice not closed under intersection");
      const Index m = it->second;
      const std::uint64_t target =
          std::uint64_t{lat.subs_[a].order()} * lat.subs_[b].order() / lat.subs_[m].order();
      std::optional<Index> j;
      for (auto cand : by_order[static_cast<std::uint32_t>(target)])
        if (lat.below_[cand].test(a) && lat.below_[cand].test(b)) {
          j = cand;
          break;
        }
      if (!j) throw InternalError("lattice not closed under sum");
      lat.meet_[a * n + b] = lat.meet_[b * n + a] = m;
      lat.join_[a * n + b] = lat.join_[b * n + a] = *j;
    }
  }

  const Index whole = lat.whole_index();
  for (Index i = 0; i < whole; ++i) {
    if (lat.above_[i].count() == 2) lat.maximal_.push_back(i);
    if (is_prime_submodule(lat.subs_[i])) lat.primes_.push_back(i);
  }
  return lat;
}

std::optional<SubmoduleLattice::Index> SubmoduleLattice::find(const MemberSet& members) const {
  const auto it = lookup_.find(members);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

SubmoduleLattice::Index SubmoduleLattice::index_of(const Submodule& n) const {
  if (!same_module(n.module(), *module_)) throw DomainError("submodule belongs to another module");
  const auto i = find(n.members());
  if (!i) throw InternalError("submodule missing from its lattice");
  return *i;
}

std::vector<Submodule> maximal_submodules(const SubmoduleLattice& lattice) {
  std::vector<Submodule> out;
  for (auto i : lattice.maximal_indices()) out.push_back(lattice[i]);
  return out;
}

std::vector<SubmoduleLattice::Index> irreducible_decomposition(const SubmoduleLattice& lattice,
                                                               SubmoduleLattice::Index n) {
  using Index = SubmoduleLattice::Index;
  if (n == lattice.whole_index()) throw DomainError("irreducible_decomposition: N must be proper");
  if (classify(lattice, n, SubPredicate::Irreducible).holds) return {n};

  std::vector<Index> cands;
  const auto& up = lattice.above(n);
  for (auto i = up.find_next(n); i != IndexSet::npos; i = up.find_next(i))
    if (i != lattice.whole_index() && classify(lattice, static_cast<Index>(i), SubPredicate::Irreducible).holds)
      cands.push_back(static_cast<Index>(i));

  // Subsets by increasing size, in lattice order; adding a member that does
  // not shrink the running meet can never be part of an irredundant list.
  std::vector<Index> chosen;
  std::function<bool(std::size_t, Index, std::size_t)> search = [&](std::size_t from, Index acc,
                                                                    std::size_t left) -> bool {
    if (left == 0) return acc == n;
    for (std::size_t k = from; k + left <= cands.size(); ++k) {
      const Index next = chosen.empty() ? cands[k] : lattice.meet(acc, cands[k]);
      if (!chosen.empty() && next == acc) continue;
      if (left > 1 && next == n) continue;
      chosen.push_back(cands[k]);
      if (search(k + 1, next, left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t len = 2; len <= cands.size(); ++len) {
    chosen.clear();
    if (search(0, lattice.whole_index(), len)) return chosen;
  }
  throw InternalError("no irreducible decomposition found");
}

}  // namespace sublat
