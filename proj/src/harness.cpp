#include "sublat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "sublat/arith.hpp"
#include "sublat/errors.hpp"

namespace sublat {

namespace {

// Za x Zb shapes of order n: the cyclic group first, then b | a, b >= 2.
std::vector<std::string> shapes(std::int64_t n, bool noncyclic) {
  std::vector<std::string> out{"Z" + std::to_string(n)};
  if (!noncyclic) return out;
  for (std::int64_t b = 2; b * b <= n; ++b)
    if (n % (b * b) == 0) out.push_back("Z" + std::to_string(n / b) + "xZ" + std::to_string(b));
  return out;
}

}  // namespace

std::vector<ModulePtr> generate_instances(const InstanceConfig& cfg) {
  if (cfg.max_order < 1 || cfg.max_lattice < 1) throw DomainError("instance bounds must be positive");
  if (cfg.max_order > static_cast<std::int64_t>(cfg.limits.order_cap))
    throw ResourceError("max_order " + std::to_string(cfg.max_order) + " exceeds the order cap of " +
                        std::to_string(cfg.limits.order_cap));

  std::vector<ModulePtr> out;
  std::set<std::string> seen;
  auto add = [&](const std::string& module, const std::string& ring) {
    auto m = parse_module(module, ring, cfg.limits);
    if (seen.insert(m->descriptor() + " over " + m->ring().descriptor()).second) out.push_back(std::move(m));
  };

  if (cfg.integer_modules)
    for (std::int64_t n = 1; n <= cfg.max_order; ++n)
      for (const auto& s : shapes(n, cfg.include_noncyclic)) add(s, "Z");

  if (cfg.residue_modules) {
    for (std::int64_t n = 2; n <= cfg.max_order; ++n)
      for (auto d : divisors(n))
        if (d >= 2) add("Z" + std::to_string(d), "Z" + std::to_string(n));
    if (cfg.include_noncyclic)
      for (std::int64_t n = 4; n <= cfg.max_order; ++n)
        for (std::int64_t b = 2; b * b <= n; ++b)
          if (n % (b * b) == 0)
            add("Z" + std::to_string(n / b) + "xZ" + std::to_string(b), "Z" + std::to_string(n / b));
  }

  if (cfg.product_modules) {
    const std::int64_t factor_max = cfg.max_factor_order.value_or(cfg.max_order / 2);
    std::vector<std::pair<std::string, std::int64_t>> factors;
    for (std::int64_t n = 2; n <= factor_max; ++n)
      for (const auto& s : shapes(n, cfg.include_noncyclic)) factors.emplace_back(s, n);
    const std::size_t f = factors.size();
    for (std::size_t i = 0; i < f; ++i)
      for (std::size_t j = i; j < f; ++j)
        if (factors[i].second * factors[j].second <= cfg.max_order)
          add(factors[i].first + " | " + factors[j].first, "");
    for (std::size_t i = 0; i < f; ++i)
      for (std::size_t j = i; j < f; ++j)
        for (std::size_t k = j; k < f; ++k)
          if (factors[i].second * factors[j].second * factors[k].second <= cfg.max_order)
            add(factors[i].first + " | " + factors[j].first + " | " + factors[k].first, "");
  }

  if (cfg.sample_count > 0 && cfg.max_order >= 2) {
    std::mt19937_64 rng(cfg.seed);
    auto draw = [&](std::int64_t lo, std::int64_t hi) {
      return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    for (std::size_t s = 0; s < cfg.sample_count; ++s) {
      std::vector<std::int64_t> orders{draw(2, cfg.max_order)};
      std::int64_t total = orders[0];
      for (int extra = 0; extra < 2; ++extra) {
        std::vector<std::int64_t> options;
        for (auto d : divisors(orders.back()))
          if (d >= 2 && total * d <= cfg.max_order) options.push_back(d);
        if (options.empty() || draw(0, 1) == 0) break;
        orders.push_back(options[static_cast<std::size_t>(draw(0, static_cast<std::int64_t>(options.size()) - 1))]);
        total *= orders.back();
      }
      std::string text;
      for (auto o : orders) text += (text.empty() ? "Z" : "xZ") + std::to_string(o);
      add(text, "Z");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

InstanceContext::InstanceContext(ModulePtr module, std::size_t lattice_cap)
    : module_(std::move(module)),
      lattice_cap_(lattice_cap),
      lattice_(SubmoduleLattice::enumerate(module_, lattice_cap)) {}

std::vector<Index> InstanceContext::proper() const {
  std::vector<Index> out;
  for (Index i = 0; i < lattice_.whole_index(); ++i) out.push_back(i);
  return out;
}

bool InstanceContext::holds(Index n, SubPredicate p) {
  if (n == lattice_.whole_index()) return false;
  const auto key = std::make_pair(static_cast<int>(p), n);
  if (auto it = flags_.find(key); it != flags_.end()) return it->second;
  const bool v = classify(lattice_, n, p).holds;
  flags_.emplace(key, v);
  return v;
}

bool InstanceContext::has(Index n, SubmoduleProperty p) {
  const bool proper_only = p == SubmoduleProperty::Prime || p == SubmoduleProperty::Primary ||
                           p == SubmoduleProperty::TwoAbsorbing || p == SubmoduleProperty::TwoAbsorbingPrimary;
  if (proper_only && n == lattice_.whole_index()) return false;
  const auto key = std::make_pair(100 + static_cast<int>(p), n);
  if (auto it = flags_.find(key); it != flags_.end()) return it->second;
  const bool v = submodule_predicate(lattice_[n], lattice_, p);
  flags_.emplace(key, v);
  return v;
}

Index InstanceContext::radical(Index n) {
  if (auto it = radicals_.find(n); it != radicals_.end()) return it->second;
  return radicals_.emplace(n, radical_index(lattice_, n)).first->second;
}

const Ideal& InstanceContext::colon(Index n) {
  if (auto it = colons_.find(n); it != colons_.end()) return it->second;
  return colons_.emplace(n, colon_into(lattice_[n])).first->second;
}

bool InstanceContext::module_has(ModuleProperty p) {
  if (auto it = module_flags_.find(p); it != module_flags_.end()) return it->second;
  return module_flags_.emplace(p, module_predicate(lattice_, p)).first->second;
}

const Quotient& InstanceContext::quotient(Index k) {
  auto& slot = quotients_[k];
  if (!slot) {
    Quotient q = sublat::quotient(lattice_[k]);
    auto lat = SubmoduleLattice::enumerate(q.module, lattice_cap_);
    slot = std::make_unique<std::pair<Quotient, SubmoduleLattice>>(std::move(q), std::move(lat));
  }
  return slot->first;
}

const SubmoduleLattice& InstanceContext::quotient_lattice(Index k) {
  quotient(k);
  return quotients_[k]->second;
}

const Localization& InstanceContext::localization(std::int64_t p) {
  auto& slot = localizations_[p];
  if (!slot) {
    Localization loc = localize(module_, p);
    auto lat = SubmoduleLattice::enumerate(loc.module, lattice_cap_);
    slot = std::make_unique<std::pair<Localization, SubmoduleLattice>>(std::move(loc), std::move(lat));
  }
  return slot->first;
}

const SubmoduleLattice& InstanceContext::localization_lattice(std::int64_t p) {
  localization(p);
  return localizations_[p]->second;
}

const SubmoduleLattice& InstanceContext::ring_lattice() {
  if (!ring_lattice_) {
    const Ring& r = module_->ring();
    if (!r.is_finite()) throw DomainError("the ring has infinitely many ideals");
    std::vector<std::vector<std::int64_t>> blocks;
    for (auto m : r.moduli()) blocks.push_back({m});
    auto rr = FiniteModule::build(r, std::move(blocks), module_->limits());
    ring_lattice_ = std::make_unique<SubmoduleLattice>(SubmoduleLattice::enumerate(rr, lattice_cap_));
  }
  return *ring_lattice_;
}

const SubmoduleLattice& InstanceContext::factor_lattice(std::size_t b) {
  auto& slot = factor_lattices_[b];
  if (!slot)
    slot = std::make_unique<SubmoduleLattice>(SubmoduleLattice::enumerate(module_->factor_module(b), lattice_cap_));
  return *slot;
}

Index Witness::sub(std::string_view label) const {
  for (const auto& [l, i] : subs)
    if (l == label) return i;
  throw InternalError("witness has no submodule labeled " + std::string(label));
}

std::int64_t Witness::param(std::string_view label) const {
  for (const auto& [l, v] : params)
    if (l == label) return v;
  throw InternalError("witness has no parameter " + std::string(label));
}

// ---------------------------------------------------------------------------
// Theorem encodings.

namespace {

using Visit = std::function<bool(const Witness&)>;
using Why = std::optional<std::string>;

constexpr std::size_t kChainCap = 200'000;

std::string yn(bool b) { return b ? "true" : "false"; }

Why nonzero(InstanceContext& ctx) {
  if (ctx.module().order() == 1) return "zero module";
  return std::nullopt;
}

Why multiplication(InstanceContext& ctx) {
  if (auto w = nonzero(ctx)) return w;
  if (!ctx.module_has(ModuleProperty::Multiplication)) return "not a multiplication module";
  return std::nullopt;
}

Why distributive(InstanceContext& ctx) {
  if (auto w = nonzero(ctx)) return w;
  if (!ctx.module_has(ModuleProperty::Distributive)) return "not a distributive module";
  return std::nullopt;
}

bool s2i(InstanceContext& ctx, Index n) { return ctx.holds(n, SubPredicate::StronglyTwoIrreducible); }
bool two_irr(InstanceContext& ctx, Index n) { return ctx.holds(n, SubPredicate::TwoIrreducible); }
bool s_irr(InstanceContext& ctx, Index n) { return ctx.holds(n, SubPredicate::StronglyIrreducible); }

// The offending triple for a submodule that is not strongly 2-irreducible.
std::string s2i_witness(const SubmoduleLattice& lat, Index n) {
  const auto v = classify(lat, n, SubPredicate::StronglyTwoIrreducible);
  std::string out;
  for (std::size_t i = 0; i < v.witness.size(); ++i)
    out += (i ? ", " : "") + std::string("H") + std::to_string(i + 1) + "=" + submodule_to_string(lat[v.witness[i]]);
  return out;
}

bool s2i_in(const SubmoduleLattice& lat, const Submodule& n) {
  const Index i = lat.index_of(n);
  if (i == lat.whole_index()) return false;
  return classify(lat, i, SubPredicate::StronglyTwoIrreducible).holds;
}

void each_proper(InstanceContext& ctx, const Visit& visit, auto&& keep) {
  for (auto n : ctx.proper())
    if (keep(n) && !visit({{{"N", n}}, {}})) return;
}

Why equal_flags(std::vector<std::pair<std::string, bool>> flags) {
  for (const auto& f : flags)
    if (f.second != flags.front().second) {
      std::string s;
      for (const auto& [name, v] : flags) s += (s.empty() ? "" : ", ") + name + "=" + yn(v);
      return "equivalence broken: " + s;
    }
  return std::nullopt;
}

bool product_trichotomy(InstanceContext& ctx, Index n) {
  const auto parts = decompose_submodule(ctx.lattice()[n]);
  std::vector<std::size_t> moved;
  for (std::size_t b = 0; b < parts.size(); ++b)
    if (parts[b].is_proper()) moved.push_back(b);
  auto in_factor = [&](std::size_t b, SubPredicate p) {
    const auto& fl = ctx.factor_lattice(b);
    return classify(fl, fl.index_of(parts[b]), p).holds;
  };
  if (moved.size() == 1) return in_factor(moved[0], SubPredicate::StronglyTwoIrreducible);
  if (moved.size() == 2)
    return in_factor(moved[0], SubPredicate::StronglyIrreducible) &&
           in_factor(moved[1], SubPredicate::StronglyIrreducible);
  return false;
}

Why product_violation(InstanceContext& ctx, const Witness& w) {
  const Index n = w.sub("N");
  const bool lhs = s2i(ctx, n);
  const bool rhs = product_trichotomy(ctx, n);
  if (lhs == rhs) return std::nullopt;
  return "strongly_two_irreducible=" + yn(lhs) + " but factorwise condition=" + yn(rhs);
}

Theorem make(std::string id, std::string statement,
             std::function<Why(InstanceContext&)> hyp,
             std::function<void(InstanceContext&, const Visit&)> cands,
             std::function<Why(InstanceContext&, const Witness&)> violated) {
  return Theorem{std::move(id), std::move(statement), std::move(hyp), std::move(cands), std::move(violated)};
}

std::vector<Theorem> build_registry() {
  std::vector<Theorem> t;

  t.push_back(make(
      "T-DEC", "In a Noetherian module a 2-irreducible submodule is irreducible or meets two irreducibles.",
      nonzero,
      [](InstanceContext& ctx, const Visit& v) { each_proper(ctx, v, [&](Index n) { return two_irr(ctx, n); }); },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const Index n = w.sub("N");
        if (!two_irr(ctx, n)) return std::nullopt;
        const auto& lat = ctx.lattice();
        const auto d = irreducible_decomposition(lat, n);
        if (d.size() > 2) return "shortest irreducible decomposition has length " + std::to_string(d.size());
        Index acc = lat.whole_index();
        for (auto i : d) acc = lat.meet(acc, i);
        if (acc != n) return std::string("irreducible decomposition does not meet in N");
        return std::nullopt;
      }));

  t.push_back(make(
      "T-2AP", "In a Noetherian multiplication module every 2-irreducible submodule is 2-absorbing primary.",
      multiplication,
      [](InstanceContext& ctx, const Visit& v) { each_proper(ctx, v, [&](Index n) { return two_irr(ctx, n); }); },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const Index n = w.sub("N");
        if (two_irr(ctx, n) && !ctx.has(n, SubmoduleProperty::TwoAbsorbingPrimary))
          return std::string("2-irreducible but not 2-absorbing primary");
        return std::nullopt;
      }));

  t.push_back(make(
      "T-DIST", "In a distributive module the strongly 2-irreducible and 2-irreducible submodules coincide.",
      distributive, [](InstanceContext& ctx, const Visit& v) { each_proper(ctx, v, [](Index) { return true; }); },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const Index n = w.sub("N");
        return equal_flags({{"strongly_two_irreducible", s2i(ctx, n)}, {"two_irreducible", two_irr(ctx, n)}});
      }));

  t.push_back(make(
      "T-ELEM", "Strong 2-irreducibility is decided by the element-wise (Rx+Ry) criterion.", nonzero,
      [](InstanceContext& ctx, const Visit& v) { each_proper(ctx, v, [](Index) { return true; }); },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const Index n = w.sub("N");
        return equal_flags({{"lattice", s2i(ctx, n)}, {"elements", classify_via_elements(ctx.lattice()[n])}});
      }));

  t.push_back(make(
      "T-BASIC-a", "A strongly 2-irreducible submodule is 2-irreducible.", nonzero,
      [](InstanceContext& ctx, const Visit& v) { each_proper(ctx, v, [&](Index n) { return s2i(ctx, n); }); },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const Index n = w.sub("N");
        if (s2i(ctx, n) && !two_irr(ctx, n)) return std::string("strongly 2-irreducible but not 2-irreducible");
        return std::nullopt;
      }));

  t.push_back(make(
      "T-BASIC-b",
      "A strongly 2-irreducible N stays so inside any T containing it, and N/K is so in M/K for K inside N.",
      nonzero,
      [](InstanceContext& ctx, const Visit& v) {
        const auto& lat = ctx.lattice();
        for (auto n : ctx.proper()) {
          if (!s2i(ctx, n)) continue;
          const auto& up = lat.above(n);
          for (auto t = up.find_next(n); t != IndexSet::npos; t = up.find_next(t))
            if (!v({{{"N", n}, {"T", static_cast<Index>(t)}}, {{"shape", 0}}})) return;
          const auto& down = lat.below(n);
          for (auto k = down.find_first(); k != IndexSet::npos; k = down.find_next(k))
            if (!v({{{"N", n}, {"K", static_cast<Index>(k)}}, {{"shape", 1}}})) return;
        }
      },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const Index n = w.sub("N");
        const auto& lat = ctx.lattice();
        if (!s2i(ctx, n)) return std::nullopt;
        if (w.param("shape") == 0) {
          const Index t = w.sub("T");
          if (t == n || !lat.leq(n, t)) return std::nullopt;
          if (!classify(lat, n, SubPredicate::StronglyTwoIrreducible, {.ambient = t}).holds)
            return std::string("not strongly 2-irreducible as a submodule of T");
          return std::nullopt;
        }
        const Index k = w.sub("K");
        if (!lat.leq(k, n)) return std::nullopt;
        const auto& q = ctx.quotient(k);
        if (!s2i_in(ctx.quotient_lattice(k), q.projection.image(lat[n])))
          return std::string("N/K is not strongly 2-irreducible in M/K");
        return std::nullopt;
      }));

  t.push_back(make(
      "T-BASIC-c", "If Rx, Ry, Rz meeting inside N forces a pairwise meet into N, N is strongly 2-irreducible.",
      nonzero,
      [](InstanceContext& ctx, const Visit& v) {
        each_proper(ctx, v, [&](Index n) { return cyclic_triple_condition(ctx.lattice()[n]); });
      },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const Index n = w.sub("N");
        if (cyclic_triple_condition(ctx.lattice()[n]) && !s2i(ctx, n))
          return "cyclic triple condition holds but N is not strongly 2-irreducible (" + s2i_witness(ctx.lattice(), n) +
                 ")";
        return std::nullopt;
      }));

  t.push_back(make(
      "T-BASIC-d", "For a waist submodule, strongly 2-irreducible and 2-irreducible coincide.", nonzero,
      [](InstanceContext& ctx, const Visit& v) {
        each_proper(ctx, v, [&](Index n) { return ctx.has(n, SubmoduleProperty::Waist); });
      },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const Index n = w.sub("N");
        if (!ctx.has(n, SubmoduleProperty::Waist)) return std::nullopt;
        return equal_flags({{"strongly_two_irreducible", s2i(ctx, n)}, {"two_irreducible", two_irr(ctx, n)}});
      }));

  auto modular_at = [](InstanceContext& ctx, Index n) {
    const auto& lat = ctx.lattice();
    const auto size = static_cast<Index>(lat.size());
    for (Index a = 0; a < size; ++a)
      for (Index b = a; b < size; ++b)
        if (lat.leq(lat.meet(a, b), n) &&
            lat.meet(lat.join(n, a), lat.join(n, b)) != lat.join(n, lat.meet(a, b)))
          return false;
    return true;
  };
  t.push_back(make(
      "T-BASIC-e",
      "If (N+T) meets (N+K) in N+(T meet K) whenever T meet K lies in N, strongly 2-irreducible and "
      "2-irreducible coincide for N.",
      nonzero,
      [modular_at](InstanceContext& ctx, const Visit& v) {
        each_proper(ctx, v, [&](Index n) { return modular_at(ctx, n); });
      },
      [modular_at](InstanceContext& ctx, const Witness& w) -> Why {
        const Index n = w.sub("N");
        if (!modular_at(ctx, n)) return std::nullopt;
        return equal_flags({{"strongly_two_irreducible", s2i(ctx, n)}, {"two_irreducible", two_irr(ctx, n)}});
      }));

  t.push_back(make(
      "T-COMULT",
      "For a strong comultiplication module: all nonzero proper ideals strongly sum 2-irreducible iff all "
      "nonzero proper submodules strongly 2-irreducible; per submodule via Ann(N).",
      [](InstanceContext& ctx) -> Why {
        if (auto w = nonzero(ctx)) return w;
        if (!ctx.module().ring().is_finite()) return "ring has infinitely many ideals";
        if (!ctx.module_has(ModuleProperty::StrongComultiplication)) return "not a strong comultiplication module";
        return std::nullopt;
      },
      [](InstanceContext& ctx, const Visit& v) {
        if (!v({{}, {{"kind", 0}}})) return;
        for (auto n : ctx.proper())
          if (n != 0 && !v({{{"N", n}}, {{"kind", 1}}})) return;
      },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const auto& rl = ctx.ring_lattice();
        if (w.param("kind") == 0) {
          bool ideals = true;
          for (Index i = 1; i + 1 < rl.size() && ideals; ++i)
            ideals = classify(rl, i, SubPredicate::StronglySumTwoIrreducible).holds;
          bool subs = true;
          for (auto n : ctx.proper())
            if (n != 0 && !s2i(ctx, n)) subs = false;
          return equal_flags({{"ideals_strongly_sum_two_irreducible", ideals},
                              {"submodules_strongly_two_irreducible", subs}});
        }
        const Index n = w.sub("N");
        if (n == 0 || n == ctx.lattice().whole_index()) return std::nullopt;
        const Submodule ann = ideal_apply(annihilator(ctx.lattice()[n]), whole_module(rl.module_ptr()),
                                          IdealAction::Product);
        if (classify(rl, rl.index_of(ann), SubPredicate::StronglySumTwoIrreducible).holds && !s2i(ctx, n))
          return std::string("Ann(N) is strongly sum 2-irreducible but N is not strongly 2-irreducible");
        return std::nullopt;
      }));

  t.push_back(make(
      "T-COLON",
      "In a finitely generated multiplication module N is strongly 2-irreducible iff (N:M) is a strongly "
      "2-irreducible ideal.",
      multiplication, [](InstanceContext& ctx, const Visit& v) { each_proper(ctx, v, [](Index) { return true; }); },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const Index n = w.sub("N");
        return equal_flags({{"submodule", s2i(ctx, n)},
                            {"colon_ideal", classify_ideal(ctx.colon(n), IdealPredicate::StronglyTwoIrreducible)}});
      }));

  t.push_back(make(
      "T-MEET", "The intersection of two strongly irreducible submodules is strongly 2-irreducible.", nonzero,
      [](InstanceContext& ctx, const Visit& v) {
        std::vector<Index> irr;
        for (auto n : ctx.proper())
          if (s_irr(ctx, n)) irr.push_back(n);
        for (std::size_t i = 0; i < irr.size(); ++i)
          for (std::size_t j = i; j < irr.size(); ++j)
            if (!v({{{"N1", irr[i]}, {"N2", irr[j]}}, {}})) return;
      },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const Index a = w.sub("N1"), b = w.sub("N2");
        if (s_irr(ctx, a) && s_irr(ctx, b) && !s2i(ctx, ctx.lattice().meet(a, b)))
          return std::string("N1 meet N2 is not strongly 2-irreducible");
        return std::nullopt;
      }));

  auto comaximal_primes = [](InstanceContext& ctx, Index a, Index b, Index c) {
    const auto& lat = ctx.lattice();
    const Index top = lat.whole_index();
    for (auto i : {a, b, c})
      if (!ctx.has(i, SubmoduleProperty::Prime)) return false;
    return a != b && b != c && a != c && lat.join(a, b) == top && lat.join(a, c) == top && lat.join(b, c) == top;
  };
  t.push_back(make(
      "T-3PRIME",
      "In a multiplication module three pairwise comaximal primes never meet in a strongly 2-irreducible "
      "submodule.",
      multiplication,
      [comaximal_primes](InstanceContext& ctx, const Visit& v) {
        const auto pr = ctx.lattice().prime_indices();
        for (std::size_t i = 0; i < pr.size(); ++i)
          for (std::size_t j = i + 1; j < pr.size(); ++j)
            for (std::size_t k = j + 1; k < pr.size(); ++k)
              if (comaximal_primes(ctx, pr[i], pr[j], pr[k]) &&
                  !v({{{"N1", pr[i]}, {"N2", pr[j]}, {"N3", pr[k]}}, {}}))
                return;
      },
      [comaximal_primes](InstanceContext& ctx, const Witness& w) -> Why {
        const Index a = w.sub("N1"), b = w.sub("N2"), c = w.sub("N3");
        if (!comaximal_primes(ctx, a, b, c)) return std::nullopt;
        const auto& lat = ctx.lattice();
        if (s2i(ctx, lat.meet(lat.meet(a, b), c)))
          return std::string("intersection of three pairwise comaximal primes is strongly 2-irreducible");
        return std::nullopt;
      }));

  t.push_back(make(
      "T-MAX2",
      "A multiplication module whose proper submodules are all strongly 2-irreducible has at most two "
      "maximal submodules.",
      [](InstanceContext& ctx) -> Why {
        if (auto w = multiplication(ctx)) return w;
        for (auto n : ctx.proper())
          if (!s2i(ctx, n)) return "some proper submodule is not strongly 2-irreducible";
        return std::nullopt;
      },
      [](InstanceContext&, const Visit& v) { v({}); },
      [](InstanceContext& ctx, const Witness&) -> Why {
        for (auto n : ctx.proper())
          if (!s2i(ctx, n)) return std::nullopt;
        const auto count = ctx.lattice().maximal_indices().size();
        if (count > 2) return std::to_string(count) + " maximal submodules";
        return std::nullopt;
      }));

  t.push_back(make(
      "T-RAD", "rad(IN) = rad(N) meet rad(IM) for every ideal I and submodule N.", nonzero,
      [](InstanceContext& ctx, const Visit& v) {
        const auto ideals = relevant_ideals(ctx.module());
        for (Index n = 0; n < ctx.lattice().size(); ++n)
          for (const auto& ideal : ideals) {
            Witness w{{{"N", n}}, {}};
            for (std::size_t f = 0; f < ideal.gens().size(); ++f)
              w.params.emplace_back("I" + std::to_string(f), ideal.gens()[f]);
            if (!v(w)) return;
          }
      },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const auto& lat = ctx.lattice();
        const Index n = w.sub("N");
        std::vector<std::int64_t> gens;
        for (const auto& p : w.params) gens.push_back(p.second);
        const Ideal ideal(ctx.module().ring(), gens);
        const Index in = lat.index_of(ideal_apply(ideal, lat[n], IdealAction::Product));
        const Index im = lat.index_of(ideal_apply(ideal, lat[lat.whole_index()], IdealAction::Product));
        const Index lhs = ctx.radical(in);
        const Index rhs = lat.meet(ctx.radical(n), ctx.radical(im));
        if (lhs != rhs)
          return "rad(IN) = " + submodule_to_string(lat[lhs]) + " but rad(N) meet rad(IM) = " +
                 submodule_to_string(lat[rhs]);
        return std::nullopt;
      }));

  t.push_back(make(
      "T-EQ4",
      "For a radical submodule of a finitely generated multiplication module: strongly 2-irreducible, "
      "2-absorbing, 2-absorbing primary, and prime-or-meet-of-two-primes are equivalent.",
      multiplication,
      [](InstanceContext& ctx, const Visit& v) {
        each_proper(ctx, v, [&](Index n) { return ctx.has(n, SubmoduleProperty::Radical); });
      },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const Index n = w.sub("N");
        if (!ctx.has(n, SubmoduleProperty::Radical)) return std::nullopt;
        const auto& lat = ctx.lattice();
        bool two_primes = ctx.has(n, SubmoduleProperty::Prime);
        const auto pr = lat.prime_indices();
        for (std::size_t i = 0; i < pr.size() && !two_primes; ++i)
          for (std::size_t j = i + 1; j < pr.size() && !two_primes; ++j)
            two_primes = lat.meet(pr[i], pr[j]) == n;
        return equal_flags({{"strongly_two_irreducible", s2i(ctx, n)},
                            {"two_absorbing", ctx.has(n, SubmoduleProperty::TwoAbsorbing)},
                            {"two_absorbing_primary", ctx.has(n, SubmoduleProperty::TwoAbsorbingPrimary)},
                            {"prime_or_meet_of_two_primes", two_primes}});
      }));

  t.push_back(make(
      "T-PURE3",
      "In a fully pure multiplication module strongly 2-irreducible, 2-absorbing and 2-irreducible are "
      "equivalent.",
      [](InstanceContext& ctx) -> Why {
        if (auto w = multiplication(ctx)) return w;
        if (!ctx.module_has(ModuleProperty::FullyPure)) return "not fully pure";
        return std::nullopt;
      },
      [](InstanceContext& ctx, const Visit& v) { each_proper(ctx, v, [](Index) { return true; }); },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const Index n = w.sub("N");
        return equal_flags({{"strongly_two_irreducible", s2i(ctx, n)},
                            {"two_absorbing", ctx.has(n, SubmoduleProperty::TwoAbsorbing)},
                            {"two_irreducible", two_irr(ctx, n)}});
      }));

  // Localization at S = Z \ pZ: kind 0 is the finitely generated
  // containment lemma, kind 1 the transport of prime strongly
  // 2-irreducible submodules.
  auto loc_image = [](InstanceContext& ctx, std::int64_t p, Index n) {
    return ctx.localization(p).map.image(ctx.lattice()[n]);
  };
  auto loc_prop_premise = [loc_image](InstanceContext& ctx, std::int64_t p, Index n) {
    if (n == ctx.lattice().whole_index() || !ctx.has(n, SubmoduleProperty::Prime) || !s2i(ctx, n)) return false;
    if (ctx.colon(n).gen() % p != 0) return false;
    return loc_image(ctx, p, n).is_proper();
  };
  t.push_back(make(
      "T-LOC",
      "S^-1 N inside S^-1 K gives sN inside K for some s in S; and a prime strongly 2-irreducible N "
      "with (N:M) disjoint from S localizes to a strongly 2-irreducible submodule.",
      [](InstanceContext& ctx) -> Why {
        if (auto w = nonzero(ctx)) return w;
        if (ctx.module().ring().kind() != Ring::Kind::Integer) return "ring is not Z";
        return std::nullopt;
      },
      [loc_image, loc_prop_premise](InstanceContext& ctx, const Visit& v) {
        const auto& lat = ctx.lattice();
        const auto size = static_cast<Index>(lat.size());
        for (auto p : distinct_primes(ctx.module().order())) {
          std::vector<Submodule> images;
          for (Index n = 0; n < size; ++n) images.push_back(loc_image(ctx, p, n));
          for (Index n = 0; n < size; ++n)
            for (Index k = 0; k < size; ++k)
              if (images[k].contains(images[n]) && !v({{{"N", n}, {"K", k}}, {{"p", p}, {"kind", 0}}})) return;
          for (Index n = 0; n + 1 < size; ++n)
            if (loc_prop_premise(ctx, p, n) && !v({{{"N", n}}, {{"p", p}, {"kind", 1}}})) return;
        }
      },
      [loc_image, loc_prop_premise](InstanceContext& ctx, const Witness& w) -> Why {
        const std::int64_t p = w.param("p");
        const Index n = w.sub("N");
        if (w.param("kind") == 0) {
          const Index k = w.sub("K");
          if (!loc_image(ctx, p, k).contains(loc_image(ctx, p, n))) return std::nullopt;
          if (!exists_unit_multiplier(ctx.lattice()[n], ctx.lattice()[k], p))
            return std::string("S^-1 N lies in S^-1 K but no s in S has sN inside K");
          return std::nullopt;
        }
        if (!loc_prop_premise(ctx, p, n)) return std::nullopt;
        if (!s2i_in(ctx.localization_lattice(p), loc_image(ctx, p, n)))
          return std::string("S^-1 N is not strongly 2-irreducible in S^-1 M");
        return std::nullopt;
      }));

  t.push_back(make(
      "T-CHAIN", "The intersection of a chain of strongly 2-irreducible submodules is strongly 2-irreducible.",
      nonzero,
      [](InstanceContext& ctx, const Visit& v) {
        const auto& lat = ctx.lattice();
        std::vector<Index> good;
        for (auto n : ctx.proper())
          if (s2i(ctx, n)) good.push_back(n);
        std::vector<Index> chain;
        std::size_t visited = 0;
        bool stop = false;
        std::function<void(std::size_t)> extend = [&](std::size_t from) {
          for (std::size_t i = from; i < good.size() && !stop; ++i) {
            if (!chain.empty() && !lat.leq(chain.back(), good[i])) continue;
            chain.push_back(good[i]);
            if (++visited > kChainCap)
              throw SkipInstance{"more than " + std::to_string(kChainCap) + " chains"};
            Witness w;
            for (std::size_t c = 0; c < chain.size(); ++c) w.subs.emplace_back("K" + std::to_string(c + 1), chain[c]);
            if (!v(w)) stop = true;
            extend(i + 1);
            chain.pop_back();
          }
        };
        extend(0);
      },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const auto& lat = ctx.lattice();
        Index acc = lat.whole_index();
        for (const auto& [label, i] : w.subs) {
          if (!s2i(ctx, i)) return std::nullopt;
          for (const auto& [l2, j] : w.subs)
            if (!lat.leq(i, j) && !lat.leq(j, i)) return std::nullopt;
          acc = lat.meet(acc, i);
        }
        if (!s2i(ctx, acc)) return std::string("intersection of the chain is not strongly 2-irreducible");
        return std::nullopt;
      }));

  t.push_back(make(
      "T-EPI",
      "Under M -> M/K, images of strongly 2-irreducible submodules containing K and preimages of strongly "
      "2-irreducible submodules are strongly 2-irreducible.",
      nonzero,
      [](InstanceContext& ctx, const Visit& v) {
        const auto& lat = ctx.lattice();
        for (auto k : ctx.proper()) {
          for (auto n : ctx.proper())
            if (lat.leq(k, n) && s2i(ctx, n) && !v({{{"K", k}, {"N", n}}, {{"direction", 0}}})) return;
          const auto& q = ctx.quotient(k);
          const auto& ql = ctx.quotient_lattice(k);
          for (Index i = 0; i < ql.whole_index(); ++i) {
            if (!classify(ql, i, SubPredicate::StronglyTwoIrreducible).holds) continue;
            const Index n = lat.index_of(q.projection.preimage(ql[i]));
            if (!v({{{"K", k}, {"N", n}}, {{"direction", 1}}})) return;
          }
        }
      },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const auto& lat = ctx.lattice();
        const Index k = w.sub("K"), n = w.sub("N");
        if (k == lat.whole_index() || !lat.leq(k, n)) return std::nullopt;
        const auto& q = ctx.quotient(k);
        const bool image_s2i = s2i_in(ctx.quotient_lattice(k), q.projection.image(lat[n]));
        if (w.param("direction") == 0) {
          if (s2i(ctx, n) && !image_s2i) return std::string("f(N) is not strongly 2-irreducible in M/K");
          return std::nullopt;
        }
        if (image_s2i && !s2i(ctx, n))
          return "preimage of a strongly 2-irreducible submodule is not strongly 2-irreducible (" +
                 s2i_witness(lat, n) + ")";
        return std::nullopt;
      }));

  t.push_back(make(
      "T-3EQ",
      "In a finitely generated multiplication distributive module, for nonzero proper N: N strongly "
      "2-irreducible, (N:M) strongly 2-irreducible, (N:M) 2-irreducible are equivalent.",
      [](InstanceContext& ctx) -> Why {
        if (auto w = multiplication(ctx)) return w;
        return distributive(ctx);
      },
      [](InstanceContext& ctx, const Visit& v) { each_proper(ctx, v, [](Index n) { return n != 0; }); },
      [](InstanceContext& ctx, const Witness& w) -> Why {
        const Index n = w.sub("N");
        if (n == 0) return std::nullopt;
        const Ideal& c = ctx.colon(n);
        return equal_flags({{"submodule", s2i(ctx, n)},
                            {"colon_strongly_two_irreducible", classify_ideal(c, IdealPredicate::StronglyTwoIrreducible)},
                            {"colon_two_irreducible", classify_ideal(c, IdealPredicate::TwoIrreducible)}});
      }));

  t.push_back(make(
      "T-PROD2",
      "Over R1 x R2, N1 x N2 is strongly 2-irreducible iff one side is whole and the other strongly "
      "2-irreducible, or both are strongly irreducible.",
      [](InstanceContext& ctx) -> Why {
        const Ring& r = ctx.module().ring();
        if (r.kind() != Ring::Kind::Product || r.factor_count() != 2) return "ring is not a product of two rings";
        return std::nullopt;
      },
      [](InstanceContext& ctx, const Visit& v) { each_proper(ctx, v, [](Index) { return true; }); },
      product_violation));

  t.push_back(make(
      "T-PRODN",
      "Over R1 x ... x Rn, N is strongly 2-irreducible iff it is whole off one factor where it is strongly "
      "2-irreducible, or whole off two factors where it is strongly irreducible.",
      [](InstanceContext& ctx) -> Why {
        if (ctx.module().ring().kind() != Ring::Kind::Product) return "ring is not a product ring";
        return std::nullopt;
      },
      [](InstanceContext& ctx, const Visit& v) { each_proper(ctx, v, [](Index) { return true; }); },
      product_violation));

  return t;
}

}  // namespace

const std::vector<Theorem>& theorem_registry() {
  static const std::vector<Theorem> registry = build_registry();
  return registry;
}

const Theorem& find_theorem(std::string_view id) {
  for (const auto& t : theorem_registry())
    if (t.id == id) return t;
  throw UsageError("unknown theorem id: " + std::string(id));
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::HypothesisNotMet: return "hypothesis_not_met";
    case Outcome::Skipped: return "skipped";
  }
  return "?";
}

void OutcomeCounts::add(Outcome o) {
  switch (o) {
    case Outcome::Pass: ++pass; break;
    case Outcome::Fail: ++fail; break;
    case Outcome::HypothesisNotMet: ++hypothesis_not_met; break;
    case Outcome::Skipped: ++skipped; break;
  }
}

// ---------------------------------------------------------------------------
// Runner.

namespace {

TheoremCheckResult blank(const Theorem& theorem, const FiniteModule& m) {
  TheoremCheckResult r;
  r.theorem_id = theorem.id;
  r.module = m.descriptor();
  r.ring = m.ring().descriptor();
  return r;
}

}  // namespace

TheoremCheckResult check(const Theorem& theorem, InstanceContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  TheoremCheckResult r = blank(theorem, ctx.module());
  try {
    if (auto why = theorem.hypothesis_failure(ctx)) {
      r.verdict = Outcome::HypothesisNotMet;
      r.note = *why;
    } else {
      std::optional<Witness> bad;
      std::string claim;
      theorem.candidates(ctx, [&](const Witness& w) {
        ++r.candidates;
        if (auto v = theorem.violated(ctx, w)) {
          bad = w;
          claim = *v;
          return false;
        }
        return true;
      });
      if (bad) {
        r.verdict = Outcome::Fail;
        Counterexample ce{claim, {}, bad->params};
        for (const auto& [label, i] : bad->subs) ce.submodules.emplace_back(label, ctx.lattice()[i].generators());
        r.counterexample = std::move(ce);
      } else if (r.candidates == 0) {
        r.verdict = Outcome::HypothesisNotMet;
        r.note = "no candidate meets the hypotheses";
      } else {
        r.verdict = Outcome::Pass;
      }
    }
  } catch (const SkipInstance& s) {
    r = blank(theorem, ctx.module());
    r.verdict = Outcome::Skipped;
    r.note = s.reason;
  } catch (const ResourceError& e) {
    r = blank(theorem, ctx.module());
    r.verdict = Outcome::Skipped;
    r.note = e.what();
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

namespace {

// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

VerifySummary summarize(std::vector<std::string> ids, std::vector<TheoremCheckResult> results,
                        std::size_t instance_count) {
  VerifySummary s;
  s.theorem_ids = std::move(ids);
  s.instance_count = instance_count;
  for (const auto& id : s.theorem_ids) s.per_theorem[id];
  for (const auto& r : results) {
    s.per_theorem[r.theorem_id].add(r.verdict);
    s.totals.add(r.verdict);
  }
  s.results = std::move(results);
  return s;
}

VerifySummary verify_theorems(const std::vector<const Theorem*>& theorems, const std::vector<ModulePtr>& instances,
                              std::size_t lattice_cap, unsigned threads) {
  std::vector<std::vector<TheoremCheckResult>> grid(instances.size());
  parallel_for(instances.size(), threads, [&](std::size_t i) {
    auto& row = grid[i];
    std::unique_ptr<InstanceContext> ctx;
    std::string overflow;
    try {
      ctx = std::make_unique<InstanceContext>(instances[i], lattice_cap);
    } catch (const ResourceError& e) {
      overflow = e.what();
    }
    for (const Theorem* t : theorems) {
      if (ctx) {
        row.push_back(check(*t, *ctx));
      } else {
        TheoremCheckResult r = blank(*t, *instances[i]);
        r.verdict = Outcome::Skipped;
        r.note = overflow;
        row.push_back(std::move(r));
      }
    }
  });
  std::vector<std::string> ids;
  std::vector<TheoremCheckResult> flat;
  for (std::size_t t = 0; t < theorems.size(); ++t) {
    ids.push_back(theorems[t]->id);
    for (auto& row : grid) flat.push_back(std::move(row[t]));
  }
  return summarize(std::move(ids), std::move(flat), instances.size());
}

std::vector<TheoremCheckResult> verify(const Theorem& theorem, const std::vector<ModulePtr>& instances,
                                       std::size_t lattice_cap, unsigned threads) {
  return verify_theorems({&theorem}, instances, lattice_cap, threads).results;
}

std::vector<TheoremCheckResult> verify(std::string_view theorem_id, const InstanceConfig& cfg, unsigned threads) {
  const Theorem& t = find_theorem(theorem_id);
  return verify(t, generate_instances(cfg), cfg.max_lattice, threads);
}

VerifySummary verify_all(const InstanceConfig& cfg, unsigned threads) {
  std::vector<const Theorem*> all;
  for (const auto& t : theorem_registry()) all.push_back(&t);
  return verify_theorems(all, generate_instances(cfg), cfg.max_lattice, threads);
}

bool replay(const Theorem& theorem, const TheoremCheckResult& result, const Limits& limits) {
  if (!result.counterexample) return false;
  auto m = parse_module(result.module, result.ring, limits);
  InstanceContext ctx(m, limits.lattice_cap);
  Witness w;
  for (const auto& [label, gens] : result.counterexample->submodules)
    w.subs.emplace_back(label, ctx.lattice().index_of(span(m, gens)));
  w.params = result.counterexample->params;
  return theorem.violated(ctx, w).has_value();
}

}  // namespace sublat
