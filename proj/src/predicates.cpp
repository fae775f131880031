#include "sublat/predicates.hpp"

#include <algorithm>

#include "sublat/errors.hpp"

namespace sublat {

SubmoduleLattice::Index radical_index(const SubmoduleLattice& lattice, SubmoduleLattice::Index n) {
  auto acc = lattice.whole_index();
  for (auto p : lattice.prime_indices())
    if (lattice.leq(n, p)) acc = lattice.meet(acc, p);
  return acc;
}

Submodule radical(const Submodule& n, const SubmoduleLattice& lattice) {
  return lattice[radical_index(lattice, lattice.index_of(n))];
}

std::string_view to_string(SubmoduleProperty p) {
  switch (p) {
    case SubmoduleProperty::Prime: return "prime";
    case SubmoduleProperty::Primary: return "primary";
    case SubmoduleProperty::TwoAbsorbing: return "two_absorbing";
    case SubmoduleProperty::TwoAbsorbingPrimary: return "two_absorbing_primary";
    case SubmoduleProperty::Radical: return "radical";
    case SubmoduleProperty::Pure: return "pure";
    case SubmoduleProperty::Waist: return "waist";
  }
  return "?";
}

std::string_view to_string(ModuleProperty p) {
  switch (p) {
    case ModuleProperty::Distributive: return "distributive";
    case ModuleProperty::Multiplication: return "multiplication";
    case ModuleProperty::Comultiplication: return "comultiplication";
    case ModuleProperty::Dac: return "dac";
    case ModuleProperty::StrongComultiplication: return "strong_comultiplication";
    case ModuleProperty::FullyPure: return "fully_pure";
  }
  return "?";
}

namespace {

bool two_absorbing_primary(const Submodule& n, const SubmoduleLattice& lattice) {
  if (n.is_whole()) throw DomainError("two_absorbing_primary is defined only for proper submodules");
  const auto& m = n.module();
  const auto& rad = lattice[radical_index(lattice, lattice.index_of(n))];
  const Ideal colon = colon_into(n);
  const auto reps = scalar_representatives(m);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i; j < reps.size(); ++j) {
      RingElement ab(reps[i].size());
      for (std::size_t k = 0; k < ab.size(); ++k) ab[k] = reps[i][k] * reps[j][k];
      if (colon.contains_element(ab)) continue;
      for (ElemId x = 0; x < m.order(); ++x) {
        if (!n.contains(m.scale(ab, x))) continue;
        if (!rad.contains(m.scale(reps[i], x)) && !rad.contains(m.scale(reps[j], x))) return false;
      }
    }
  return true;
}

}  // namespace

bool submodule_predicate(const Submodule& n, const SubmoduleLattice& lattice, SubmoduleProperty p) {
  switch (p) {
    case SubmoduleProperty::Prime:
      return is_prime_submodule(n);
    case SubmoduleProperty::Primary:
      return is_primary_submodule(n);
    case SubmoduleProperty::TwoAbsorbing:
      return is_two_absorbing_submodule(n);
    case SubmoduleProperty::TwoAbsorbingPrimary:
      return two_absorbing_primary(n, lattice);
    case SubmoduleProperty::Radical: {
      if (n.is_whole()) return false;
      const auto i = lattice.index_of(n);
      return radical_index(lattice, i) == i;
    }
    case SubmoduleProperty::Pure:
      return is_pure_submodule(n);
    case SubmoduleProperty::Waist: {
      const auto i = lattice.index_of(n);
      return (lattice.below(i) | lattice.above(i)).all();
    }
  }
  return false;
}

bool module_predicate(const SubmoduleLattice& lattice, ModuleProperty p) {
  using Index = SubmoduleLattice::Index;
  const auto n = static_cast<Index>(lattice.size());
  const auto& module = lattice.module_ptr();
  switch (p) {
    case ModuleProperty::Distributive:
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          for (Index c = b; c < n; ++c)
            if (lattice.meet(a, lattice.join(b, c)) !=
                lattice.join(lattice.meet(a, b), lattice.meet(a, c)))
              return false;
      return true;
    case ModuleProperty::Multiplication: {
      const auto whole = whole_module(module);
      return std::all_of(lattice.subs().begin(), lattice.subs().end(), [&](const Submodule& s) {
        return ideal_apply(colon_into(s), whole, IdealAction::Product) == s;
      });
    }
    case ModuleProperty::Comultiplication: {
      const auto zero = zero_submodule(module);
      return std::all_of(lattice.subs().begin(), lattice.subs().end(), [&](const Submodule& s) {
        return ideal_apply(annihilator(s), zero, IdealAction::Torsion) == s;
      });
    }
    case ModuleProperty::Dac: {
      if (!module->ring().is_finite())
        throw DomainError("the double annihilator condition needs a ring with finitely many ideals");
      const auto zero = zero_submodule(module);
      for (const auto& ideal : all_ideals(module->ring()))
        if (!(annihilator(ideal_apply(ideal, zero, IdealAction::Torsion)) == ideal)) return false;
      return true;
    }
    case ModuleProperty::StrongComultiplication:
      if (!module->ring().is_finite())
        throw DomainError("strong comultiplication needs a ring with finitely many ideals");
      return module_predicate(lattice, ModuleProperty::Comultiplication) &&
             module_predicate(lattice, ModuleProperty::Dac);
    case ModuleProperty::FullyPure:
      return std::all_of(lattice.subs().begin(), lattice.subs().end(),
                         [](const Submodule& s) { return is_pure_submodule(s); });
  }
  return false;
}

}  // namespace sublat
