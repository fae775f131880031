#pragma once

#include <string_view>

#include "sublat/lattice.hpp"
#include "sublat/submodule.hpp"

namespace sublat {

/// Intersection of the prime submodules containing N; the whole module if
/// there are none.
Submodule radical(const Submodule& n, const SubmoduleLattice& lattice);
SubmoduleLattice::Index radical_index(const SubmoduleLattice& lattice, SubmoduleLattice::Index n);

enum class SubmoduleProperty { Prime, Primary, TwoAbsorbing, TwoAbsorbingPrimary, Radical, Pure, Waist };
std::string_view to_string(SubmoduleProperty p);

/// Scalars run over scalar_representatives(), elements over all of M and
/// ideals over relevant_ideals(). Prime, primary and the 2-absorbing pair
/// throw DomainError on the whole module; `Radical` is false there.
bool submodule_predicate(const Submodule& n, const SubmoduleLattice& lattice, SubmoduleProperty p);

enum class ModuleProperty {
  Distributive,
  Multiplication,
  Comultiplication,
  Dac,
  StrongComultiplication,
  FullyPure,
};
std::string_view to_string(ModuleProperty p);

/// DomainError for Dac / StrongComultiplication over the integers.
bool module_predicate(const SubmoduleLattice& lattice, ModuleProperty p);

}  // namespace sublat
