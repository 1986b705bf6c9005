#pragma once

#include <cstdint>
#include <vector>

#include "belief/translate.hpp"

namespace belt {

// A finite family of probability models over a shared vocabulary.
struct ModelFamily {
  std::vector<Model> members;
};

// Tagged union of the members: world "w" of member k becomes "w@k".
Model disjoint_union(const ModelFamily& fam);

struct UniversalModelResult {
  Model model;  // the quotiented union
  // description_maps[k][w] = world of `model` realizing member k's world w.
  std::vector<std::vector<std::size_t>> description_maps;
};

// Quotient of the disjoint union by its full description partition; worlds
// correspond to the descriptions realized in the family. Dense threshold
// mode only (NonDenseThresholds otherwise).
UniversalModelResult universal_model(const ModelFamily& fam,
                                     const ThresholdSet& thresholds);

struct UniquenessCertificate {
  bool certified = false;        // exhaustive search completed
  std::uint64_t search_space = 0;
  std::size_t morphism_count = 0;
};

struct UniversalTypeSpaceResult {
  TypeSpace space;  // T*, with the given X as its state space
  std::vector<TypeMorphism> morphisms;  // per family member, into T*
  std::vector<UniquenessCertificate> certificates;
};

// Builds the family-relative universal type space over X (singleton-atom
// sigma-algebra required; NonSingletonStateAlgebra otherwise): interprets
// each member with nu(x) = {x}, passes through the universal model, and
// factors back. Morphisms are verified; uniqueness is certified by bounded
// exhaustive search (certificates are left uncertified past `budget`).
UniversalTypeSpaceResult universal_typespace(const SpacePtr& states,
                                             const std::vector<TypeSpace>& fam,
                                             std::uint64_t budget);

// Existence and uniqueness of a morphism from each member into the
// candidate, by exhaustive search within budget.
ValidationReport check_universality(const TypeSpace& candidate,
                                    const std::vector<TypeSpace>& fam,
                                    std::uint64_t budget);

}  // namespace belt
