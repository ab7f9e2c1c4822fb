#pragma once

#include <cstdint>
#include <random>

#include "koszul/complex.hpp"
#include "koszul/symbolic.hpp"

namespace koszul {

using Rng = std::mt19937_64;

// Over Q: integers in [-3, 3]; over GF(p): uniform residues.
Scalar random_scalar(const FieldSpec& f, Rng& rng);

// Random quiver with 1..max_vertices vertices and 1..max_arrows arrows, and
// a random relation subspace in every (source, target) block.
QuadraticPresentation random_presentation(Rng& rng, const FieldSpec& f, int max_vertices = 3, int max_arrows = 4);

struct ModuleSampler {
  int max_generators = 2;
  int max_relations = 2;
  // Degree cut for algebras that are not finite-dimensional.
  int max_degree = 3;
};

// Cokernel of a random map between small sums of shifted projectives.
GradedModule random_module(const AlgebraPtr& a, Rng& rng, const ModuleSampler& s = {});
// Random combination of a basis of hom_graded(m, n).
ModuleMorphism random_morphism(const GradedModule& m, const GradedModule& n, Rng& rng);
// M --f--> N --> coker f at positions 0, 1, 2.
ModuleComplex random_complex(const AlgebraPtr& a, Rng& rng, const ModuleSampler& s = {});

}  // namespace koszul
