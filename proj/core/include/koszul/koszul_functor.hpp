#pragma once

#include <optional>
#include <vector>

#include "koszul/complex.hpp"
#include "koszul/symbolic.hpp"

namespace koszul {

// Graded algebra of the quadratic dual presentation.
AlgebraPtr dual_algebra(const GradedAlgebra& a);

// Generator (vertex, n) of K(M)^n comes from basis vector `index` of M_n(vertex).
struct Provenance {
  int vertex = 0;
  int degree = 0;
  std::size_t index = 0;
  bool operator==(const Provenance&) const = default;
};

struct KOutput {
  SymbolicComplex complex;
  GradedModule source;
  std::map<int, std::vector<Provenance>> provenance;  // per position, in generator order
  // Lowest position when the source was cut off below; cohomology there is not meaningful.
  std::optional<int> boundary;
};

// K(M) over `target`, whose quiver must be the opposite of M's quiver
// (arrow indices matching). d^n entries are sums of arrows weighted by the
// action of the opposite arrow on M.
KOutput k_module(const GradedModule& m, const AlgebraPtr& target, bool truncated_below = false);
// Inverse on linear complexes; throws Unsupported on non-linear input.
GradedModule k_inverse(const SymbolicComplex& s, const AlgebraPtr& source_algebra);
// K(f) for a module map f : M -> N, entries are scalar multiples of idempotents.
SymbolicChainMap k_morphism(const ModuleMorphism& f, const AlgebraPtr& target);

// D^{p,q} = K(X^p)^q; d1 = K(d_X), d2 = the K-differential.
SymbolicDoubleComplex big_k(const ModuleComplex& x, const AlgebraPtr& target);
// F(X) = Tot(big_k(X)).
SymbolicComplex quadratic_functor(const ModuleComplex& x, const AlgebraPtr& target);
SymbolicChainMap quadratic_functor(const ChainMap& f, const AlgebraPtr& target);

// X<i>[-i].
ModuleComplex shift_grade_twist(const ModuleComplex& x, int i);

enum class SignRule {
  Verbatim,           // (-1)^{ip} theta^{p,q}, theta^{p,q} = (-1)^{iq}
  PerturbedShiftP,    // (-1)^{i(p+1)} theta^{p,q}
  DropComponentSign,  // (-1)^{ip}, theta taken as the bare identification
};

// Phi : F(X<i>[-i]) -> F(X)<-i>, block (p,q) of the source sent to block
// (p-i, q+i) of F(X) with the sign chosen by `rule`.
SymbolicChainMap shift_compat_iso(const ModuleComplex& x, int i, const AlgebraPtr& target,
                                  SignRule rule = SignRule::Verbatim);

}  // namespace koszul
