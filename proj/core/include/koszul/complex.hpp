#pragma once

#include <map>
#include <optional>

#include "koszul/graded_module.hpp"

namespace koszul {

// Bounded cochain complex of graded modules; d^p : X^p -> X^{p+1}.
class ModuleComplex {
 public:
  ModuleComplex() = default;
  explicit ModuleComplex(AlgebraPtr a) : alg_(std::move(a)) {}

  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const GradedAlgebra& algebra() const { return *alg_; }

  // Smallest and largest position with a stored term (lo > hi when empty).
  int lo() const;
  int hi() const;

  GradedModule term(int p) const;
  ModuleMorphism diff(int p) const;
  void set_term(int p, GradedModule m);
  void set_diff(int p, ModuleMorphism d);

  // Differentials are module maps between the stored terms and d^2 = 0.
  bool is_complex() const;
  void validate() const;

 private:
  AlgebraPtr alg_;
  std::map<int, GradedModule> terms_;
  std::map<int, ModuleMorphism> diffs_;
};

struct ChainMap {
  ModuleComplex source;
  ModuleComplex target;
  std::map<int, ModuleMorphism> comps;

  ModuleMorphism at(int p) const;
};

bool is_chain_map(const ChainMap& f);
bool is_chain_isomorphism(const ChainMap& f);

ModuleComplex stalk(const GradedModule& m, int p = 0);
// X[k]^p = X^{p+k} with d scaled by (-1)^k.
ModuleComplex shift(const ModuleComplex& x, int k);
ChainMap shift(const ChainMap& f, int k);
// Termwise <i>.
ModuleComplex grade_shift(const ModuleComplex& x, int i);
ChainMap grade_shift(const ChainMap& f, int i);
ModuleComplex direct_sum(const ModuleComplex& x, const ModuleComplex& y);

GradedModule cohomology(const ModuleComplex& x, int p);
bool is_acyclic(const ModuleComplex& x);

// Good truncations: X^{<n} -> ker d^n, and coker d^{n-1} -> X^{>n}.
ModuleComplex truncate_le(const ModuleComplex& x, int n);
ModuleComplex truncate_ge(const ModuleComplex& x, int n);
// Stupid truncation to positions [lo, hi].
ModuleComplex brutal_truncate(const ModuleComplex& x, int lo, int hi);

// Cone^p = X^{p+1} (+) Y^p with d = [[-d_X, 0], [f, d_Y]].
ModuleComplex cone(const ChainMap& f);

ChainMap identity_chain_map(const ModuleComplex& x);
ChainMap zero_chain_map(const ModuleComplex& x, const ModuleComplex& y);

// Degree-0 chain maps X -> Y modulo null-homotopic ones.
struct HomK {
  std::size_t chain_maps = 0;
  std::size_t null_homotopic = 0;
  std::size_t dim() const { return chain_maps - null_homotopic; }
  std::vector<ChainMap> basis;  // basis of chain maps (graded solver only)
};
HomK hom_k(const ModuleComplex& x, const ModuleComplex& y);
// Window of r for which Hom(X, Y<r>) can be nonzero.
std::pair<int, int> shift_window(const ModuleComplex& x, const ModuleComplex& y);
// Sum over r of hom_k(X, Y<r>).
std::size_t hom_k_total_dim(const ModuleComplex& x, const ModuleComplex& y);
// Same quantity computed on the forgotten representations.
HomK hom_k_ungraded(const ModuleComplex& x, const ModuleComplex& y);

IsoAnswer is_isomorphic(const ModuleComplex& x, const ModuleComplex& y, std::uint64_t seed = 1);

}  // namespace koszul
