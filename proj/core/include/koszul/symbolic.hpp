#pragma once

#include <map>
#include <optional>
#include <vector>

#include "koszul/complex.hpp"

namespace koszul {

// The projective P_vertex<shift>, generated in internal degree -shift.
struct Generator {
  int vertex = 0;
  int shift = 0;
  bool operator==(const Generator&) const = default;
};

// Map between sums of shifted projectives. Entry (b, a) describes the image
// of source generator a in target summand b: an element of
// e_{x_a} Λ_{r_b - r_a} e_{x_b}, i.e. a combination of paths x_b -> x_a,
// acting by right multiplication.
class SymbolicMatrix {
 public:
  SymbolicMatrix() = default;
  SymbolicMatrix(std::vector<Generator> rows, std::vector<Generator> cols);  // zero

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_.size(); }
  const std::vector<Generator>& row_generators() const { return rows_; }
  const std::vector<Generator>& col_generators() const { return cols_; }

  // Zero entries have empty coordinates.
  const AlgElem& at(std::size_t b, std::size_t a) const { return entries_[b * cols_.size() + a]; }
  void set(std::size_t b, std::size_t a, AlgElem e);

  bool is_zero() const;

 private:
  std::vector<Generator> rows_;
  std::vector<Generator> cols_;
  std::vector<AlgElem> entries_;
};

SymbolicMatrix compose(const GradedAlgebra& a, const SymbolicMatrix& g, const SymbolicMatrix& f);  // g after f
SymbolicMatrix add(const GradedAlgebra& a, const SymbolicMatrix& x, const SymbolicMatrix& y);
SymbolicMatrix scaled(const GradedAlgebra& a, const SymbolicMatrix& x, const Scalar& s);
bool equal(const GradedAlgebra& a, const SymbolicMatrix& x, const SymbolicMatrix& y);
// Diagonal matrix with s * e_x entries.
SymbolicMatrix scalar_identity(const GradedAlgebra& a, const std::vector<Generator>& gens, const Scalar& s);

// Cochain complex of sums of shifted projectives; d^p : term(p) -> term(p+1).
class SymbolicComplex {
 public:
  SymbolicComplex() = default;
  explicit SymbolicComplex(AlgebraPtr a) : alg_(std::move(a)) {}

  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const GradedAlgebra& algebra() const { return *alg_; }

  int lo() const;
  int hi() const;
  std::vector<Generator> term(int p) const;
  SymbolicMatrix diff(int p) const;
  void set_term(int p, std::vector<Generator> gens);
  void set_diff(int p, SymbolicMatrix d);

  bool d_squared_zero() const;
  // Every generator at position p is P_x<p>.
  bool is_linear() const;
  // Every nonzero differential entry has path degree >= 1.
  bool is_minimal() const;
  std::size_t rank_at(int p) const { return term(p).size(); }

 private:
  AlgebraPtr alg_;
  std::map<int, std::vector<Generator>> terms_;
  std::map<int, SymbolicMatrix> diffs_;
};

struct SymbolicChainMap {
  SymbolicComplex source;
  SymbolicComplex target;
  std::map<int, SymbolicMatrix> comps;

  SymbolicMatrix at(int p) const;
};

bool is_chain_map(const SymbolicChainMap& f);

// X[k]^p = X^{p+k}, d scaled by (-1)^k.
SymbolicComplex shift(const SymbolicComplex& x, int k);
// Termwise <i>: P_x<r> becomes P_x<r+i>.
SymbolicComplex grade_shift(const SymbolicComplex& x, int i);
SymbolicComplex cone(const SymbolicChainMap& f);

// Sum of shifted projectives in generator order, truncated to internal
// degrees <= max_degree when given.
GradedModule materialize_term(const AlgebraPtr& a, const std::vector<Generator>& gens,
                              std::optional<int> max_degree = std::nullopt);
ModuleMorphism materialize_map(const AlgebraPtr& a, const SymbolicMatrix& m, const GradedModule& src,
                               const GradedModule& tgt);
ModuleComplex materialize(const SymbolicComplex& x, std::optional<int> max_degree = std::nullopt);
ChainMap materialize(const SymbolicChainMap& f, std::optional<int> max_degree = std::nullopt);

// Commuting double complex: d1 : (p,q) -> (p+1,q), d2 : (p,q) -> (p,q+1).
struct SymbolicDoubleComplex {
  AlgebraPtr algebra;
  std::map<std::pair<int, int>, std::vector<Generator>> terms;
  std::map<std::pair<int, int>, SymbolicMatrix> d1;
  std::map<std::pair<int, int>, SymbolicMatrix> d2;

  std::vector<Generator> term(int p, int q) const;
  SymbolicMatrix h(int p, int q) const;
  SymbolicMatrix v(int p, int q) const;
  bool commutes() const;
  bool squares_vanish() const;
};

// Tot^n = (+)_{p+q=n} D^{p,q}, p ascending; d = d1 + (-1)^p d2.
SymbolicComplex tot(const SymbolicDoubleComplex& d);

}  // namespace koszul
