#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/presentation.hpp"

namespace koszul {

// Homogeneous element of e_target Λ_degree e_source, i.e. a combination of
// paths source -> target, in normal-form coordinates. Empty coordinates
// denote zero.
struct AlgElem {
  int source = 0;
  int target = 0;
  int degree = 0;
  Vec coords;

  bool is_zero() const;
};

class GradedAlgebra {
 public:
  // Degree-n words x -> z of the form a*w, w a normal word of degree n-1,
  // modulo the relations among them.
  struct Block {
    std::vector<PathWord> paths;
    Subspace ideal;
    std::vector<std::size_t> basis;       // indices of normal-form basis paths
    std::vector<long> coord_of_path;      // basis coordinate, or -1
    std::vector<long> ideal_row_of_path;  // rref row with this pivot, or -1
    std::map<std::vector<int>, std::size_t> index;
  };

  explicit GradedAlgebra(QuadraticPresentation p);

  static std::shared_ptr<const GradedAlgebra> make(QuadraticPresentation p);

  const QuadraticPresentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver(); }
  const FieldSpec& field() const { return pres_.field(); }
  int vertex_count() const { return quiver().vertex_count(); }

  const Block& block(int x, int z, int n) const;
  std::size_t dim(int x, int z, int n) const;
  std::size_t total_dim(int n) const;
  const PathWord& basis_path(int x, int z, int n, std::size_t k) const;

  // Normal form of a combination of the words of block(x, z, n).
  AlgElem reduce(int x, int z, int n, const Vec& path_coeffs) const;
  AlgElem path_element(const PathWord& p) const;
  // arrow * e.
  AlgElem left_arrow(int arrow, const AlgElem& e) const;
  AlgElem zero(int x, int z, int n) const;
  AlgElem unit(int x) const;
  AlgElem basis_element(int x, int z, int n, std::size_t k) const;

  // u * v, where v is applied first: v : x -> y, u : y -> z. Returns zero
  // for non-composable blocks.
  AlgElem multiply(const AlgElem& u, const AlgElem& v) const;
  AlgElem add(const AlgElem& a, const AlgElem& b) const;
  AlgElem scale(const AlgElem& a, const Scalar& s) const;
  bool equal(const AlgElem& a, const AlgElem& b) const;

  // Finite-dimensional iff some degree vanishes; probes up to `probe`.
  bool is_finite_dimensional() const;
  // Largest nonzero degree of a finite-dimensional algebra.
  int top_degree() const;

  std::string element_to_string(const AlgElem& e) const;

 private:
  void ensure_degree(int n) const;
  void build_degree(int n) const;

  QuadraticPresentation pres_;
  mutable std::mutex mu_;
  mutable std::deque<std::vector<Block>> degrees_;  // [n][x * V + z]
  mutable std::optional<int> top_;
  mutable bool finiteness_known_ = false;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

// H(n)[z][x] = dim e_z Λ_n e_x for n = 0..N.
std::vector<std::vector<std::vector<std::size_t>>> hilbert_block_series(const GradedAlgebra& a, int N);

}  // namespace koszul
