#pragma once

#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "koszul/graded_algebra.hpp"

namespace koszul {

// Finite-support graded representation: M_n(x) of dimension dim(x, n) and,
// for every arrow a : s -> t, a matrix M(a)_n : M_n(s) -> M_{n+1}(t).
class GradedModule {
 public:
  GradedModule() = default;
  explicit GradedModule(AlgebraPtr a);

  const GradedAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const FieldSpec& field() const { return alg_->field(); }

  std::size_t dim(int x, int n) const;
  std::size_t total_dim() const;
  std::size_t degree_dim(int n) const;
  bool is_zero() const { return total_dim() == 0; }
  // Degree range [min_degree, max_degree] containing the support.
  int min_degree() const { return lo_; }
  int max_degree() const { return hi_; }

  // M(a)_n; a zero matrix of the right shape outside the stored range.
  Matrix action(int arrow, int n) const;
  // M(path)_n : M_n(source) -> M_{n+len}(target).
  Matrix path_action(const PathWord& p, int n) const;
  // Action of an algebra element e in e_z Λ_d e_x: M_n(x) -> M_{n+d}(z).
  Matrix element_action(const AlgElem& e, int n) const;

  // Builder interface.
  void set_dim(int x, int n, std::size_t d);
  void set_action(int arrow, int n, Matrix m);

  // Throws if shapes are inconsistent or a relation acts nonzero.
  void validate() const;
  bool satisfies_relations() const;

  // Drops zero degrees at both ends.
  void trim();
  bool operator==(const GradedModule& o) const;

 private:
  void extend_range(int n);

  AlgebraPtr alg_;
  int lo_ = 0;
  int hi_ = -1;
  std::vector<std::vector<std::size_t>> dims_;  // [vertex][n - lo]
  std::vector<std::vector<Matrix>> acts_;       // [arrow][n - lo]
};

// Degree-preserving morphism: f_n(x) : M_n(x) -> N_n(x).
class ModuleMorphism {
 public:
  ModuleMorphism() = default;
  ModuleMorphism(GradedModule src, GradedModule tgt);  // zero map

  const GradedModule& source() const { return src_; }
  const GradedModule& target() const { return tgt_; }

  Matrix at(int x, int n) const;
  void set(int x, int n, Matrix m);

  bool is_zero() const;
  bool commutes() const;  // all squares commute
  void validate() const;
  bool is_isomorphism() const;

  ModuleMorphism operator+(const ModuleMorphism& o) const;
  ModuleMorphism scaled(const Scalar& s) const;
  // Flattened entries in a canonical order (for linear independence tests).
  Vec flatten() const;

 private:
  GradedModule src_;
  GradedModule tgt_;
  std::map<std::pair<int, int>, Matrix> maps_;
};

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);  // g after f
ModuleMorphism identity_morphism(const GradedModule& m);

// A submodule with its inclusion, or a quotient with its projection.
struct Submodule {
  GradedModule module;
  ModuleMorphism inclusion;
};
struct Quotient {
  GradedModule module;
  ModuleMorphism projection;
};

// (M<i>)_n = M_{n+i}.
GradedModule shift(const GradedModule& m, int i);
ModuleMorphism shift(const ModuleMorphism& f, int i);

GradedModule zero_module(AlgebraPtr a);
GradedModule simple(AlgebraPtr a, int x, int r);
// P_x<r>; `horizon` bounds path length when the algebra is not
// finite-dimensional (ignored otherwise).
GradedModule projective(AlgebraPtr a, int x, int r, std::optional<int> horizon = std::nullopt);
// I_x<r> = D(e_x Λ)<r>, socle S_x<r>; `horizon` bounds the depth below the
// socle when the algebra is not finite-dimensional.
GradedModule injective(AlgebraPtr a, int x, int r, std::optional<int> horizon = std::nullopt);
// P_x<r> restricted to internal degrees <= max_degree (a quotient module).
GradedModule projective_upto(AlgebraPtr a, int x, int r, std::optional<int> max_degree);

struct DirectSum {
  GradedModule module;
  std::vector<ModuleMorphism> inclusions;
  std::vector<ModuleMorphism> projections;
};
DirectSum direct_sum(const std::vector<GradedModule>& parts, AlgebraPtr a);
// The sum alone, without inclusions and projections.
GradedModule direct_sum_module(const std::vector<GradedModule>& parts, AlgebraPtr a);

// Submodule spanned per (x, n) by the columns of `basis`; must be closed
// under the action.
Submodule submodule_from_basis(const GradedModule& m, const std::map<std::pair<int, int>, Matrix>& basis);
Quotient quotient_by(const GradedModule& m, const std::map<std::pair<int, int>, Matrix>& basis);

Submodule kernel(const ModuleMorphism& f);
Submodule image(const ModuleMorphism& f);
Quotient cokernel(const ModuleMorphism& f);
Submodule radical(const GradedModule& m);
Quotient top(const GradedModule& m);
Submodule socle(const GradedModule& m);
// Quotient M_{<= d}.
Quotient truncate_above(const GradedModule& m, int d);
// Submodule M_{>= d}.
Submodule truncate_below(const GradedModule& m, int d);

// Factor f through an injective map `mono` with the same target.
std::optional<ModuleMorphism> factor_through_mono(const ModuleMorphism& f, const ModuleMorphism& mono);

std::vector<ModuleMorphism> hom_graded(const GradedModule& m, const GradedModule& n);
std::size_t hom_graded_dim(const GradedModule& m, const GradedModule& n);

struct TotalHom {
  std::size_t dim = 0;
  std::vector<std::pair<int, ModuleMorphism>> basis;  // (r, f : M -> N<r>)
};
// Window of r for which Hom(M, N<r>) can be nonzero.
std::pair<int, int> shift_window(const GradedModule& m, const GradedModule& n);
TotalHom hom_total(const GradedModule& m, const GradedModule& n);

// Ungraded Hom computed on the forgotten representations (blocks over all
// degrees), independent of the graded solver.
std::size_t hom_ungraded_dim(const GradedModule& m, const GradedModule& n);

// The forgotten (ungraded) representation: per vertex the total space, with
// degrees stacked in increasing order, and one block matrix per arrow.
struct FlatModule {
  std::vector<std::size_t> dims;
  std::vector<Matrix> arrows;
  std::vector<std::pair<std::size_t, std::size_t>> ends;  // (source, target) per arrow
  std::vector<std::map<int, std::size_t>> offsets;        // [vertex][degree] -> row
};
// Per-vertex linear maps between total spaces.
using FlatMap = std::vector<Matrix>;

FlatModule flatten(const GradedModule& m);
FlatMap flatten_map(const ModuleMorphism& f, const FlatModule& src, const FlatModule& tgt);
// Basis of homomorphisms between ungraded representations.
std::vector<FlatMap> flat_hom_basis(const FlatModule& m, const FlatModule& n, const FieldSpec& f);

struct Cover {
  GradedModule module;
  ModuleMorphism map;
  std::vector<std::pair<int, int>> generators;  // (vertex, shift)
};
// P(M) -> M. With max_degree, projectives are truncated above it.
Cover projective_cover(const GradedModule& m, std::optional<int> max_degree = std::nullopt);
// M -> I(M), cogenerators recorded as (vertex, shift).
Cover injective_envelope(const GradedModule& m);

enum class IsoAnswer { Yes, No, Undetermined };
IsoAnswer is_isomorphic(const GradedModule& a, const GradedModule& b, std::uint64_t seed = 1);

std::string dimension_table(const GradedModule& m);

}  // namespace koszul
