#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/symbolic.hpp"

namespace koszul {

struct ResolutionResult {
  SymbolicComplex complex;  // positions -length .. 0
  GradedModule target;
  ModuleMorphism augmentation;  // P^0 -> M, on the materialized P^0
  int horizon = 0;
  bool complete = false;          // the last kernel vanished
  std::optional<int> max_degree;  // truncation used for locally finite algebras
  int length() const { return -complex.lo(); }
};

// Iterated projective covers of kernels, up to P^{-horizon}. For algebras
// that are not finite-dimensional a max_degree is required; everything is
// then exact in internal degrees <= max_degree.
ResolutionResult minimal_projective_resolution(const GradedModule& m, int horizon,
                                               std::optional<int> max_degree = std::nullopt);

struct ExtEntry {
  int n = 0;
  int x = 0;
  int y = 0;
  int i = 0;
  std::size_t dim = 0;
};

// dim Ext^n(S_x, S_y<-i>) read off multiplicities of P_y<-i> in P^{-n}.
struct ExtTable {
  std::string algebra;
  int horizon = 0;
  std::vector<ExtEntry> entries;  // nonzero entries only
  std::size_t dim(int n, int x, int y, int i) const;
};
ExtTable ext_simple_table(const AlgebraPtr& a, int horizon, std::optional<int> max_degree = std::nullopt);

// Truncation used for simples over an algebra that is not finite-dimensional.
std::optional<int> default_truncation(const GradedAlgebra& a, int horizon);

enum class KoszulVerdict { KoszulUpTo, NotQuadraticIdeal, FailsAt };

struct KoszulCertificate {
  KoszulVerdict verdict = KoszulVerdict::KoszulUpTo;
  int horizon = 0;
  ExtEntry witness;            // FailsAt: nonzero Ext^n(S_x, S_y<-i>) with i != n
  std::string offending_term;  // NotQuadraticIdeal
  int offending_line = 0;
  ExtTable evidence;
};
KoszulCertificate koszulity_check(const RawPresentation& p, int horizon);
KoszulCertificate koszulity_check(const QuadraticPresentation& p, int horizon);
std::string to_string(KoszulVerdict v);

// Hom complex Hom(P, N<r>) from a resolution of M; returns dim Ext^n(M, N<r>).
// Throws HorizonExceeded when the resolution is too short.
std::size_t ext_from_resolution(const ResolutionResult& res, const GradedModule& n, int degree, int r);
std::size_t ext_general(const GradedModule& m, const GradedModule& n, int degree, int r, int horizon,
                        std::optional<int> max_degree = std::nullopt);
// Sum over all r of the graded groups.
std::size_t ext_ungraded(const GradedModule& m, const GradedModule& n, int degree, int horizon,
                         std::optional<int> max_degree = std::nullopt);

// Predicate A: resolutions of all simples are linear through step n.
std::vector<bool> linearity_scan(const AlgebraPtr& a, int horizon, std::optional<int> max_degree = std::nullopt);
// Predicate B: Ext^k(S_x, S_y<-i>) = 0 for all i != k and k <= n, computed
// through Hom complexes rather than multiplicities.
std::vector<bool> offdiagonal_ext_scan(const AlgebraPtr& a, int horizon, std::optional<int> max_degree = std::nullopt);

struct CoresolutionResult {
  std::vector<std::vector<Generator>> terms;  // cogenerators (vertex, shift) of I^j
  int horizon = 0;
  bool complete = false;
};
CoresolutionResult minimal_injective_coresolution(const GradedModule& m, int horizon);
// First length <= horizon at which the coresolution stops, if any.
std::optional<int> injective_dimension_up_to(const GradedModule& m, int horizon);

}  // namespace koszul
