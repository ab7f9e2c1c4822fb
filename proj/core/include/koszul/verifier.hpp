#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "koszul/koszul_functor.hpp"
#include "koszul/resolution.hpp"
#include "koszul/sampling.hpp"

namespace koszul {

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);

struct ReportRow {
  std::string key;
  std::vector<std::int64_t> values;  // one per column
  Verdict status = Verdict::Pass;
};

struct VerificationReport {
  std::string identity;
  std::string algebra;
  std::map<std::string, std::int64_t> parameters;
  std::vector<std::string> columns;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::Pass;
  std::string witness;  // first failing row, or first inconclusive one

  void add(ReportRow r);
  std::size_t count(Verdict v) const;
};

// (L^!)^! == L as relation subspaces after the double opposite.
VerificationReport verify_involution(const QuadraticPresentation& p);

// For |n|, |m| <= window:
//   hom_graded(I^!_x<n>, I^!_y<m>) = Ext^{m-n}(S_x, S_y<n-m>) = dim e_x L^!_{m-n} e_y
// with the dual-algebra dimension read as paths y -> x in the quiver of L^!.
VerificationReport verify_generator_homs(const QuadraticPresentation& p, int window, int horizon);

// Ungraded Hom against the sum over r of graded Hom, on random modules and
// (when complexes > 0) random three-term complexes.
VerificationReport verify_precovering(const QuadraticPresentation& p, int samples, int complexes, std::uint64_t seed);

// sum_{k=0..window} Ext^k_{L^!}(X, Y<-k>) against Hom in K(L-mod) between
// the images F(X), F(Y), forgetting the grading.
VerificationReport verify_orbit_homs(const AlgebraPtr& lambda, const GradedModule& x, const GradedModule& y,
                                     int window, int horizon);
// All pairs of simples and injectives over L^!.
VerificationReport verify_orbit_suite(const QuadraticPresentation& p, int window, int horizon);

// Which factor of sum (-1)^a H_L(a) H_{L^!}(b) is transposed.
enum class HilbertOrientation { Plain, TransposeLeft, TransposeRight, TransposeBoth };
std::string to_string(HilbertOrientation o);
// Frozen after calibration against EXT2/SYM2 and RSZ_A3.
inline constexpr HilbertOrientation kHilbertOrientation = HilbertOrientation::TransposeLeft;
// First orientation for which the identity holds on EXT2 (against SYM2) and
// on RSZ_A3 up to n_max.
HilbertOrientation calibrate_hilbert_orientation(int n_max = 6);
bool hilbert_identity_holds(const QuadraticPresentation& p, int n_max, HilbertOrientation o);
VerificationReport hilbert_diagnostic(const QuadraticPresentation& p, int n_max,
                                      HilbertOrientation o = kHilbertOrientation);
// Same identity for an arbitrary pairing, e.g. a perturbed algebra against a stale dual.
VerificationReport hilbert_diagnostic(const QuadraticPresentation& p, const QuadraticPresentation& dual, int n_max,
                                      HilbertOrientation o = kHilbertOrientation);

// K-images of random L^!-module pairs: no nonzero null-homotopic chain maps,
// and chain maps match module homomorphisms.
VerificationReport verify_null_homotopy(const QuadraticPresentation& p, int samples, std::uint64_t seed);

// shift_compat_iso on random complexes over L^! for i in [-2, 2], plus the
// sign perturbations.
VerificationReport verify_shift_compat(const QuadraticPresentation& p, int samples, std::uint64_t seed);

// K(I^!_x<n>)[-n] against the minimal resolution of S_x<-n>, |n| <= window.
VerificationReport verify_resolution_identity(const QuadraticPresentation& p, int window, int horizon);

// Sum over r of Hom(M, N<r>) modulo maps through the projective cover of N.
std::size_t stable_hom(const GradedModule& m, const GradedModule& n);
// Omega M: kernel of the projective cover.
GradedModule syzygy(const GradedModule& m);
VerificationReport verify_stable_hom(const QuadraticPresentation& p, std::uint64_t seed);

}  // namespace koszul
