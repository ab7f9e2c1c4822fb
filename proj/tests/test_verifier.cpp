#include <doctest.h>

#include "koszul/corpus.hpp"
#include "koszul/verifier.hpp"

using namespace koszul;

namespace {

AlgebraPtr alg(const std::string& n) { return GradedAlgebra::make(corpus_presentation(n)); }

}  // namespace

TEST_CASE("Hilbert orientation is pinned") {
  CHECK(calibrate_hilbert_orientation(6) == kHilbertOrientation);
  CHECK(kHilbertOrientation == HilbertOrientation::TransposeLeft);
  // The single-vertex calibration pair alone does not distinguish orientations.
  for (auto o : {HilbertOrientation::Plain, HilbertOrientation::TransposeLeft, HilbertOrientation::TransposeRight,
                 HilbertOrientation::TransposeBoth})
    CHECK(hilbert_identity_holds(corpus_presentation("EXT2"), 6, o));
  CHECK_FALSE(hilbert_identity_holds(corpus_presentation("RSZ_A3"), 6, HilbertOrientation::Plain));
}

TEST_CASE("Hilbert identity on the corpus") {
  for (const auto& n : corpus_names()) {
    VerificationReport r = hilbert_diagnostic(corpus_presentation(n), 6);
    CHECK_MESSAGE(r.verdict == Verdict::Pass, n);
  }
  // EXT1: (1, 1, 0, ...) against (1, 1, 1, ...) telescopes.
  VerificationReport e1 = hilbert_diagnostic(corpus_presentation("EXT1"), 3);
  CHECK(e1.rows.size() == 4);
  CHECK(e1.rows[0].values[3] == 1);
}

TEST_CASE("a stale dual is detected") {
  // EXT2 with the coefficient of b*b moved onto a*b: relations aa, ab, ab + ba.
  QuadraticPresentation mutated = parse_presentation(
      "algebra EXT2m over Q\nvertices v\narrow a : v -> v\narrow b : v -> v\n"
      "relation a*a\nrelation a*b\nrelation a*b + b*a\n");
  VerificationReport r = hilbert_diagnostic(mutated, corpus_presentation("SYM2"), 6);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(hilbert_diagnostic(mutated, quadratic_dual(mutated), 6).verdict == Verdict::Pass);
}

TEST_CASE("involution") {
  for (const auto& n : corpus_names()) CHECK_MESSAGE(verify_involution(corpus_presentation(n)).verdict == Verdict::Pass, n);
}

TEST_CASE("generator Homs over EXT1") {
  VerificationReport r = verify_generator_homs(corpus_presentation("EXT1"), 2, 6);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.count(Verdict::Fail) == 0);
  CHECK(r.rows.size() >= 25);
}

TEST_CASE("orbit identity on a single pair") {
  AlgebraPtr L = alg("RSZ_A3");
  AlgebraPtr D = dual_algebra(*L);
  VerificationReport r = verify_orbit_homs(L, injective(D, 0, 0), injective(D, 0, 0), 3, 6);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.rows.back().values[0] == 1);
  VerificationReport z = verify_orbit_homs(L, zero_module(D), simple(D, 1, 0), 3, 6);
  CHECK(z.verdict == Verdict::Pass);
  CHECK(z.rows.back().values[0] == 0);
}

TEST_CASE("precovering on EXT1 examples") {
  AlgebraPtr e1 = alg("EXT1");
  GradedModule s = simple(e1, 0, 0), p = projective(e1, 0, 0);
  CHECK(hom_total(s, s).dim == hom_ungraded_dim(s, s));
  CHECK(hom_ungraded_dim(p, p) == 2);
  TotalHom t = hom_total(p, p);
  CHECK(t.dim == 2);
  std::vector<int> rs;
  for (const auto& [r, f] : t.basis) rs.push_back(r);
  std::sort(rs.begin(), rs.end());
  CHECK(rs == std::vector<int>{0, 1});
  CHECK(verify_precovering(corpus_presentation("EXT2"), 6, 2, 5).verdict == Verdict::Pass);
}

TEST_CASE("stable Hom") {
  AlgebraPtr e1 = alg("EXT1");
  GradedModule s = simple(e1, 0, 0);
  CHECK(stable_hom(s, s) == 1);
  CHECK(syzygy(s) == simple(e1, 0, -1));
  CHECK(stable_hom(s, projective(e1, 0, 0)) == 0);

  AlgebraPtr e2 = alg("EXT2");
  GradedModule s2 = simple(e2, 0, 0);
  CHECK(stable_hom(s2, s2) == 1);
  CHECK(stable_hom(projective(e2, 0, 0), s2) == 0);
  CHECK(stable_hom(projective(e2, 0, 2), injective(e2, 0, -1)) == 0);
  CHECK(verify_stable_hom(corpus_presentation("EXT2"), 3).verdict == Verdict::Pass);
}

TEST_CASE("report bookkeeping") {
  VerificationReport r;
  r.add({"a", {1}, Verdict::Pass});
  CHECK(r.verdict == Verdict::Pass);
  r.add({"b", {2}, Verdict::Inconclusive});
  CHECK(r.verdict == Verdict::Inconclusive);
  CHECK(r.witness == "b");
  r.add({"c", {3}, Verdict::Fail});
  CHECK(r.verdict == Verdict::Fail);
  CHECK(r.witness == "c");
  CHECK(r.count(Verdict::Pass) == 1);
}
