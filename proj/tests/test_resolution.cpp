#include <doctest.h>

#include "koszul/corpus.hpp"
#include "koszul/errors.hpp"
#include "koszul/koszul_functor.hpp"
#include "koszul/resolution.hpp"

using namespace koszul;

namespace {

AlgebraPtr alg(const std::string& n) { return GradedAlgebra::make(corpus_presentation(n)); }

// Not Koszul: (R(x)V) and (V(x)R) meet in the sum of all 3-words, and the
// triple intersection in degree 4 is the sum of all 4-words, so Ext^3 picks
// up a generator in internal degree 4.
const char* kNonKoszul =
    "algebra NK over Q\n"
    "vertices v\n"
    "arrow a : v -> v\n"
    "arrow b : v -> v\n"
    "relation a*a + a*b + b*b\n"
    "relation b*a\n";

}  // namespace

TEST_CASE("resolution of the simple over EXT1") {
  AlgebraPtr e1 = alg("EXT1");
  ResolutionResult r = minimal_projective_resolution(simple(e1, 0, 0), 4);
  CHECK_FALSE(r.complete);
  CHECK(r.complex.lo() == -4);
  for (int p = -4; p <= 0; ++p) CHECK(r.complex.term(p) == std::vector<Generator>{{0, p}});
  CHECK(r.complex.is_minimal());
  CHECK(r.complex.is_linear());
}

TEST_CASE("resolution of S_1 over RSZ_A3") {
  AlgebraPtr a3 = alg("RSZ_A3");
  for (int h : {2, 3, 6}) {
    ResolutionResult r = minimal_projective_resolution(simple(a3, 0, 0), h);
    CHECK(r.complete);
    CHECK(r.complex.term(0) == std::vector<Generator>{{0, 0}});
    CHECK(r.complex.term(-1) == std::vector<Generator>{{1, -1}});
    CHECK(r.complex.term(-2) == std::vector<Generator>{{2, -2}});
    CHECK(r.complex.term(-3).empty());
  }
}

TEST_CASE("projectives resolve by themselves") {
  for (const auto& n : corpus_names()) {
    AlgebraPtr A = alg(n);
    if (!A->is_finite_dimensional()) continue;
    ResolutionResult r = minimal_projective_resolution(projective(A, 0, 1), 4);
    CHECK_MESSAGE(r.complete, n);
    CHECK(r.length() == 0);
  }
}

TEST_CASE("resolutions are exact") {
  for (const std::string n : {"EXT2", "REM21", "BEIL_2"}) {
    AlgebraPtr A = alg(n);
    for (int x = 0; x < A->vertex_count(); ++x) {
      ResolutionResult r = minimal_projective_resolution(simple(A, x, 0), 4);
      ModuleComplex m = materialize(r.complex);
      for (int p = r.complex.lo() + 1; p < 0; ++p) CHECK_MESSAGE(cohomology(m, p).is_zero(), n);
      CHECK(is_isomorphic(cohomology(m, 0), simple(A, x, 0)) == IsoAnswer::Yes);
    }
  }
}

TEST_CASE("Ext tables") {
  ExtTable e1 = ext_simple_table(alg("EXT1"), 6);
  for (int n = 0; n <= 6; ++n) CHECK(e1.dim(n, 0, 0, n) == 1);
  CHECK(e1.entries.size() == 7);

  ExtTable a3 = ext_simple_table(alg("RSZ_A3"), 6);
  CHECK(a3.dim(1, 0, 1, 1) == 1);
  CHECK(a3.dim(2, 0, 2, 2) == 1);
  std::size_t off = 0;
  for (const auto& e : a3.entries)
    if (e.n > 0) ++off;
  CHECK(off == 3);  // plus Ext^1(S_2, S_3<-1>)
  CHECK(a3.dim(1, 1, 2, 1) == 1);

  ExtTable k = ext_simple_table(alg("BEIL_1"), 6);
  CHECK(k.dim(1, 0, 1, 1) == 2);

  ExtTable e2 = ext_simple_table(alg("EXT2"), 6);
  for (int n = 0; n <= 6; ++n) CHECK(e2.dim(n, 0, 0, n) == static_cast<std::size_t>(n + 1));
}

TEST_CASE("Ext table is the dual algebra") {
  for (const auto& name : corpus_names()) {
    AlgebraPtr A = alg(name);
    AlgebraPtr D = dual_algebra(*A);
    ExtTable t = ext_simple_table(A, 4);
    for (int n = 0; n <= 4; ++n)
      for (int x = 0; x < A->vertex_count(); ++x)
        for (int y = 0; y < A->vertex_count(); ++y)
          CHECK_MESSAGE(t.dim(n, x, y, n) == D->dim(y, x, n), name);
  }
}

TEST_CASE("Koszulity certificates") {
  for (const std::string n : {"EXT1", "EXT2", "RSZ_A3", "BEIL_1", "BEIL_2", "REM21"}) {
    KoszulCertificate c = koszulity_check(parse_raw_presentation(*corpus_source(n)), 6);
    CHECK_MESSAGE(c.verdict == KoszulVerdict::KoszulUpTo, n);
    CHECK(c.horizon == 6);
  }
  KoszulCertificate cubic = koszulity_check(
      parse_raw_presentation("algebra C over Q\nvertices v\narrow a : v -> v\nrelation a*a*a\n"), 6);
  CHECK(cubic.verdict == KoszulVerdict::NotQuadraticIdeal);
  CHECK(cubic.offending_line == 4);
  CHECK(cubic.offending_term == "a*a*a");

  KoszulCertificate nk = koszulity_check(parse_presentation(kNonKoszul), 6);
  REQUIRE(nk.verdict == KoszulVerdict::FailsAt);
  CHECK(nk.witness.n == 3);
  CHECK(nk.witness.i == 4);
  CHECK(nk.witness.dim == 1);
}

TEST_CASE("linearity and off-diagonal scans agree") {
  for (const auto& n : corpus_names()) {
    AlgebraPtr A = alg(n);
    auto a = linearity_scan(A, 6, default_truncation(*A, 6));
    auto b = offdiagonal_ext_scan(A, 6, default_truncation(*A, 6));
    CHECK_MESSAGE(a == b, n);
    for (bool v : a) CHECK(v);
  }
  AlgebraPtr nk = GradedAlgebra::make(parse_presentation(kNonKoszul));
  auto a = linearity_scan(nk, 4), b = offdiagonal_ext_scan(nk, 4);
  CHECK(a == b);
  CHECK(a == std::vector<bool>{true, true, true, false, false});
}

TEST_CASE("general Ext") {
  AlgebraPtr e1 = alg("EXT1");
  GradedModule s = simple(e1, 0, 0);
  CHECK(ext_general(s, s, 0, 0, 4) == 1);
  for (int n = 1; n <= 3; ++n) {
    CHECK(ext_general(projective(e1, 0, 0), s, n, -n, 4) == 0);
    CHECK(ext_ungraded(s, s, n, 5) == 1);
  }
  ResolutionResult r = minimal_projective_resolution(s, 2);
  CHECK_THROWS_AS(ext_from_resolution(r, s, 3, -3), HorizonExceeded);
}

TEST_CASE("injective coresolutions") {
  AlgebraPtr e2 = alg("EXT2");
  CHECK(injective_dimension_up_to(projective(e2, 0, 0), 4) == 0);
  AlgebraPtr a3 = alg("RSZ_A3");
  auto d = injective_dimension_up_to(simple(a3, 2, 0), 4);
  REQUIRE(d);
  CHECK(*d == 2);
  CHECK(injective_dimension_up_to(injective(a3, 1, 0), 4) == 0);
  CoresolutionResult c = minimal_injective_coresolution(simple(a3, 2, 0), 4);
  CHECK(c.complete);
  CHECK(c.terms.at(0) == std::vector<Generator>{{2, 0}});
}

TEST_CASE("infinite algebras need a truncation") {
  AlgebraPtr kx = dual_algebra(*alg("EXT1"));
  CHECK_THROWS_AS(minimal_projective_resolution(simple(kx, 0, 0), 3), Unsupported);
  ResolutionResult r = minimal_projective_resolution(simple(kx, 0, 0), 3, 5);
  CHECK(r.complete);
  CHECK(r.length() == 1);
}
