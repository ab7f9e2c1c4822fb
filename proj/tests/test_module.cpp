#include <doctest.h>

#include "koszul/corpus.hpp"
#include "koszul/graded_module.hpp"
#include "koszul/koszul_functor.hpp"
#include "koszul/sampling.hpp"

using namespace koszul;

namespace {

AlgebraPtr alg(const std::string& n) { return GradedAlgebra::make(corpus_presentation(n)); }

}  // namespace

TEST_CASE("shift conventions") {
  AlgebraPtr e1 = alg("EXT1");
  GradedModule p = projective(e1, 0, 0);
  CHECK(shift(p, 0) == p);
  GradedModule s3 = shift(simple(e1, 0, 0), 3);
  CHECK(s3 == simple(e1, 0, 3));
  CHECK(s3.dim(0, -3) == 1);
  CHECK(shift(shift(p, 2), -5) == shift(p, -3));
}

TEST_CASE("projectives and injectives") {
  AlgebraPtr e1 = alg("EXT1");
  GradedModule p = projective(e1, 0, 0);
  CHECK(p.dim(0, 0) == 1);
  CHECK(p.dim(0, 1) == 1);
  CHECK(p.total_dim() == 2);
  CHECK(p.action(0, 0) == Matrix::identity(e1->field(), 1));

  AlgebraPtr a3 = alg("RSZ_A3");
  GradedModule p1 = projective(a3, 0, 0);
  CHECK(top(p1).module == simple(a3, 0, 0));
  CHECK(is_isomorphic(radical(p1).module, simple(a3, 1, -1)) == IsoAnswer::Yes);

  AlgebraPtr kx = dual_algebra(*e1);
  GradedModule inj = injective(kx, 0, 0, 4);
  for (int n = -4; n <= 0; ++n) CHECK(inj.dim(0, n) == 1);
  CHECK(inj.total_dim() == 5);
}

TEST_CASE("socle") {
  AlgebraPtr e1 = alg("EXT1");
  CHECK(is_isomorphic(socle(projective(e1, 0, 0)).module, simple(e1, 0, -1)) == IsoAnswer::Yes);
  CHECK(socle(simple(e1, 0, 2)).module == simple(e1, 0, 2));
  AlgebraPtr a3 = alg("RSZ_A3");
  CHECK(is_isomorphic(socle(projective(a3, 0, 0)).module, simple(a3, 1, -1)) == IsoAnswer::Yes);
}

TEST_CASE("kernels, cokernels, tops") {
  for (const auto& n : corpus_names()) {
    AlgebraPtr A = alg(n);
    for (int x = 0; x < A->vertex_count(); ++x) {
      GradedModule p = projective(A, x, 0, 3);
      CHECK_MESSAGE(top(p).module == simple(A, x, 0), n);
      CHECK(kernel(identity_morphism(p)).module.is_zero());
      ModuleMorphism zero(zero_module(A), p);
      CHECK(cokernel(zero).module == p);
    }
  }
}

TEST_CASE("graded Hom oracles") {
  for (const auto& n : corpus_names()) {
    AlgebraPtr A = alg(n);
    for (int x = 0; x < A->vertex_count(); ++x)
      for (int y = 0; y < A->vertex_count(); ++y)
        for (int i = -2; i <= 2; ++i)
          CHECK_MESSAGE(hom_graded_dim(projective(A, x, i + 1, 4), projective(A, y, i, 4)) == 0, n);
  }
  AlgebraPtr e1 = alg("EXT1");
  CHECK(hom_graded_dim(simple(e1, 0, 0), simple(e1, 0, 0)) == 1);
  CHECK(hom_total(projective(e1, 0, 0), projective(e1, 0, 0)).dim == 2);
  AlgebraPtr a3 = alg("RSZ_A3");
  CHECK(hom_total(projective(a3, 1, 0), simple(a3, 1, 0)).dim == 1);
  CHECK(hom_total(projective(a3, 0, 0), simple(a3, 1, 0)).dim == 0);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(hom_total(simple(a3, x, 0), simple(a3, y, 0)).dim == (x == y ? 1u : 0u));
}

TEST_CASE("projective Yoneda on random modules") {
  Rng rng(11);
  for (const auto& n : corpus_names()) {
    AlgebraPtr A = alg(n);
    for (int s = 0; s < 4; ++s) {
      GradedModule m = random_module(A, rng);
      for (int x = 0; x < A->vertex_count(); ++x)
        for (int r = -m.max_degree(); r <= -m.min_degree(); ++r)
          CHECK_MESSAGE(hom_graded_dim(projective(A, x, r, m.max_degree() + r + 1), m) == m.dim(x, -r), n);
    }
  }
}

TEST_CASE("graded and ungraded Hom solvers agree") {
  Rng rng(3);
  for (const std::string n : {"EXT2", "RSZ_A3", "REM21"}) {
    AlgebraPtr A = alg(n);
    for (int s = 0; s < 6; ++s) {
      GradedModule m = random_module(A, rng), k = random_module(A, rng);
      CHECK_MESSAGE(hom_total(m, k).dim == hom_ungraded_dim(m, k), n);
    }
  }
}

TEST_CASE("covers and envelopes") {
  for (const auto& n : corpus_names()) {
    AlgebraPtr A = alg(n);
    if (!A->is_finite_dimensional()) continue;
    for (int x = 0; x < A->vertex_count(); ++x) {
      Cover c = projective_cover(simple(A, x, 0));
      CHECK(c.generators == std::vector<std::pair<int, int>>{{x, 0}});
    }
  }
  AlgebraPtr e1 = alg("EXT1");
  Cover c = projective_cover(radical(projective(e1, 0, 0)).module);
  CHECK(c.generators == std::vector<std::pair<int, int>>{{0, -1}});
  AlgebraPtr a3 = alg("RSZ_A3");
  for (int x = 0; x < 3; ++x)
    for (int r = -1; r <= 1; ++r) {
      Cover e = injective_envelope(simple(a3, x, r));
      CHECK(e.generators == std::vector<std::pair<int, int>>{{x, r}});
      CHECK(e.module == injective(a3, x, r));
      CHECK(socle(e.module).module == simple(a3, x, r));
    }
}

TEST_CASE("module validation") {
  AlgebraPtr e1 = alg("EXT1");
  GradedModule m(e1);
  m.set_dim(0, 0, 1);
  m.set_dim(0, 1, 1);
  m.set_dim(0, 2, 1);
  Matrix one = Matrix::identity(e1->field(), 1);
  m.set_action(0, 0, one);
  m.set_action(0, 1, one);
  CHECK_FALSE(m.satisfies_relations());
}
