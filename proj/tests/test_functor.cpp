#include <doctest.h>

#include "koszul/corpus.hpp"
#include "koszul/errors.hpp"
#include "koszul/koszul_functor.hpp"
#include "koszul/resolution.hpp"
#include "koszul/sampling.hpp"

using namespace koszul;

namespace {

AlgebraPtr alg(const std::string& n) { return GradedAlgebra::make(corpus_presentation(n)); }

AlgebraPtr kA3op() { return GradedAlgebra::make(quadratic_dual(corpus_presentation("RSZ_A3"))); }

}  // namespace

TEST_CASE("K of simples is a stalk") {
  for (const auto& n : corpus_names()) {
    AlgebraPtr L = alg(n), D = dual_algebra(*L);
    for (int x = 0; x < L->vertex_count(); ++x) {
      KOutput k = k_module(simple(D, x, 0), L);
      CHECK_MESSAGE(k.complex.lo() == 0, n);
      CHECK(k.complex.hi() == 0);
      CHECK(k.complex.term(0) == std::vector<Generator>{{x, 0}});
      CHECK(k.provenance.at(0) == std::vector<Provenance>{{x, 0, 0}});
    }
  }
}

TEST_CASE("K of a truncated injective over k[x] is the resolution head") {
  AlgebraPtr L = alg("EXT1"), D = dual_algebra(*L);
  KOutput k = k_module(injective(D, 0, 0, 4), L, true);
  ResolutionResult r = minimal_projective_resolution(simple(L, 0, 0), 4);
  for (int p = -4; p <= 0; ++p) CHECK(k.complex.term(p) == r.complex.term(p));
  CHECK(k.complex.is_minimal());
  CHECK(k.complex.is_linear());
  CHECK(k.boundary == -4);
  CHECK(is_isomorphic(materialize(k.complex), materialize(r.complex)) == IsoAnswer::Yes);
}

TEST_CASE("K of I!_1 over kA3op is the resolution of S_1") {
  AlgebraPtr L = alg("RSZ_A3"), D = dual_algebra(*L);
  KOutput k = k_module(injective(D, 0, 0), L);
  ResolutionResult r = minimal_projective_resolution(simple(L, 0, 0), 4);
  CHECK(k.complex.is_minimal());
  CHECK(is_isomorphic(materialize(k.complex), materialize(r.complex)) == IsoAnswer::Yes);
}

TEST_CASE("K squares to zero and is minimal on corpus injectives") {
  for (const auto& n : corpus_names()) {
    AlgebraPtr L = alg(n), D = dual_algebra(*L);
    for (int x = 0; x < L->vertex_count(); ++x) {
      std::optional<int> h;
      if (!D->is_finite_dimensional()) h = 3;
      KOutput k = k_module(injective(D, x, 0, h), L, h.has_value());
      CHECK_MESSAGE(k.complex.d_squared_zero(), n);
      CHECK(k.complex.is_minimal());
      CHECK(k.complex.is_linear());
    }
  }
}

TEST_CASE("k_inverse round trip") {
  Rng rng(21);
  for (const auto& n : corpus_names()) {
    AlgebraPtr L = alg(n), D = dual_algebra(*L);
    CHECK(k_inverse(k_module(simple(D, 0, 0), L).complex, D) == simple(D, 0, 0));
    for (int s = 0; s < 5; ++s) {
      GradedModule m = random_module(D, rng);
      CHECK_MESSAGE(k_inverse(k_module(m, L).complex, D) == m, n);
    }
  }
  AlgebraPtr L = alg("EXT1"), D = dual_algebra(*L);
  GradedModule head = k_inverse(minimal_projective_resolution(simple(L, 0, 0), 4).complex, D);
  CHECK(head == injective(D, 0, 0, 4));
  SymbolicComplex nonlinear(L);
  nonlinear.set_term(0, {{0, 1}});
  CHECK_THROWS_AS(k_inverse(nonlinear, D), Unsupported);
}

TEST_CASE("K on morphisms is functorial") {
  Rng rng(4);
  AlgebraPtr L = alg("REM21"), D = dual_algebra(*L);
  for (int s = 0; s < 5; ++s) {
    GradedModule m = random_module(D, rng), n = random_module(D, rng);
    ModuleMorphism f = random_morphism(m, n, rng);
    SymbolicChainMap kf = k_morphism(f, L);
    CHECK(is_chain_map(kf));
    SymbolicChainMap id = k_morphism(identity_morphism(m), L);
    for (int p = id.source.lo(); p <= id.source.hi(); ++p)
      CHECK(equal(*L, id.at(p), scalar_identity(*L, id.source.term(p), Scalar(1))));
  }
}

TEST_CASE("big K and the total functor") {
  AlgebraPtr L = kA3op(), D = dual_algebra(*L);
  GradedModule s = simple(D, 1, 0);
  SymbolicDoubleComplex b = big_k(stalk(s, 0), L);
  CHECK(b.commutes());
  CHECK(b.squares_vanish());
  CHECK(b.terms.count({0, 0}) == 1);
  CHECK(b.terms.size() == 1);

  SymbolicComplex f = quadratic_functor(stalk(s, 0), L);
  CHECK(f.term(0) == std::vector<Generator>{{1, 0}});

  Rng rng(9);
  for (int t = 0; t < 4; ++t) {
    ModuleComplex x = random_complex(D, rng);
    SymbolicDoubleComplex dk = big_k(x, L);
    CHECK(dk.commutes());
    SymbolicComplex fx = quadratic_functor(x, L);
    CHECK(fx.d_squared_zero());
    SymbolicComplex fs = quadratic_functor(shift(x, 1), L);
    SymbolicComplex sf = shift(fx, 1);
    REQUIRE(fs.lo() == sf.lo());
    for (int p = fs.lo(); p <= fs.hi(); ++p) {
      CHECK(fs.term(p) == sf.term(p));
      if (p < fs.hi()) CHECK(equal(*L, fs.diff(p), sf.diff(p)));
    }
  }

  // M --id--> M: rows are K(M), horizontal maps identities.
  GradedModule m = injective(D, 0, 0);
  ModuleComplex two(D);
  two.set_term(0, m);
  two.set_term(1, m);
  two.set_diff(0, identity_morphism(m));
  SymbolicDoubleComplex d2 = big_k(two, L);
  KOutput km = k_module(m, L);
  for (const auto& [pq, gens] : d2.terms) CHECK(gens == km.complex.term(pq.second));
  for (int q = km.complex.lo(); q <= km.complex.hi(); ++q)
    CHECK(equal(*L, d2.h(0, q), scalar_identity(*L, km.complex.term(q), Scalar(1))));
}

TEST_CASE("F of an injective has cohomology S_x at 0") {
  for (const std::string n : {"RSZ_A3", "BEIL_1", "BEIL_2"}) {
    AlgebraPtr L = alg(n), D = dual_algebra(*L);
    REQUIRE((L->is_finite_dimensional() && D->is_finite_dimensional()));
    for (int x = 0; x < L->vertex_count(); ++x) {
      SymbolicComplex f = quadratic_functor(stalk(injective(D, x, 0), 0), L);
      ModuleComplex m = materialize(f);
      CHECK_MESSAGE(is_isomorphic(cohomology(m, 0), simple(L, x, 0)) == IsoAnswer::Yes, n);
      for (int p = f.lo() + 1; p < 0; ++p) CHECK(cohomology(m, p).is_zero());
    }
  }
}

TEST_CASE("shift compatibility isomorphism") {
  AlgebraPtr L = kA3op(), D = dual_algebra(*L);
  GradedModule s = simple(D, 0, 0);
  SymbolicChainMap id = shift_compat_iso(stalk(s, 0), 0, L);
  CHECK(is_chain_map(id));
  CHECK(equal(*L, id.at(0), scalar_identity(*L, id.source.term(0), Scalar(1))));

  // Single generator: S<1>[-1] sits in block (p, q) = (1, -1), total position 0,
  // sign (-1)^{i(p+q)} = 1; dropping theta leaves (-1)^{ip} = -1.
  SymbolicChainMap one = shift_compat_iso(stalk(s, 0), 1, L);
  CHECK(one.source.term(0) == std::vector<Generator>{{0, -1}});
  CHECK(one.target.term(0) == std::vector<Generator>{{0, -1}});
  CHECK(equal(*L, one.at(0), scalar_identity(*L, one.source.term(0), Scalar(1))));
  SymbolicChainMap dropped = shift_compat_iso(stalk(s, 0), 1, L, SignRule::DropComponentSign);
  CHECK(equal(*L, dropped.at(0), scalar_identity(*L, one.source.term(0), Scalar(-1))));

  Rng rng(12);
  for (int t = 0; t < 4; ++t) {
    ModuleComplex x = random_complex(D, rng);
    for (int i = -2; i <= 2; ++i) {
      CHECK(is_chain_map(shift_compat_iso(x, i, L)));
      CHECK(is_chain_map(shift_compat_iso(x, i, L, SignRule::PerturbedShiftP)));
    }
  }
}
