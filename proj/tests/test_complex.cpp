#include <doctest.h>

#include "koszul/complex.hpp"
#include "koszul/corpus.hpp"
#include "koszul/sampling.hpp"
#include "koszul/symbolic.hpp"

using namespace koszul;

namespace {

AlgebraPtr alg(const std::string& n) { return GradedAlgebra::make(corpus_presentation(n)); }

// P<-1> --a--> P over EXT1 at positions -1, 0.
SymbolicComplex two_term_ext1(const AlgebraPtr& a) {
  SymbolicComplex c(a);
  c.set_term(-1, {{0, -1}});
  c.set_term(0, {{0, 0}});
  SymbolicMatrix d({{0, 0}}, {{0, -1}});
  d.set(0, 0, a->path_element({0, 0, {0}}));
  c.set_diff(-1, d);
  return c;
}

}  // namespace

TEST_CASE("shift of complexes") {
  AlgebraPtr e1 = alg("EXT1");
  ModuleComplex x = materialize(two_term_ext1(e1));
  CHECK(shift(x, 0).lo() == x.lo());
  ModuleComplex y = shift(x, 2);
  CHECK(y.lo() == x.lo() - 2);
  CHECK(y.diff(y.lo()).at(0, 0) == x.diff(x.lo()).at(0, 0));
  ModuleComplex z = shift(shift(x, 1), -1);
  for (int p = x.lo(); p < x.hi(); ++p) CHECK(z.diff(p).at(0, 0) == x.diff(p).at(0, 0));
  CHECK(shift(x, 1).diff(-2).at(0, 0) == x.diff(-1).at(0, 0).scaled(Scalar(-1)));
}

TEST_CASE("cohomology oracles") {
  AlgebraPtr e1 = alg("EXT1");
  GradedModule s = simple(e1, 0, 0);
  ModuleComplex st = stalk(s, 3);
  CHECK(cohomology(st, 3) == s);
  CHECK(cohomology(st, 2).is_zero());

  ModuleComplex idc(e1);
  GradedModule p = projective(e1, 0, 0);
  idc.set_term(0, p);
  idc.set_term(1, p);
  idc.set_diff(0, identity_morphism(p));
  CHECK(is_acyclic(idc));

  ModuleComplex x = materialize(two_term_ext1(e1));
  REQUIRE(x.is_complex());
  CHECK(is_isomorphic(cohomology(x, 0), simple(e1, 0, 0)) == IsoAnswer::Yes);
  CHECK(is_isomorphic(cohomology(x, -1), simple(e1, 0, -2)) == IsoAnswer::Yes);
}

TEST_CASE("cones") {
  AlgebraPtr e1 = alg("EXT1");
  ModuleComplex x = materialize(two_term_ext1(e1));
  CHECK(is_acyclic(cone(identity_chain_map(x))));

  // P<-1> --a--> P as the cone of a map of stalks.
  GradedModule p = projective(e1, 0, 0), q = projective(e1, 0, -1);
  auto homs = hom_graded(q, p);
  REQUIRE(homs.size() == 1);
  ChainMap f{stalk(q, 0), stalk(p, 0), {{0, homs[0]}}};
  ModuleComplex c = cone(f);
  CHECK(is_isomorphic(cohomology(c, 0), simple(e1, 0, 0)) == IsoAnswer::Yes);
  CHECK(is_isomorphic(cohomology(c, -1), simple(e1, 0, -2)) == IsoAnswer::Yes);

  ModuleComplex y = stalk(simple(e1, 0, 0), 0);
  ModuleComplex c0 = cone(zero_chain_map(x, y));
  CHECK(is_isomorphic(c0, direct_sum(y, shift(x, 1))) == IsoAnswer::Yes);
}

TEST_CASE("total complex signs") {
  AlgebraPtr e2 = alg("EXT2");
  SymbolicDoubleComplex d{e2, {}, {}, {}};
  // Single column at p = 1: vertical differential picks up (-1)^1.
  d.terms[{1, 0}] = {{0, 0}};
  d.terms[{1, 1}] = {{0, 1}};
  SymbolicMatrix v({{0, 1}}, {{0, 0}});
  v.set(0, 0, e2->path_element({0, 0, {0}}));
  d.d2[{1, 0}] = v;
  SymbolicComplex t = tot(d);
  CHECK(equal(*e2, t.diff(1), scaled(*e2, v, Scalar(-1))));

  // 2x2 square with anticommuting corners over EXT2: a*b = -b*a.
  SymbolicDoubleComplex sq{e2, {}, {}, {}};
  sq.terms[{0, 0}] = {{0, 0}};
  sq.terms[{1, 0}] = {{0, 1}};
  sq.terms[{0, 1}] = {{0, 1}};
  sq.terms[{1, 1}] = {{0, 2}};
  auto arrow = [&](std::vector<Generator> r, std::vector<Generator> c, int a) {
    SymbolicMatrix m(std::move(r), std::move(c));
    m.set(0, 0, e2->path_element({0, 0, {a}}));
    return m;
  };
  sq.d1[{0, 0}] = arrow({{0, 1}}, {{0, 0}}, 0);
  sq.d1[{0, 1}] = arrow({{0, 2}}, {{0, 1}}, 0);
  sq.d2[{0, 0}] = arrow({{0, 1}}, {{0, 0}}, 1);
  sq.d2[{1, 0}] = arrow({{0, 2}}, {{0, 1}}, 1);
  CHECK_FALSE(sq.commutes());
  // Right multiplication: the two composites are a*b and b*a, which differ by a sign.
  SymbolicDoubleComplex fixed = sq;
  fixed.d2[{1, 0}] = scaled(*e2, sq.d2[{1, 0}], Scalar(-1));
  CHECK(fixed.commutes());
  CHECK(tot(fixed).d_squared_zero());
}

TEST_CASE("linearity, minimality, null homotopies") {
  AlgebraPtr e1 = alg("EXT1");
  SymbolicComplex x = two_term_ext1(e1);
  CHECK(x.is_minimal());
  CHECK(x.is_linear());
  CHECK(shift(x, 0).is_minimal());
  SymbolicComplex bad(e1);
  bad.set_term(0, {{0, 1}});
  CHECK_FALSE(bad.is_linear());
  SymbolicComplex good(e1);
  good.set_term(0, {{0, 0}});
  good.set_term(1, {{0, 1}});
  CHECK(good.is_linear());

  ModuleComplex m = materialize(x);
  HomK h = hom_k(m, m);
  CHECK(h.chain_maps >= 1);
  CHECK(h.dim() >= 1);
  CHECK(hom_k_ungraded(m, m).dim() == hom_k_total_dim(m, m));
}

TEST_CASE("brutal and good truncations") {
  AlgebraPtr e1 = alg("EXT1");
  ModuleComplex x = materialize(two_term_ext1(e1));
  ModuleComplex b = brutal_truncate(x, 0, 0);
  CHECK(b.lo() == 0);
  CHECK(b.hi() == 0);
  ModuleComplex le = truncate_le(x, -1);
  CHECK(is_isomorphic(cohomology(le, -1), cohomology(x, -1)) == IsoAnswer::Yes);
  ModuleComplex ge = truncate_ge(x, 0);
  CHECK(is_isomorphic(cohomology(ge, 0), cohomology(x, 0)) == IsoAnswer::Yes);
}
