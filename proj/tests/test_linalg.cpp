#include <doctest.h>

#include "koszul/errors.hpp"
#include "koszul/matrix.hpp"

using namespace koszul;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Matrix rows(FieldSpec f, std::vector<std::vector<int>> r) {
  std::vector<Vec> v;
  for (auto& row : r) {
    Vec x;
    for (int e : row) x.push_back(f.from_int(e));
    v.push_back(x);
  }
  return Matrix::from_rows(f, v, r.empty() ? 0 : r.front().size());
}

}  // namespace

TEST_CASE("scalar arithmetic over Q and GF(p)") {
  Scalar h = Q.parse("1/2");
  CHECK(h + h == Q.one());
  CHECK((Q.parse("2/3") * Q.parse("3/4")).str() == "1/2");
  FieldSpec f5 = FieldSpec::prime(5);
  CHECK(f5.from_int(3) * f5.from_int(2) == f5.one());
  CHECK(f5.from_int(2).inverse() == f5.from_int(3));
  CHECK(f5.parse("1/2") == f5.from_int(3));
  CHECK(f5.from_int(-1) == f5.from_int(4));
  CHECK(f5.name() == "GF(5)");
  CHECK_THROWS_AS(FieldSpec::prime(6), Error);
  CHECK_THROWS(Q.zero().inverse());
}

TEST_CASE("rref oracles") {
  RrefResult id = rref(Matrix::identity(Q, 2));
  CHECK(id.reduced == Matrix::identity(Q, 2));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});

  FieldSpec f2 = FieldSpec::prime(2);
  RrefResult r = rref(rows(f2, {{1, 1}, {1, 1}}));
  CHECK(r.reduced == rows(f2, {{1, 1}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});

  RrefResult z = rref(Matrix(Q, 3, 3));
  CHECK(z.reduced.rows() == 0);
  CHECK(z.pivots.empty());

  RrefResult g = rref(rows(Q, {{2, 4, 6}, {1, 1, 1}}));
  CHECK(g.reduced == rows(Q, {{1, 0, -1}, {0, 1, 2}}));
}

TEST_CASE("kernel oracles") {
  CHECK(kernel(Matrix::identity(Q, 3)).dim() == 0);
  Subspace k = kernel(rows(Q, {{1, 1}}));
  CHECK(k.dim() == 1);
  CHECK(k.contains(Vec{Q.one(), -Q.one()}));
  CHECK(kernel(Matrix(Q, 2, 3)).dim() == 3);
}

TEST_CASE("annihilator oracles") {
  Subspace s = Subspace::span(rows(Q, {{1, 0, 0}, {0, 1, 0}}));
  Subspace a = annihilator(s);
  CHECK(a.dim() == 1);
  CHECK(a.contains(Vec{Q.zero(), Q.zero(), Q.one()}));
  CHECK(annihilator(Subspace(Q, 2)).dim() == 2);
  Subspace b = annihilator(Subspace::span(rows(Q, {{1, 1}})));
  CHECK(b == Subspace::span(rows(Q, {{1, -1}})));
}

TEST_CASE("rank, inverse, solve") {
  Matrix m = rows(Q, {{1, 2}, {3, 4}});
  CHECK(rank(m) == 2);
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix::identity(Q, 2));
  CHECK_FALSE(inverse(rows(Q, {{1, 2}, {2, 4}})));
  Matrix b = rows(Q, {{5}, {11}});
  auto x = solve(m, b);
  REQUIRE(x);
  CHECK(m * *x == b);
  CHECK_FALSE(solve(rows(Q, {{1, 1}, {1, 1}}), rows(Q, {{1}, {2}})));
}

TEST_CASE("subspace sum and intersection") {
  Subspace a = Subspace::span(rows(Q, {{1, 0, 0}, {0, 1, 0}}));
  Subspace b = Subspace::span(rows(Q, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(subspace_sum(a, b).dim() == 3);
  Subspace i = intersection(a, b);
  CHECK(i.dim() == 1);
  CHECK(i.contains(Vec{Q.zero(), Q.one(), Q.zero()}));
  CHECK(complement_coordinates(a) == std::vector<std::size_t>{2});
}
