#include <doctest.h>

#include "koszul/corpus.hpp"
#include "koszul/errors.hpp"
#include "koszul/graded_algebra.hpp"
#include "koszul/presentation.hpp"
#include "koszul/sampling.hpp"

using namespace koszul;

namespace {

std::size_t block_relations(const QuadraticPresentation& p, const std::string& x, const std::string& z) {
  const Quiver& q = p.quiver();
  return p.block(*q.find_vertex(x), *q.find_vertex(z)).relations.dim();
}

}  // namespace

TEST_CASE("parse REM21") {
  QuadraticPresentation p = corpus_presentation("REM21");
  CHECK(block_relations(p, "y", "y") == 1);
  CHECK(block_relations(p, "x", "x") == 1);
  CHECK(block_relations(p, "x", "y") == 1);
  CHECK(p.relation_count() == 3);
  const Quiver& q = p.quiver();
  int x = *q.find_vertex("x"), y = *q.find_vertex("y");
  const RelationBlock& b = p.block(x, y);
  REQUIRE(b.paths.size() == 2);
  // beta*alpha - alpha*gamma
  Vec v(2);
  for (std::size_t i = 0; i < 2; ++i)
    v[i] = path_to_string(q, b.paths[i]) == "beta*alpha" ? p.field().one() : -p.field().one();
  CHECK(b.relations.contains(v));
}

TEST_CASE("parse EXT1 and EXT2") {
  CHECK(corpus_presentation("EXT1").relation_count() == 1);
  QuadraticPresentation e2 = corpus_presentation("EXT2");
  CHECK(e2.relation_count() == 3);
  CHECK(e2.block(0, 0).paths.size() == 4);
}

TEST_CASE("parse errors carry locations") {
  try {
    parse_presentation("algebra A over Q\nvertices v\narrow a : v -> w\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_presentation("algebra A over Q\nvertices v\narrow a : v -> v\nrelation a*a*a\n"), NotQuadratic);
  CHECK_THROWS_AS(parse_presentation("algebra A over R\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("algebra A over Q\nvertices v\narrow a : v -> v\nrelation a*a + a\n"), ParseError);
}

TEST_CASE("GF(p) presentations") {
  QuadraticPresentation p = parse_presentation("algebra A over GF 5\nvertices v\narrow a : v -> v\nrelation 6*a*a\n");
  CHECK(p.field() == FieldSpec::prime(5));
  CHECK(p.relation_count() == 1);
  CHECK(parse_presentation("algebra A over GF(7)\nvertices v\n").field() == FieldSpec::prime(7));
}

TEST_CASE("DSL round trip") {
  for (const auto& n : corpus_names()) {
    QuadraticPresentation p = corpus_presentation(n);
    CHECK_MESSAGE(parse_presentation(to_dsl(p)).same_algebra(p), n);
  }
}

TEST_CASE("associated quadratic part") {
  const char* head = "algebra A over Q\nvertices v\narrow a : v -> v\narrow b : v -> v\n";
  RawPresentation cubic = parse_raw_presentation(std::string(head) + "relation a*a*b\n");
  CHECK_FALSE(cubic.is_quadratic());
  CHECK(associated_quadratic(cubic).relation_count() == 0);
  RawPresentation mixed = parse_raw_presentation(std::string(head) + "relation a*a\nrelation a*a*b\n");
  QuadraticPresentation q = associated_quadratic(mixed);
  CHECK(q.relation_count() == 1);
  CHECK(q.same_algebra(parse_presentation(std::string(head) + "relation a*a\n")));
  QuadraticPresentation e2 = corpus_presentation("EXT2");
  CHECK(associated_quadratic(parse_raw_presentation(*corpus_source("EXT2"))).same_algebra(e2));
}

TEST_CASE("well-directed quivers") {
  WellDirected a3 = is_well_directed(corpus_presentation("RSZ_A3").quiver());
  CHECK(a3.ok);
  CHECK(a3.order == std::vector<int>{0, 1, 2});
  CHECK_FALSE(is_well_directed(corpus_presentation("EXT1").quiver()).ok);
  CHECK(is_well_directed(corpus_presentation("BEIL_1").quiver()).ok);
}

TEST_CASE("quadratic dual oracles") {
  QuadraticPresentation d = quadratic_dual(corpus_presentation("RSZ_A3"));
  CHECK(d.relation_count() == 0);
  CHECK(d.quiver() == corpus_presentation("RSZ_A3").quiver().opposite());
  CHECK(quadratic_dual(corpus_presentation("EXT2")).same_algebra(corpus_presentation("SYM2")));
  CHECK(quadratic_dual(corpus_presentation("SYM2")).same_algebra(corpus_presentation("EXT2")));
  for (const auto& n : corpus_names()) {
    QuadraticPresentation p = corpus_presentation(n);
    CHECK_MESSAGE(quadratic_dual(quadratic_dual(p)).same_algebra(p), n);
  }
}

TEST_CASE("dual dimension complementarity on random presentations") {
  Rng rng(7);
  for (int s = 0; s < 40; ++s) {
    FieldSpec f = s % 2 ? FieldSpec::prime(5) : FieldSpec::rationals();
    QuadraticPresentation p = random_presentation(rng, f);
    QuadraticPresentation d = quadratic_dual(p);
    for (const auto& [k, b] : p.blocks()) {
      // Block (x, z) of the dual lives on the opposite quiver as block (z, x).
      const RelationBlock& bd = d.block(k.second, k.first);
      CHECK(bd.paths.size() == b.paths.size());
      CHECK(b.relations.dim() + bd.relations.dim() == b.paths.size());
    }
    CHECK(quadratic_dual(d).same_algebra(p));
  }
}

TEST_CASE("degree bases and multiplication") {
  AlgebraPtr e2 = GradedAlgebra::make(corpus_presentation("EXT2"));
  CHECK(e2->total_dim(2) == 1);
  CHECK(e2->total_dim(3) == 0);
  AlgebraPtr s2 = GradedAlgebra::make(corpus_presentation("SYM2"));
  CHECK(s2->total_dim(3) == 4);
  for (int n = 0; n <= 6; ++n) CHECK(s2->total_dim(static_cast<int>(n)) == static_cast<std::size_t>(n + 1));

  AlgebraPtr e1 = GradedAlgebra::make(corpus_presentation("EXT1"));
  AlgElem a = e1->path_element({0, 0, {0}});
  CHECK(e1->multiply(a, a).is_zero());

  AlgElem ea = e2->path_element({0, 0, {0}}), eb = e2->path_element({0, 0, {1}});
  AlgElem ab = e2->multiply(ea, eb), ba = e2->multiply(eb, ea);
  CHECK_FALSE(ab.is_zero());
  CHECK(e2->equal(ab, e2->scale(ba, Scalar(-1))));
  CHECK(e2->equal(e2->multiply(e2->unit(0), ab), ab));

  for (const auto& n : corpus_names()) {
    AlgebraPtr A = GradedAlgebra::make(corpus_presentation(n));
    for (int x = 0; x < A->vertex_count(); ++x)
      for (int z = 0; z < A->vertex_count(); ++z) CHECK(A->dim(x, z, 0) == (x == z ? 1u : 0u));
  }
}

TEST_CASE("hilbert block series") {
  auto series = [](const std::string& n, int N) {
    auto h = hilbert_block_series(*GradedAlgebra::make(corpus_presentation(n)), N);
    std::vector<std::size_t> out;
    for (const auto& m : h) out.push_back(m[0][0]);
    return out;
  };
  CHECK(series("EXT1", 4) == std::vector<std::size_t>{1, 1, 0, 0, 0});
  CHECK(series("EXT2", 4) == std::vector<std::size_t>{1, 2, 1, 0, 0});
  CHECK(series("SYM2", 4) == std::vector<std::size_t>{1, 2, 3, 4, 5});
}
