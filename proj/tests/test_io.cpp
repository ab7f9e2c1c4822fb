#include <doctest.h>

#include "koszul/corpus.hpp"
#include "koszul/errors.hpp"
#include "koszul/io.hpp"

using namespace koszul;

TEST_CASE("module JSON round trip") {
  Rng rng(2);
  for (const auto& n : corpus_names()) {
    AlgebraPtr A = GradedAlgebra::make(corpus_presentation(n));
    for (int s = 0; s < 3; ++s) {
      GradedModule m = random_module(A, rng);
      Json j = module_to_json(m);
      CHECK(j["schema"] == 1);
      GradedModule back = module_from_json(Json::parse(j.dump()), A);
      m.trim();
      back.trim();
      CHECK_MESSAGE(back == m, n);
    }
  }
}

TEST_CASE("module files by index and with integer scalars") {
  AlgebraPtr a3 = GradedAlgebra::make(corpus_presentation("RSZ_A3"));
  Json j = Json::parse(R"({"dims": [[0, 0, 1], ["2", 1, 1]], "action": {"a": [[0, [[1]]]]}})");
  GradedModule m = module_from_json(j, a3);
  CHECK(m.total_dim() == 2);
  CHECK(is_isomorphic(m, projective(a3, 0, 0)) == IsoAnswer::Yes);
}

TEST_CASE("bad module files") {
  AlgebraPtr e1 = GradedAlgebra::make(corpus_presentation("EXT1"));
  CHECK_THROWS_AS(module_from_json(Json::parse(R"({"dims": [["w", 0, 1]]})"), e1), ParseError);
  CHECK_THROWS_AS(module_from_json(Json::parse(R"({"dims": [["v", 0, 1]], "action": {"z": []}})"), e1), ParseError);
  CHECK_THROWS_AS(module_from_json(Json::parse(R"({"nodims": 1})"), e1), ParseError);
  // a*a acting nonzero violates the relation.
  Json bad = Json::parse(
      R"({"dims": [["v", 0, 1], ["v", 1, 1], ["v", 2, 1]], "action": {"a": [[0, [["1"]]], [1, [["1"]]]]}})");
  CHECK_THROWS_AS(module_from_json(bad, e1), ParseError);
}

TEST_CASE("report and table JSON carry the schema") {
  ExtTable t = ext_simple_table(GradedAlgebra::make(corpus_presentation("EXT1")), 2);
  Json j = ext_table_to_json(t);
  CHECK(j["schema"] == kSchemaVersion);
  CHECK(j["horizon"] == 2);
  CHECK(j["entries"].size() == 3);
  CHECK(j["entries"][1] == Json::array({1, 0, 0, 1, 1}));
  VerificationReport r = verify_involution(corpus_presentation("EXT2"));
  Json rj = report_to_json(r);
  CHECK(rj["verdict"] == "Pass");
  CHECK(rj["failures"] == 0);
  CHECK(report_to_json(r).dump() == rj.dump());
}

TEST_CASE("presentation JSON") {
  Json j = presentation_to_json(quadratic_dual(corpus_presentation("RSZ_A3")));
  CHECK(j["relations"].empty());
  CHECK(j["arrows"].size() == 2);
  CHECK(j["arrows"][0] == Json::array({"a", "2", "1"}));
}
