#include "koszul/corpus.hpp"

#include <map>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

std::string beilinson(int d) {
  std::string s = "algebra BEIL_" + std::to_string(d) + " over Q\nvertices";
  for (int r = 0; r <= d; ++r) s += " " + std::to_string(r);
  s += "\n";
  auto x = [](int a, int r) { return "x_" + std::to_string(a) + "^(" + std::to_string(r) + ")"; };
  for (int r = 0; r < d; ++r)
    for (int a = 0; a <= d; ++a)
      s += "arrow " + x(a, r) + " : " + std::to_string(r) + " -> " + std::to_string(r + 1) + "\n";
  for (int r = 0; r + 1 < d; ++r)
    for (int a = 0; a <= d; ++a)
      for (int b = a + 1; b <= d; ++b)
        s += "relation " + x(a, r + 1) + "*" + x(b, r) + " - " + x(b, r + 1) + "*" + x(a, r) + "\n";
  return s;
}

const std::map<std::string, std::string>& sources() {
  static const std::map<std::string, std::string> m = {
      {"EXT1",
       "algebra EXT1 over Q\n"
       "vertices v\n"
       "arrow a : v -> v\n"
       "relation a*a\n"},
      {"EXT2",
       "algebra EXT2 over Q\n"
       "vertices v\n"
       "arrow a : v -> v\n"
       "arrow b : v -> v\n"
       "relation a*a\n"
       "relation b*b\n"
       "relation a*b + b*a\n"},
      {"SYM2",
       "algebra SYM2 over Q\n"
       "vertices v\n"
       "arrow a : v -> v\n"
       "arrow b : v -> v\n"
       "relation a*b - b*a\n"},
      {"RSZ_A3",
       "algebra RSZ_A3 over Q\n"
       "vertices 1 2 3\n"
       "arrow a : 1 -> 2\n"
       "arrow b : 2 -> 3\n"
       "relation b*a\n"},
      {"BEIL_1", beilinson(1)},
      {"BEIL_2", beilinson(2)},
      {"REM21",
       "algebra REM21 over Q\n"
       "vertices x y\n"
       "arrow alpha : x -> y\n"
       "arrow beta : y -> y\n"
       "arrow gamma : x -> x\n"
       "relation beta*beta\n"
       "relation gamma*gamma\n"
       "relation beta*alpha - alpha*gamma\n"},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {"EXT1", "EXT2", "SYM2", "RSZ_A3", "BEIL_1", "BEIL_2", "REM21"};
  return names;
}

std::optional<std::string> corpus_source(const std::string& name) {
  auto it = sources().find(name);
  if (it == sources().end()) return std::nullopt;
  return it->second;
}

QuadraticPresentation corpus_presentation(const std::string& name) {
  auto src = corpus_source(name);
  if (!src) throw Error("unknown corpus algebra '" + name + "'");
  return parse_presentation(*src);
}

QuadraticPresentation path_algebra_a3() {
  return parse_presentation(
      "algebra KA3 over Q\n"
      "vertices 1 2 3\n"
      "arrow a : 1 -> 2\n"
      "arrow b : 2 -> 3\n");
}

}  // namespace koszul
