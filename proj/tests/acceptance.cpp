// Acceptance suite: one PASS/FAIL line per criterion.
//   koszul_acceptance            run all
//   koszul_acceptance --only 7   run criterion 7
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "koszul/corpus.hpp"
#include "koszul/errors.hpp"
#include "koszul/resolution.hpp"
#include "koszul/sampling.hpp"
#include "koszul/verifier.hpp"

using namespace koszul;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      else detail.str("");
      pass = false;
      detail << what;
    }
  }
};

const std::vector<std::string> kKoszulSix = {"EXT1", "EXT2", "RSZ_A3", "BEIL_1", "BEIL_2", "REM21"};

std::string summary(const VerificationReport& r) {
  std::ostringstream s;
  s << r.algebra << ":" << to_string(r.verdict) << "(" << r.rows.size() << " rows";
  if (r.verdict != Verdict::Pass) s << ", first " << r.witness;
  s << ")";
  return s.str();
}

void c1(Outcome& o) {
  std::size_t n = 0;
  for (const auto& name : corpus_names()) {
    VerificationReport r = verify_involution(corpus_presentation(name));
    o.require(r.verdict == Verdict::Pass, summary(r));
    ++n;
  }
  Rng rng(1);
  for (int s = 0; s < 100; ++s) {
    FieldSpec f = s % 2 ? FieldSpec::rationals() : FieldSpec::prime(5);
    QuadraticPresentation p = random_presentation(rng, f, 3, 4);
    VerificationReport r = verify_involution(p);
    o.require(r.verdict == Verdict::Pass, "random #" + std::to_string(s) + " " + summary(r));
    ++n;
  }
  if (o.pass) o.detail << n << " presentations, (L!)! == L";
}

void c2(Outcome& o) {
  QuadraticPresentation d = quadratic_dual(corpus_presentation("EXT2"));
  o.require(d.same_algebra(corpus_presentation("SYM2")), "dual(EXT2) != SYM2");
  QuadraticPresentation a = quadratic_dual(corpus_presentation("RSZ_A3"));
  o.require(a.relation_count() == 0, "dual(RSZ_A3) has relations");
  if (o.pass) o.detail << "EXT2! = SYM2, RSZ_A3! has 0 relations";
}

void c3(Outcome& o) {
  for (const auto& n : kKoszulSix) {
    KoszulCertificate c = koszulity_check(parse_raw_presentation(*corpus_source(n)), 6);
    o.require(c.verdict == KoszulVerdict::KoszulUpTo && c.horizon == 6, n + ": " + to_string(c.verdict));
  }
  KoszulCertificate c =
      koszulity_check(parse_raw_presentation("algebra C over Q\nvertices v\narrow a : v -> v\nrelation a*a*a\n"), 6);
  o.require(c.verdict == KoszulVerdict::NotQuadraticIdeal && c.offending_term == "a*a*a",
            "cubic: " + to_string(c.verdict));
  if (o.pass) o.detail << "6 x KoszulUpTo(6), cubic -> NotQuadraticIdeal at line " << c.offending_line;
}

void c4(Outcome& o) {
  for (const auto& n : corpus_names()) {
    AlgebraPtr a = GradedAlgebra::make(corpus_presentation(n));
    std::optional<int> cut = default_truncation(*a, 6);
    o.require(linearity_scan(a, 6, cut) == offdiagonal_ext_scan(a, 6, cut), n + ": scans disagree");
  }
  if (o.pass) o.detail << corpus_names().size() << " algebras, n <= 6";
}

void c5(Outcome& o) {
  for (const auto& p : {corpus_presentation("EXT1"), path_algebra_a3()}) {
    VerificationReport r = verify_resolution_identity(p, 2, 6);
    o.require(r.verdict == Verdict::Pass, summary(r));
    if (o.pass) o.detail << (o.detail.tellp() > 0 ? " " : "") << summary(r);
  }
}

void c6(Outcome& o) {
  std::size_t rows = 0, inconclusive = 0;
  for (const auto& p : {corpus_presentation("EXT1"), path_algebra_a3()}) {
    VerificationReport r = verify_generator_homs(p, 3, 6);
    o.require(r.count(Verdict::Fail) == 0, summary(r));
    rows += r.rows.size();
    inconclusive += r.count(Verdict::Inconclusive);
  }
  o.require(rows >= 50, "only " + std::to_string(rows) + " tuples");
  if (o.pass) o.detail << rows << " tuples, 0 fail, " << inconclusive << " inconclusive";
}

void c7(Outcome& o) {
  std::size_t rows = 0;
  for (const auto& n : corpus_names()) {
    VerificationReport r = verify_null_homotopy(corpus_presentation(n), 20, 7);
    o.require(r.verdict == Verdict::Pass, summary(r));
    rows += r.rows.size();
  }
  if (o.pass) o.detail << rows << " samples";
}

void c8(Outcome& o) {
  std::size_t caught = 0;
  for (const auto& n : corpus_names()) {
    VerificationReport r = verify_shift_compat(corpus_presentation(n), 5, 8);
    o.require(r.verdict == Verdict::Pass, summary(r));
    caught += r.parameters.at("drop_component_sign_failures");
  }
  o.require(caught > 0, "perturbed sign never detected");
  if (o.pass) o.detail << "verbatim sign is a natural chain iso; perturbed sign rejected " << caught << " times";
}

void c9(Outcome& o) {
  std::size_t rows = 0;
  for (const auto& n : corpus_names()) {
    VerificationReport r = verify_precovering(corpus_presentation(n), 50, n == "EXT1" ? 10 : 0, 9);
    o.require(r.verdict == Verdict::Pass, summary(r));
    rows += r.rows.size();
  }
  if (o.pass) o.detail << rows << " pairs";
}

void c10(Outcome& o) {
  VerificationReport r = verify_orbit_suite(path_algebra_a3(), 3, 6);
  o.require(r.verdict == Verdict::Pass, summary(r));
  if (o.pass) o.detail << summary(r);
}

void c11(Outcome& o) {
  o.require(calibrate_hilbert_orientation(6) == kHilbertOrientation, "calibration does not reproduce the pinned orientation");
  for (const auto& n : corpus_names()) {
    VerificationReport r = hilbert_diagnostic(corpus_presentation(n), 6);
    o.require(r.verdict == Verdict::Pass, summary(r));
  }
  if (o.pass) o.detail << "orientation " << to_string(kHilbertOrientation) << ", corpus through t^6";
}

void c12(Outcome& o) {
  AlgebraPtr e1 = GradedAlgebra::make(corpus_presentation("EXT1"));
  GradedModule s = simple(e1, 0, 0);
  o.require(is_isomorphic(syzygy(s), simple(e1, 0, -1)) == IsoAnswer::Yes, "EXT1: syzygy(S) is not S<-1>");
  o.require(stable_hom(s, s) == 1, "EXT1: stable Hom(S, S) != 1");
  VerificationReport r = verify_stable_hom(corpus_presentation("EXT2"), 12);
  o.require(r.verdict == Verdict::Pass, summary(r));
  if (o.pass) o.detail << "EXT1 syzygy(S) = S<-1>, stable Hom(S,S) = 1; " << summary(r);
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all = {
      {1, "duality involution", c1},       {2, "dual identification", c2},
      {3, "Koszulity on the corpus", c3},  {4, "linearity scan equivalence", c4},
      {5, "resolution via K", c5},         {6, "Hom on generators", c6},
      {7, "null-homotopic stability", c7}, {8, "shift compatibility signs", c8},
      {9, "precovering", c9},              {10, "orbit category Homs", c10},
      {11, "Hilbert series identity", c11}, {12, "stable category", c12},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: koszul_acceptance [--only N]\n";
      return 2;
    }
  }
  int failed = 0;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "[PASS] #" : "[FAIL] #") << c.id << " " << c.name << ": " << o.detail.str() << std::endl;
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
