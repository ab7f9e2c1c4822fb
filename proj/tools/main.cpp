#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "koszul/corpus.hpp"
#include "koszul/errors.hpp"
#include "koszul/io.hpp"
#include "koszul/koszul_functor.hpp"
#include "koszul/resolution.hpp"
#include "koszul/verifier.hpp"

namespace {

using namespace koszul;

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kInconclusive = 3 };

struct Config {
  std::string format = "json";
  std::string field;
  int horizon = 6;
  int window = 3;
  std::uint64_t seed = 1;
  int samples = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A file path, or a corpus name when no such file exists.
std::string algebra_text(const std::string& ref) {
  if (std::filesystem::exists(ref)) return read_text(ref);
  if (auto s = corpus_source(ref)) return *s;
  throw UsageError("'" + ref + "' is neither a readable file nor a corpus name");
}

QuadraticPresentation load(const std::string& ref, const Config& cfg) {
  QuadraticPresentation p = parse_presentation(algebra_text(ref));
  if (!cfg.field.empty()) {
    FieldSpec f;
    if (cfg.field == "Q") {
      f = FieldSpec::rationals();
    } else if (cfg.field.rfind("GF", 0) == 0) {
      std::string digits = cfg.field.substr(2);
      if (!digits.empty() && digits.front() == '(') digits = digits.substr(1, digits.size() - 2);
      f = FieldSpec::prime(std::stoll(digits));
    } else {
      throw UsageError("unknown field '" + cfg.field + "' (use Q or GF<p>)");
    }
    p = change_field(p, f);
  }
  return p;
}

GradedModule load_module(const std::string& path, const AlgebraPtr& a) {
  Json j;
  try {
    j = Json::parse(read_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("module file: ") + e.what());
  }
  return module_from_json(j, a);
}

void emit(const Config& cfg, const Json& j, const std::string& text) {
  if (cfg.format == "table")
    std::cout << text;
  else
    std::cout << j.dump(2) << "\n";
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Pass: return kOk;
    case Verdict::Fail: return kFail;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kFail;
}

int cmd_parse(const Config& cfg, const std::string& file) {
  std::vector<std::string> warnings;
  QuadraticPresentation p = parse_presentation(algebra_text(file), &warnings);
  Json j = presentation_to_json(p);
  j["warnings"] = warnings;
  emit(cfg, j, to_dsl(p));
  return kOk;
}

int cmd_dual(const Config& cfg, const std::string& file) {
  QuadraticPresentation d = quadratic_dual(load(file, cfg));
  emit(cfg, presentation_to_json(d), to_dsl(d));
  return kOk;
}

int cmd_koszul_check(const Config& cfg, const std::string& file) {
  RawPresentation raw = parse_raw_presentation(algebra_text(file));
  KoszulCertificate c = koszulity_check(raw, cfg.horizon);
  Json j = certificate_to_json(c);
  j["algebra"] = raw.name;
  std::ostringstream os;
  os << raw.name << ": " << to_string(c.verdict) << "(" << c.horizon << ")";
  if (c.verdict == KoszulVerdict::FailsAt)
    os << " witness Ext^" << c.witness.n << "(S_" << c.witness.x << ", S_" << c.witness.y << "<-" << c.witness.i
       << ">) = " << c.witness.dim;
  if (c.verdict == KoszulVerdict::NotQuadraticIdeal)
    os << " term '" << c.offending_term << "' at line " << c.offending_line;
  os << "\n";
  if (c.verdict != KoszulVerdict::NotQuadraticIdeal) os << ext_table_text(c.evidence);
  emit(cfg, j, os.str());
  return c.verdict == KoszulVerdict::KoszulUpTo ? kOk : kFail;
}

int cmd_resolve(const Config& cfg, const std::string& file, const std::string& mfile) {
  AlgebraPtr a = GradedAlgebra::make(load(file, cfg));
  GradedModule m = load_module(mfile, a);
  std::optional<int> cut;
  if (!a->is_finite_dimensional()) cut = m.max_degree() + cfg.horizon + 2;
  ResolutionResult r = minimal_projective_resolution(m, cfg.horizon, cut);
  Json j = complex_to_json(r.complex);
  j["horizon"] = cfg.horizon;
  j["complete"] = r.complete;
  if (r.max_degree) j["max_degree"] = *r.max_degree;
  std::string text = complex_text(r.complex) + (r.complete ? "complete\n" : "truncated at the horizon\n");
  emit(cfg, j, text);
  return kOk;
}

int cmd_ext_table(const Config& cfg, const std::string& file) {
  ExtTable t = ext_simple_table(GradedAlgebra::make(load(file, cfg)), cfg.horizon);
  emit(cfg, ext_table_to_json(t), ext_table_text(t));
  return kOk;
}

int cmd_kfunctor(const Config& cfg, const std::string& file, const std::string& mfile) {
  AlgebraPtr a = GradedAlgebra::make(load(file, cfg));
  GradedModule m = load_module(mfile, a);
  AlgebraPtr target = dual_algebra(*a);
  KOutput k = k_module(m, target);
  Json j = complex_to_json(k.complex);
  j["source_algebra"] = a->presentation().name();
  j["linear"] = k.complex.is_linear();
  emit(cfg, j, complex_text(k.complex));
  return kOk;
}

int cmd_hilbert(const Config& cfg, const std::string& file, int n) {
  VerificationReport r = hilbert_diagnostic(load(file, cfg), n);
  emit(cfg, report_to_json(r), report_text(r));
  return exit_for(r.verdict);
}

int cmd_verify(const Config& cfg, const std::string& identity, const std::string& file) {
  QuadraticPresentation p = load(file, cfg);
  VerificationReport r;
  auto samples = [&](int dflt) { return cfg.samples > 0 ? cfg.samples : dflt; };
  if (identity == "involution")
    r = verify_involution(p);
  else if (identity == "generator-homs")
    r = verify_generator_homs(p, cfg.window, cfg.horizon);
  else if (identity == "precovering")
    r = verify_precovering(p, samples(50), samples(50) / 5, cfg.seed);
  else if (identity == "orbit-homs")
    r = verify_orbit_suite(p, cfg.window, cfg.horizon);
  else if (identity == "hilbert")
    r = hilbert_diagnostic(p, cfg.horizon);
  else if (identity == "null-homotopy")
    r = verify_null_homotopy(p, samples(20), cfg.seed);
  else if (identity == "shift-compat")
    r = verify_shift_compat(p, samples(5), cfg.seed);
  else if (identity == "resolution-identity")
    r = verify_resolution_identity(p, cfg.window, cfg.horizon);
  else if (identity == "stable-hom")
    r = verify_stable_hom(p, cfg.seed);
  else
    throw UsageError("unknown identity '" + identity + "'");
  r.parameters["seed"] = static_cast<std::int64_t>(cfg.seed);
  emit(cfg, report_to_json(r), report_text(r));
  return exit_for(r.verdict);
}

int cmd_corpus(const Config& cfg, const std::string& action, const std::string& name) {
  if (action == "list") {
    Json j;
    j["schema"] = kSchemaVersion;
    j["corpus"] = corpus_names();
    std::string text;
    for (const auto& n : corpus_names()) text += n + "\n";
    emit(cfg, j, text);
    return kOk;
  }
  if (action == "emit") {
    auto src = corpus_source(name);
    if (!src) throw UsageError("unknown corpus algebra '" + name + "'");
    if (cfg.format == "json")
      std::cout << presentation_to_json(corpus_presentation(name)).dump(2) << "\n";
    else
      std::cout << *src;
    return kOk;
  }
  throw UsageError("corpus expects 'list' or 'emit <name>'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Koszul duality engine for bound quiver algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--field", cfg.field, "Override the ground field (Q or GF<p>)");

  std::string file, mfile, identity, action, name;
  int hilbert_n = 6;

  auto* parse = app.add_subcommand("parse", "Parse a presentation");
  parse->add_option("file", file, "Presentation file or corpus name")->required();
  auto* dual = app.add_subcommand("dual", "Quadratic dual presentation");
  dual->add_option("file", file)->required();
  auto* check = app.add_subcommand("koszul-check", "Koszulity up to a horizon");
  check->add_option("file", file)->required();
  check->add_option("--horizon", cfg.horizon)->check(CLI::PositiveNumber);
  auto* resolve = app.add_subcommand("resolve", "Minimal projective resolution of a module");
  resolve->add_option("file", file)->required();
  resolve->add_option("--module", mfile, "Module file (JSON)")->required();
  resolve->add_option("--horizon", cfg.horizon)->check(CLI::PositiveNumber);
  auto* ext = app.add_subcommand("ext-table", "Ext between simples");
  ext->add_option("file", file)->required();
  ext->add_option("--horizon", cfg.horizon)->check(CLI::PositiveNumber);
  auto* kf = app.add_subcommand("kfunctor", "K(M) over the quadratic dual");
  kf->add_option("file", file)->required();
  kf->add_option("--module", mfile, "Module file (JSON)")->required();
  auto* verify = app.add_subcommand("verify", "Verify a duality identity");
  verify->add_option("identity", identity,
                     "involution | generator-homs | precovering | orbit-homs | hilbert | null-homotopy | "
                     "shift-compat | resolution-identity | stable-hom")
      ->required();
  verify->add_option("file", file)->required();
  verify->add_option("--window", cfg.window)->check(CLI::NonNegativeNumber);
  verify->add_option("--horizon", cfg.horizon)->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--samples", cfg.samples, "Number of random samples (0 = default)");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series identity");
  hilbert->add_option("file", file)->required();
  hilbert->add_option("--n", hilbert_n)->check(CLI::NonNegativeNumber);
  auto* corpus = app.add_subcommand("corpus", "Built-in example algebras");
  corpus->add_option("action", action, "list | emit")->required();
  corpus->add_option("name", name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*parse) return cmd_parse(cfg, file);
    if (*dual) return cmd_dual(cfg, file);
    if (*check) return cmd_koszul_check(cfg, file);
    if (*resolve) return cmd_resolve(cfg, file, mfile);
    if (*ext) return cmd_ext_table(cfg, file);
    if (*kf) return cmd_kfunctor(cfg, file, mfile);
    if (*verify) return cmd_verify(cfg, identity, file);
    if (*hilbert) return cmd_hilbert(cfg, file, hilbert_n);
    if (*corpus) return cmd_corpus(cfg, action, name);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const HorizonExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
