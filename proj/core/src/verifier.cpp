#include "koszul/verifier.hpp"

#include <sstream>

#include "koszul/corpus.hpp"
#include "koszul/errors.hpp"

namespace koszul {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(HilbertOrientation o) {
  switch (o) {
    case HilbertOrientation::Plain: return "Plain";
    case HilbertOrientation::TransposeLeft: return "TransposeLeft";
    case HilbertOrientation::TransposeRight: return "TransposeRight";
    case HilbertOrientation::TransposeBoth: return "TransposeBoth";
  }
  return "?";
}

void VerificationReport::add(ReportRow r) {
  if (r.status == Verdict::Fail && verdict != Verdict::Fail) {
    verdict = Verdict::Fail;
    witness = r.key;
  } else if (r.status == Verdict::Inconclusive && verdict == Verdict::Pass) {
    verdict = Verdict::Inconclusive;
    witness = r.key;
  }
  rows.push_back(std::move(r));
}

std::size_t VerificationReport::count(Verdict v) const {
  std::size_t c = 0;
  for (const auto& r : rows) c += r.status == v;
  return c;
}

namespace {

std::string key(std::initializer_list<std::pair<const char*, long long>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    os << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

Verdict equal_verdict(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

VerificationReport verify_involution(const QuadraticPresentation& p) {
  VerificationReport r;
  r.identity = "involution";
  r.algebra = p.name();
  r.columns = {"relations", "relations_double_dual", "dual_relations"};
  QuadraticPresentation d = quadratic_dual(p), dd = quadratic_dual(d);
  bool quiver_ok = dd.quiver() == p.quiver();
  for (const auto& [k, b] : p.blocks()) {
    const auto& bb = dd.block(k.first, k.second);
    bool ok = quiver_ok && b.paths == bb.paths && b.relations.dim() == bb.relations.dim() &&
              b.relations.basis() == bb.relations.basis();
    r.add({key({{"x", k.first}, {"z", k.second}}),
           {as_int(b.relations.dim()), as_int(bb.relations.dim()), as_int(d.block(k.second, k.first).relations.dim())},
           equal_verdict(ok)});
  }
  if (!quiver_ok) r.add({"quiver", {0, 0, 0}, Verdict::Fail});
  if (!p.same_algebra(dd)) r.add({"same_algebra", {0, 0, 0}, Verdict::Fail});
  return r;
}

VerificationReport verify_generator_homs(const QuadraticPresentation& p, int window, int horizon) {
  VerificationReport r;
  r.identity = "generator-homs";
  r.algebra = p.name();
  r.parameters = {{"window", window}, {"horizon", horizon}};
  r.columns = {"x", "y", "n", "m", "hom_injectives", "ext", "dual_component"};
  AlgebraPtr L = GradedAlgebra::make(p);
  KoszulCertificate cert = koszulity_check(p, horizon);
  if (cert.verdict != KoszulVerdict::KoszulUpTo) {
    r.notes.push_back("koszulity check did not pass up to the horizon; identity not applicable");
    r.verdict = Verdict::Inconclusive;
    r.witness = "koszulity";
    return r;
  }
  AlgebraPtr D = dual_algebra(*L);
  bool finite = D->is_finite_dimensional();
  const ExtTable& ext = cert.evidence;
  int nv = L->vertex_count();
  // Injectives over an infinite dual are cut at depth `horizon`; the count is
  // accepted only if it does not change when the cut is moved down by two.
  std::map<std::tuple<int, int, int, int>, std::size_t> homs;
  auto hom_at = [&](int x, int y, int n, int m, int depth) {
    auto k = std::make_tuple(x, y, m - n, depth);
    auto it = homs.find(k);
    if (it != homs.end()) return it->second;
    std::optional<int> h;
    if (!finite) h = depth;
    std::size_t v = hom_graded_dim(injective(D, x, n, h), injective(D, y, m, h));
    homs[k] = v;
    return v;
  };
  for (int x = 0; x < nv; ++x)
    for (int y = 0; y < nv; ++y)
      for (int n = -window; n <= window; ++n)
        for (int m = -window; m <= window; ++m) {
          int k = m - n;
          std::size_t a = hom_at(x, y, n, m, horizon);
          bool stable = finite || a == hom_at(x, y, n, m, horizon + 2);
          std::size_t b = k < 0 ? 0 : ext.dim(k, x, y, k);
          std::size_t c = k < 0 ? 0 : D->dim(y, x, k);
          Verdict v;
          if (k > horizon || !stable)
            v = Verdict::Inconclusive;
          else
            v = equal_verdict(a == b && b == c);
          r.add({key({{"x", x}, {"y", y}, {"n", n}, {"m", m}}), {x, y, n, m, as_int(a), as_int(b), as_int(c)}, v});
        }
  return r;
}

VerificationReport verify_precovering(const QuadraticPresentation& p, int samples, int complexes, std::uint64_t seed) {
  VerificationReport r;
  r.identity = "precovering";
  r.algebra = p.name();
  r.parameters = {{"samples", samples}, {"complexes", complexes}, {"seed", static_cast<std::int64_t>(seed)}};
  r.columns = {"ungraded", "graded_sum"};
  AlgebraPtr A = GradedAlgebra::make(p);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    GradedModule m = random_module(A, rng), n = random_module(A, rng);
    std::size_t u = hom_ungraded_dim(m, n), g = hom_total(m, n).dim;
    r.add({key({{"module_pair", s}}), {as_int(u), as_int(g)}, equal_verdict(u == g)});
  }
  for (int s = 0; s < complexes; ++s) {
    ModuleComplex x = random_complex(A, rng), y = random_complex(A, rng);
    std::size_t u = hom_k_ungraded(x, y).dim(), g = hom_k_total_dim(x, y);
    r.add({key({{"complex_pair", s}}), {as_int(u), as_int(g)}, equal_verdict(u == g)});
  }
  return r;
}

VerificationReport verify_orbit_homs(const AlgebraPtr& lambda, const GradedModule& x, const GradedModule& y, int window,
                                     int horizon) {
  VerificationReport r;
  r.identity = "orbit-homs";
  r.algebra = lambda->presentation().name();
  r.parameters = {{"window", window}, {"horizon", horizon}};
  r.columns = {"k", "ext_k"};
  if (!x.algebra().is_finite_dimensional())
    throw Unsupported("orbit identity needs a finite-dimensional dual algebra");
  if (window + 1 > horizon) {
    r.notes.push_back("horizon too small for the window");
    r.verdict = Verdict::Inconclusive;
    r.witness = "horizon";
    return r;
  }
  std::size_t lhs = 0;
  ResolutionResult res = minimal_projective_resolution(x, horizon);
  for (int k = 0; k <= window; ++k) {
    std::size_t e = ext_from_resolution(res, y, k, -k);
    lhs += e;
    Verdict v = (k == window && e != 0) ? Verdict::Inconclusive : Verdict::Pass;
    r.add({key({{"k", k}}), {k, as_int(e)}, v});
  }
  ModuleComplex fx = materialize(quadratic_functor(stalk(x), lambda));
  ModuleComplex fy = materialize(quadratic_functor(stalk(y), lambda));
  std::size_t rhs = hom_k_ungraded(fx, fy).dim();
  r.add({"total", {as_int(lhs), as_int(rhs)}, equal_verdict(lhs == rhs)});
  return r;
}

VerificationReport verify_orbit_suite(const QuadraticPresentation& p, int window, int horizon) {
  VerificationReport r;
  r.identity = "orbit-homs";
  r.algebra = p.name();
  r.parameters = {{"window", window}, {"horizon", horizon}};
  r.columns = {"lhs", "rhs"};
  AlgebraPtr L = GradedAlgebra::make(p);
  AlgebraPtr D = dual_algebra(*L);
  if (!D->is_finite_dimensional()) {
    r.notes.push_back("dual algebra is not finite-dimensional");
    r.verdict = Verdict::Inconclusive;
    r.witness = "dual";
    return r;
  }
  std::vector<std::pair<std::string, GradedModule>> objs;
  for (int v = 0; v < D->vertex_count(); ++v) objs.push_back({"S" + std::to_string(v), simple(D, v, 0)});
  for (int v = 0; v < D->vertex_count(); ++v) objs.push_back({"I" + std::to_string(v), injective(D, v, 0)});
  for (const auto& [nx, x] : objs)
    for (const auto& [ny, y] : objs) {
      VerificationReport one = verify_orbit_homs(L, x, y, window, horizon);
      const ReportRow& tot = one.rows.back();
      Verdict v = one.verdict;
      r.add({"X=" + nx + " Y=" + ny, {tot.values[0], tot.values[1]}, v});
    }
  return r;
}

namespace {

using Block = std::vector<std::vector<std::size_t>>;

std::vector<std::vector<std::int64_t>> hilbert_sum(const std::vector<Block>& hl, const std::vector<Block>& hd, int n,
                                                   HilbertOrientation o, int nv) {
  std::vector<std::vector<std::int64_t>> s(static_cast<std::size_t>(nv), std::vector<std::int64_t>(static_cast<std::size_t>(nv), 0));
  bool tl = o == HilbertOrientation::TransposeLeft || o == HilbertOrientation::TransposeBoth;
  bool tr = o == HilbertOrientation::TransposeRight || o == HilbertOrientation::TransposeBoth;
  for (int a = 0; a <= n; ++a) {
    const Block& L = hl[static_cast<std::size_t>(a)];
    const Block& R = hd[static_cast<std::size_t>(n - a)];
    std::int64_t sign = a % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j)
        for (std::size_t k = 0; k < s.size(); ++k) {
          auto lv = static_cast<std::int64_t>(tl ? L[k][i] : L[i][k]);
          auto rv = static_cast<std::int64_t>(tr ? R[j][k] : R[k][j]);
          s[i][j] += sign * lv * rv;
        }
  }
  return s;
}

}  // namespace

bool hilbert_identity_holds(const QuadraticPresentation& p, int n_max, HilbertOrientation o) {
  return hilbert_diagnostic(p, n_max, o).verdict == Verdict::Pass;
}

HilbertOrientation calibrate_hilbert_orientation(int n_max) {
  for (auto o : {HilbertOrientation::Plain, HilbertOrientation::TransposeLeft, HilbertOrientation::TransposeRight,
                 HilbertOrientation::TransposeBoth}) {
    bool ok = hilbert_identity_holds(corpus_presentation("EXT2"), n_max, o) &&
              hilbert_identity_holds(corpus_presentation("RSZ_A3"), n_max, o);
    if (ok) return o;
  }
  throw Error("no Hilbert orientation satisfies the calibration algebras");
}

VerificationReport hilbert_diagnostic(const QuadraticPresentation& p, int n_max, HilbertOrientation o) {
  return hilbert_diagnostic(p, quadratic_dual(p), n_max, o);
}

VerificationReport hilbert_diagnostic(const QuadraticPresentation& p, const QuadraticPresentation& dual, int n_max,
                                      HilbertOrientation o) {
  if (p.quiver().vertex_count() != dual.quiver().vertex_count())
    throw Error("hilbert_diagnostic: vertex counts differ");
  VerificationReport r;
  r.identity = "hilbert";
  r.algebra = p.name();
  r.parameters = {{"n", n_max}};
  r.columns = {"n", "row", "col", "value", "expected"};
  r.notes.push_back("orientation " + to_string(o));
  if (dual.name() != p.name() + "!") r.notes.push_back("paired with " + dual.name());
  AlgebraPtr L = GradedAlgebra::make(p), D = GradedAlgebra::make(dual);
  int nv = L->vertex_count();
  auto hl = hilbert_block_series(*L, n_max), hd = hilbert_block_series(*D, n_max);
  for (int n = 0; n <= n_max; ++n) {
    auto s = hilbert_sum(hl, hd, n, o, nv);
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j) {
        std::int64_t want = (n == 0 && i == j) ? 1 : 0;
        std::int64_t got = s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        r.add({key({{"n", n}, {"row", i}, {"col", j}}), {n, i, j, got, want}, equal_verdict(got == want)});
      }
  }
  return r;
}

VerificationReport verify_null_homotopy(const QuadraticPresentation& p, int samples, std::uint64_t seed) {
  VerificationReport r;
  r.identity = "null-homotopy";
  r.algebra = p.name();
  r.parameters = {{"samples", samples}, {"seed", static_cast<std::int64_t>(seed)}};
  r.columns = {"chain_maps", "null_homotopic", "module_homs"};
  AlgebraPtr L = GradedAlgebra::make(p), D = dual_algebra(*L);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    GradedModule m = random_module(D, rng), n = random_module(D, rng);
    // Degree-one components of the differentials must survive the cut.
    int cut = 2 - std::min(m.min_degree(), n.min_degree());
    ModuleComplex km = materialize(k_module(m, L).complex, cut);
    ModuleComplex kn = materialize(k_module(n, L).complex, cut);
    HomK h = hom_k(km, kn);
    std::size_t homs = hom_graded_dim(m, n);
    r.add({key({{"pair", s}}), {as_int(h.chain_maps), as_int(h.null_homotopic), as_int(homs)},
           equal_verdict(h.null_homotopic == 0 && h.chain_maps == homs)});
  }
  return r;
}

namespace {

SymbolicMatrix regenerate(const SymbolicMatrix& m, int i) {
  auto rows = m.row_generators(), cols = m.col_generators();
  for (auto& g : rows) g.shift += i;
  for (auto& g : cols) g.shift += i;
  SymbolicMatrix out(rows, cols);
  for (std::size_t b = 0; b < m.rows(); ++b)
    for (std::size_t a = 0; a < m.cols(); ++a)
      if (!m.at(b, a).is_zero()) out.set(b, a, m.at(b, a));
  return out;
}

bool natural(const GradedAlgebra& A, const SymbolicChainMap& phi_x, const SymbolicChainMap& phi_y,
             const SymbolicChainMap& f_twisted, const SymbolicChainMap& f, int i) {
  int lo = std::min(phi_x.source.lo(), phi_y.source.lo()), hi = std::max(phi_x.source.hi(), phi_y.source.hi());
  for (int n = lo; n <= hi; ++n) {
    SymbolicMatrix fx = f_twisted.at(n), fr = regenerate(f.at(n), -i);
    if (!fx.rows() || !fx.cols()) continue;
    SymbolicMatrix left = compose(A, phi_y.at(n), fx), right = compose(A, fr, phi_x.at(n));
    if (!equal(A, left, right)) return false;
  }
  return true;
}

}  // namespace

VerificationReport verify_shift_compat(const QuadraticPresentation& p, int samples, std::uint64_t seed) {
  VerificationReport r;
  r.identity = "shift-compat";
  r.algebra = p.name();
  r.parameters = {{"samples", samples}, {"seed", static_cast<std::int64_t>(seed)}};
  r.columns = {"i", "verbatim", "natural", "perturbed_shift_p", "drop_component_sign"};
  AlgebraPtr L = GradedAlgebra::make(p), D = dual_algebra(*L);
  const GradedAlgebra& A = *L;
  Rng rng(seed);
  std::size_t drop_failures = 0, perturbed_failures = 0;
  for (int s = 0; s < samples; ++s) {
    ModuleComplex x = random_complex(D, rng);
    GradedModule m = random_module(D, rng), n = random_module(D, rng);
    ChainMap f;
    f.source = stalk(m, 0);
    f.target = stalk(n, 0);
    f.comps[0] = random_morphism(m, n, rng);
    for (int i = -2; i <= 2; ++i) {
      SymbolicChainMap phi = shift_compat_iso(x, i, L);
      bool verbatim = is_chain_map(phi);
      SymbolicChainMap pa = shift_compat_iso(f.source, i, L), pb = shift_compat_iso(f.target, i, L);
      ChainMap ft = shift(grade_shift(f, i), -i);
      ft.source = shift_grade_twist(f.source, i);
      ft.target = shift_grade_twist(f.target, i);
      bool nat = natural(A, pa, pb, quadratic_functor(ft, L), quadratic_functor(f, L), i);
      bool pert = is_chain_map(shift_compat_iso(x, i, L, SignRule::PerturbedShiftP));
      bool drop = is_chain_map(shift_compat_iso(x, i, L, SignRule::DropComponentSign));
      perturbed_failures += !pert;
      drop_failures += !drop;
      r.add({key({{"complex", s}, {"i", i}}), {i, verbatim, nat, pert, drop}, equal_verdict(verbatim && nat)});
    }
  }
  r.parameters["drop_component_sign_failures"] = as_int(drop_failures);
  r.parameters["perturbed_shift_p_failures"] = as_int(perturbed_failures);
  r.notes.push_back("(-1)^{i(p+1)} differs from the verbatim sign by the global factor (-1)^i, so it stays a chain map");
  if (samples > 0 && drop_failures == 0)
    r.notes.push_back("dropping the component sign was never detected; sample complexes may be too small");
  return r;
}

VerificationReport verify_resolution_identity(const QuadraticPresentation& p, int window, int horizon) {
  VerificationReport r;
  r.identity = "resolution-identity";
  r.algebra = p.name();
  r.parameters = {{"window", window}, {"horizon", horizon}};
  r.columns = {"x", "n", "minimal", "linear", "isomorphic"};
  AlgebraPtr L = GradedAlgebra::make(p), D = dual_algebra(*L);
  std::optional<int> depth;
  if (!D->is_finite_dimensional()) depth = horizon;
  for (int x = 0; x < L->vertex_count(); ++x)
    for (int n = -window; n <= window; ++n) {
      KOutput k = k_module(injective(D, x, n, depth), L, depth.has_value());
      SymbolicComplex ks = shift(k.complex, -n);
      std::optional<int> cut;
      if (!L->is_finite_dimensional()) cut = horizon + 2 + std::max(n, 0);
      ResolutionResult res = minimal_projective_resolution(simple(L, x, -n), horizon, cut);
      ModuleComplex a = brutal_truncate(materialize(ks, cut), -horizon, 0);
      ModuleComplex b = materialize(res.complex, cut);
      IsoAnswer iso = is_isomorphic(a, b);
      bool minimal = k.complex.is_minimal(), linear = k.complex.is_linear();
      Verdict v = !minimal || !linear || iso == IsoAnswer::No ? Verdict::Fail
                  : iso == IsoAnswer::Undetermined         ? Verdict::Inconclusive
                                                           : Verdict::Pass;
      r.add({key({{"x", x}, {"n", n}}), {x, n, minimal, linear, iso == IsoAnswer::Yes}, v});
    }
  return r;
}

std::size_t stable_hom(const GradedModule& m, const GradedModule& n) {
  if (m.is_zero() || n.is_zero()) return 0;
  Cover c = projective_cover(n);
  auto [lo, hi] = shift_window(m, n);
  std::size_t total = 0;
  for (int r = lo; r <= hi; ++r) {
    GradedModule nr = shift(n, r);
    auto homs = hom_graded(m, nr);
    if (homs.empty()) continue;
    ModuleMorphism pi = shift(c.map, r);
    std::vector<Vec> images;
    for (const auto& g : hom_graded(m, pi.source())) images.push_back(compose(pi, g).flatten());
    std::size_t through = images.empty() ? 0 : Subspace::span(m.field(), homs.front().flatten().size(), images).dim();
    total += homs.size() - through;
  }
  return total;
}

GradedModule syzygy(const GradedModule& m) {
  GradedModule k = kernel(projective_cover(m).map).module;
  k.trim();
  return k;
}

VerificationReport verify_stable_hom(const QuadraticPresentation& p, std::uint64_t seed) {
  VerificationReport r;
  r.identity = "stable-hom";
  r.algebra = p.name();
  r.parameters = {{"seed", static_cast<std::int64_t>(seed)}};
  r.columns = {"value", "expected"};
  AlgebraPtr A = GradedAlgebra::make(p);
  if (!A->is_finite_dimensional()) {
    r.notes.push_back("algebra is not finite-dimensional");
    r.verdict = Verdict::Inconclusive;
    r.witness = "infinite";
    return r;
  }
  Rng rng(seed);
  std::vector<GradedModule> targets;
  for (int y = 0; y < A->vertex_count(); ++y) targets.push_back(simple(A, y, 0));
  for (int s = 0; s < 3; ++s) targets.push_back(random_module(A, rng));
  for (int x = 0; x < A->vertex_count(); ++x) {
    GradedModule px = projective(A, x, 0), sx = simple(A, x, 0);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      std::size_t v = stable_hom(px, targets[t]);
      r.add({key({{"P", x}, {"target", static_cast<long long>(t)}}), {as_int(v), 0}, equal_verdict(v == 0)});
    }
    bool projective_simple = syzygy(sx).is_zero();
    std::size_t v = stable_hom(sx, sx);
    std::size_t want = projective_simple ? 0 : 1;
    r.add({key({{"S", x}}), {as_int(v), as_int(want)}, equal_verdict(v == want)});
  }
  return r;
}

}  // namespace koszul
