#include "koszul/resolution.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

std::vector<Generator> to_generators(const std::vector<std::pair<int, int>>& g) {
  std::vector<Generator> out;
  for (auto [x, r] : g) out.push_back({x, r});
  return out;
}

std::size_t gen_dim(const GradedAlgebra& A, const Generator& g, int z, int n, std::optional<int> max_degree) {
  if (max_degree && n > *max_degree) return 0;
  return A.dim(g.vertex, z, n + g.shift);
}

// Reads the images of the generators of `src` under `f` as a symbolic matrix
// into the sum of projectives `tgt_gens`.
SymbolicMatrix symbolic_columns(const GradedAlgebra& A, const ModuleMorphism& f, const std::vector<Generator>& src_gens,
                                const std::vector<Generator>& tgt_gens, std::optional<int> max_degree) {
  SymbolicMatrix m(tgt_gens, src_gens);
  for (std::size_t a = 0; a < src_gens.size(); ++a) {
    const Generator& ga = src_gens[a];
    int z = ga.vertex, n = -ga.shift;
    // Position of generator a inside the source slot (z, n).
    std::size_t col = 0;
    for (std::size_t k = 0; k < a; ++k) col += gen_dim(A, src_gens[k], z, n, max_degree);
    Vec w = f.at(z, n).column(col);
    std::size_t off = 0;
    for (std::size_t b = 0; b < tgt_gens.size(); ++b) {
      const Generator& gb = tgt_gens[b];
      std::size_t d = gen_dim(A, gb, z, n, max_degree);
      if (d) {
        AlgElem e{gb.vertex, z, n + gb.shift, Vec(w.begin() + static_cast<long>(off), w.begin() + static_cast<long>(off + d))};
        if (!e.is_zero()) m.set(b, a, std::move(e));
      }
      off += d;
    }
  }
  return m;
}

}  // namespace

ResolutionResult minimal_projective_resolution(const GradedModule& m, int horizon, std::optional<int> max_degree) {
  const AlgebraPtr& ap = m.algebra_ptr();
  const GradedAlgebra& A = *ap;
  if (A.is_finite_dimensional()) {
    max_degree.reset();
  } else if (!max_degree) {
    throw Unsupported("resolution over '" + A.presentation().name() +
                      "' (not finite-dimensional) needs a degree truncation");
  }
  ResolutionResult res;
  res.target = m;
  res.horizon = horizon;
  res.max_degree = max_degree;
  res.complex = SymbolicComplex(ap);
  if (m.is_zero()) {
    res.complete = true;
    return res;
  }
  Cover c0 = projective_cover(m, max_degree);
  std::vector<Generator> prev = to_generators(c0.generators);
  res.complex.set_term(0, prev);
  res.augmentation = c0.map;
  Submodule k = kernel(c0.map);
  for (int j = 1; j <= horizon; ++j) {
    if (k.module.is_zero()) break;
    Cover c = projective_cover(k.module, max_degree);
    ModuleMorphism delta = compose(k.inclusion, c.map);
    std::vector<Generator> gens = to_generators(c.generators);
    res.complex.set_term(-j, gens);
    res.complex.set_diff(-j, symbolic_columns(A, delta, gens, prev, max_degree));
    k = kernel(c.map);
    prev = std::move(gens);
  }
  res.complete = k.module.is_zero();
  return res;
}

std::size_t ExtTable::dim(int n, int x, int y, int i) const {
  for (const auto& e : entries)
    if (e.n == n && e.x == x && e.y == y && e.i == i) return e.dim;
  return 0;
}

std::optional<int> default_truncation(const GradedAlgebra& a, int horizon) {
  if (a.is_finite_dimensional()) return std::nullopt;
  return horizon + 2;
}

ExtTable ext_simple_table(const AlgebraPtr& a, int horizon, std::optional<int> max_degree) {
  if (!max_degree) max_degree = default_truncation(*a, horizon);
  ExtTable t;
  t.algebra = a->presentation().name();
  t.horizon = horizon;
  for (int x = 0; x < a->vertex_count(); ++x) {
    ResolutionResult r = minimal_projective_resolution(simple(a, x, 0), horizon, max_degree);
    for (int n = 0; n <= horizon; ++n) {
      std::map<std::pair<int, int>, std::size_t> mult;
      for (const auto& g : r.complex.term(-n)) ++mult[{g.vertex, -g.shift}];
      for (const auto& [key, d] : mult) t.entries.push_back({n, x, key.first, key.second, d});
    }
  }
  return t;
}

std::string to_string(KoszulVerdict v) {
  switch (v) {
    case KoszulVerdict::KoszulUpTo: return "KoszulUpTo";
    case KoszulVerdict::NotQuadraticIdeal: return "NotQuadraticIdeal";
    case KoszulVerdict::FailsAt: return "FailsAt";
  }
  return "?";
}

KoszulCertificate koszulity_check(const QuadraticPresentation& p, int horizon) {
  KoszulCertificate c;
  c.horizon = horizon;
  AlgebraPtr a = GradedAlgebra::make(p);
  c.evidence = ext_simple_table(a, horizon);
  for (const auto& e : c.evidence.entries)
    if (e.i != e.n && e.dim > 0) {
      if (c.verdict != KoszulVerdict::FailsAt || e.n < c.witness.n) {
        c.verdict = KoszulVerdict::FailsAt;
        c.witness = e;
      }
    }
  return c;
}

KoszulCertificate koszulity_check(const RawPresentation& p, int horizon) {
  for (const auto& r : p.relations)
    if (r.length != 2) {
      KoszulCertificate c;
      c.verdict = KoszulVerdict::NotQuadraticIdeal;
      c.horizon = horizon;
      c.offending_term = r.term_text.empty() ? "" : r.term_text.front();
      c.offending_line = r.line;
      return c;
    }
  return koszulity_check(to_quadratic(p), horizon);
}

std::size_t ext_from_resolution(const ResolutionResult& res, const GradedModule& N, int degree, int r) {
  if (degree < 0) return 0;
  if (!res.complete && degree + 1 > res.horizon)
    throw HorizonExceeded("Ext^" + std::to_string(degree) + " needs a resolution of length " +
                          std::to_string(degree + 1) + ", have " + std::to_string(res.horizon));
  const GradedAlgebra& A = N.algebra();
  const FieldSpec& f = A.field();
  auto cochain_dim = [&](int j) {
    std::size_t s = 0;
    for (const auto& g : res.complex.term(-j)) s += N.dim(g.vertex, r - g.shift);
    return s;
  };
  // delta^j : C^j -> C^{j+1}, phi |-> phi o d^{-j-1}.
  auto delta = [&](int j) {
    auto src = res.complex.term(-j), tgt = res.complex.term(-j - 1);
    SymbolicMatrix d = res.complex.diff(-j - 1);
    Matrix m(f, cochain_dim(j + 1), cochain_dim(j));
    std::size_t r0 = 0;
    for (std::size_t a = 0; a < tgt.size(); ++a) {
      std::size_t ra = N.dim(tgt[a].vertex, r - tgt[a].shift);
      std::size_t c0 = 0;
      for (std::size_t b = 0; b < src.size(); ++b) {
        std::size_t cb = N.dim(src[b].vertex, r - src[b].shift);
        const AlgElem& lam = d.at(b, a);
        if (ra && cb && !lam.is_zero()) m.set_block(r0, c0, N.element_action(lam, r - src[b].shift));
        c0 += cb;
      }
      r0 += ra;
    }
    return m;
  };
  std::size_t c = cochain_dim(degree);
  if (!c) return 0;
  std::size_t out = rank(delta(degree));
  std::size_t in = degree > 0 ? rank(delta(degree - 1)) : 0;
  return c - out - in;
}

std::size_t ext_general(const GradedModule& m, const GradedModule& n, int degree, int r, int horizon,
                        std::optional<int> max_degree) {
  ResolutionResult res = minimal_projective_resolution(m, std::max(horizon, degree + 1), max_degree);
  if (!res.complete && degree + 1 > horizon)
    throw HorizonExceeded("Ext^" + std::to_string(degree) + " beyond horizon " + std::to_string(horizon));
  return ext_from_resolution(res, n, degree, r);
}

std::size_t ext_ungraded(const GradedModule& m, const GradedModule& n, int degree, int horizon,
                         std::optional<int> max_degree) {
  ResolutionResult res = minimal_projective_resolution(m, std::max(horizon, degree + 1), max_degree);
  if (!res.complete && degree + 1 > horizon)
    throw HorizonExceeded("Ext^" + std::to_string(degree) + " beyond horizon " + std::to_string(horizon));
  auto gens = res.complex.term(-degree);
  if (gens.empty() || n.is_zero()) return 0;
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& g : gens) {
    int a = n.min_degree() + g.shift, b = n.max_degree() + g.shift;
    lo = any ? std::min(lo, a) : a;
    hi = any ? std::max(hi, b) : b;
    any = true;
  }
  std::size_t s = 0;
  for (int r = lo; r <= hi; ++r) s += ext_from_resolution(res, n, degree, r);
  return s;
}

std::vector<bool> linearity_scan(const AlgebraPtr& a, int horizon, std::optional<int> max_degree) {
  if (!max_degree) max_degree = default_truncation(*a, horizon);
  std::vector<bool> ok(static_cast<std::size_t>(horizon + 1), true);
  for (int x = 0; x < a->vertex_count(); ++x) {
    ResolutionResult r = minimal_projective_resolution(simple(a, x, 0), horizon, max_degree);
    bool linear = true;
    for (int n = 0; n <= horizon; ++n) {
      for (const auto& g : r.complex.term(-n))
        if (g.shift != -n) linear = false;
      if (!linear) ok[static_cast<std::size_t>(n)] = false;
    }
  }
  return ok;
}

std::vector<bool> offdiagonal_ext_scan(const AlgebraPtr& a, int horizon, std::optional<int> max_degree) {
  if (!max_degree) max_degree = default_truncation(*a, horizon);
  // Generation degrees in P^{-n} are at most n * top (or the truncation).
  int reach = max_degree ? *max_degree : std::max(1, a->top_degree()) * (horizon + 1);
  std::vector<bool> ok(static_cast<std::size_t>(horizon + 1), true);
  for (int x = 0; x < a->vertex_count(); ++x) {
    ResolutionResult r = minimal_projective_resolution(simple(a, x, 0), horizon + 1, max_degree);
    bool clean = true;
    for (int n = 0; n <= horizon; ++n) {
      for (int y = 0; y < a->vertex_count() && clean; ++y) {
        GradedModule sy = simple(a, y, 0);
        for (int i = 0; i <= reach && clean; ++i) {
          if (i == n) continue;
          // Ext^n(S_x, S_y<-i>)
          if (ext_from_resolution(r, sy, n, -i) != 0) clean = false;
        }
      }
      if (!clean) ok[static_cast<std::size_t>(n)] = false;
    }
  }
  return ok;
}

CoresolutionResult minimal_injective_coresolution(const GradedModule& m, int horizon) {
  CoresolutionResult res;
  res.horizon = horizon;
  GradedModule cur = m;
  for (int j = 0; j <= horizon; ++j) {
    if (cur.is_zero()) {
      res.complete = true;
      return res;
    }
    Cover env = injective_envelope(cur);
    res.terms.push_back(to_generators(env.generators));
    cur = cokernel(env.map).module;
    cur.trim();
  }
  res.complete = cur.is_zero();
  return res;
}

std::optional<int> injective_dimension_up_to(const GradedModule& m, int horizon) {
  CoresolutionResult r = minimal_injective_coresolution(m, horizon);
  if (!r.complete) return std::nullopt;
  return static_cast<int>(r.terms.size()) - 1;
}

}  // namespace koszul
