#include "koszul/koszul_functor.hpp"

#include "koszul/errors.hpp"

namespace koszul {

namespace {

void check_opposite(const GradedAlgebra& src, const GradedAlgebra& tgt) {
  const Quiver &q = src.quiver(), &o = tgt.quiver();
  bool ok = q.vertex_count() == o.vertex_count() && q.arrow_count() == o.arrow_count();
  for (int a = 0; ok && a < q.arrow_count(); ++a)
    ok = q.arrow(a).source == o.arrow(a).target && q.arrow(a).target == o.arrow(a).source;
  if (!ok) throw Error("K functor: quivers of '" + src.presentation().name() + "' and '" +
                       tgt.presentation().name() + "' are not opposite");
}

struct KTerm {
  std::vector<Generator> gens;
  std::vector<Provenance> prov;
  std::map<int, std::size_t> offset;  // vertex -> first generator index
};

KTerm k_term(const GradedModule& m, int n) {
  KTerm t;
  for (int x = 0; x < m.algebra().vertex_count(); ++x) {
    t.offset[x] = t.gens.size();
    for (std::size_t j = 0; j < m.dim(x, n); ++j) {
      t.gens.push_back({x, n});
      t.prov.push_back({x, n, j});
    }
  }
  return t;
}

SymbolicMatrix k_diff(const GradedModule& m, const GradedAlgebra& L, int n) {
  KTerm s = k_term(m, n), t = k_term(m, n + 1);
  SymbolicMatrix d(t.gens, s.gens);
  const Quiver& q = m.algebra().quiver();
  for (int a = 0; a < q.arrow_count(); ++a) {
    int x = q.arrow(a).source, y = q.arrow(a).target;
    std::size_t cols = m.dim(x, n), rows = m.dim(y, n + 1);
    if (!cols || !rows) continue;
    Matrix act = m.action(a, n);
    AlgElem alpha = L.path_element(PathWord{y, x, {a}});
    for (std::size_t jp = 0; jp < rows; ++jp)
      for (std::size_t j = 0; j < cols; ++j) {
        if (act(jp, j).is_zero()) continue;
        std::size_t b = t.offset[y] + jp, c = s.offset[x] + j;
        AlgElem e = L.scale(alpha, act(jp, j));
        const AlgElem& old = d.at(b, c);
        d.set(b, c, old.is_zero() ? e : L.add(old, e));
      }
  }
  return d;
}

SymbolicMatrix k_map_at(const ModuleMorphism& f, const GradedAlgebra& L, int n) {
  KTerm s = k_term(f.source(), n), t = k_term(f.target(), n);
  SymbolicMatrix k(t.gens, s.gens);
  for (int x = 0; x < L.vertex_count(); ++x) {
    std::size_t cols = f.source().dim(x, n), rows = f.target().dim(x, n);
    if (!cols || !rows) continue;
    Matrix fx = f.at(x, n);
    for (std::size_t jp = 0; jp < rows; ++jp)
      for (std::size_t j = 0; j < cols; ++j)
        if (!fx(jp, j).is_zero()) k.set(t.offset[x] + jp, s.offset[x] + j, L.scale(L.unit(x), fx(jp, j)));
  }
  return k;
}

void put(SymbolicMatrix& m, std::size_t r0, std::size_t c0, const SymbolicMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!b.at(i, j).is_zero()) m.set(r0 + i, c0 + j, b.at(i, j));
}

std::pair<int, int> p_range(const SymbolicDoubleComplex& d) {
  if (d.terms.empty()) return {0, -1};
  return {d.terms.begin()->first.first, d.terms.rbegin()->first.first};
}

// Offset of each p-block inside Tot^n.
std::map<int, std::size_t> tot_offsets(const SymbolicDoubleComplex& d, int n) {
  std::map<int, std::size_t> off;
  auto [lo, hi] = p_range(d);
  std::size_t c = 0;
  for (int p = lo; p <= hi; ++p) {
    off[p] = c;
    c += d.term(p, n - p).size();
  }
  return off;
}

int sign_exponent(SignRule rule, int i, int p, int q) {
  switch (rule) {
    case SignRule::Verbatim: return i * p + i * q;
    case SignRule::PerturbedShiftP: return i * (p + 1) + i * q;
    case SignRule::DropComponentSign: return i * p;
  }
  return 0;
}

}  // namespace

AlgebraPtr dual_algebra(const GradedAlgebra& a) { return GradedAlgebra::make(quadratic_dual(a.presentation())); }

KOutput k_module(const GradedModule& m, const AlgebraPtr& target, bool truncated_below) {
  check_opposite(m.algebra(), *target);
  KOutput out;
  out.source = m;
  out.complex = SymbolicComplex(target);
  if (m.is_zero()) return out;
  int lo = m.min_degree(), hi = m.max_degree();
  for (int n = lo; n <= hi; ++n) {
    KTerm t = k_term(m, n);
    out.complex.set_term(n, t.gens);
    out.provenance[n] = t.prov;
  }
  for (int n = lo; n < hi; ++n) out.complex.set_diff(n, k_diff(m, *target, n));
  if (!out.complex.d_squared_zero()) throw Error("K(M): d^2 != 0, the module does not satisfy the dual relations");
  if (truncated_below) out.boundary = lo;
  return out;
}

GradedModule k_inverse(const SymbolicComplex& s, const AlgebraPtr& source_algebra) {
  const GradedAlgebra& L = s.algebra();
  check_opposite(*source_algebra, L);
  if (!s.is_linear()) throw Unsupported("k_inverse needs a linear complex");
  GradedModule m(source_algebra);
  int lo = s.lo(), hi = s.hi();
  // Index of each generator among those of its vertex.
  std::map<int, std::vector<std::size_t>> local;
  for (int n = lo; n <= hi; ++n) {
    std::map<int, std::size_t> count;
    for (const auto& g : s.term(n)) local[n].push_back(count[g.vertex]++);
    for (int x = 0; x < source_algebra->vertex_count(); ++x) m.set_dim(x, n, count[x]);
  }
  const Quiver& q = source_algebra->quiver();
  for (int n = lo; n < hi; ++n) {
    auto src = s.term(n), tgt = s.term(n + 1);
    SymbolicMatrix d = s.diff(n);
    for (int a = 0; a < q.arrow_count(); ++a) {
      int x = q.arrow(a).source, y = q.arrow(a).target;
      Matrix act(L.field(), m.dim(y, n + 1), m.dim(x, n));
      if (act.rows() && act.cols()) {
        std::size_t k = 0;
        while (L.basis_path(y, x, 1, k).arrows != std::vector<int>{a}) ++k;
        for (std::size_t b = 0; b < tgt.size(); ++b) {
          if (tgt[b].vertex != y) continue;
          for (std::size_t c = 0; c < src.size(); ++c) {
            if (src[c].vertex != x) continue;
            const AlgElem& e = d.at(b, c);
            if (!e.is_zero()) act(local[n + 1][b], local[n][c]) = e.coords[k];
          }
        }
      }
      m.set_action(a, n, std::move(act));
    }
  }
  m.validate();
  return m;
}

SymbolicChainMap k_morphism(const ModuleMorphism& f, const AlgebraPtr& target) {
  SymbolicChainMap k;
  k.source = k_module(f.source(), target).complex;
  k.target = k_module(f.target(), target).complex;
  if (f.source().is_zero() || f.target().is_zero()) return k;
  int lo = std::max(f.source().min_degree(), f.target().min_degree());
  int hi = std::min(f.source().max_degree(), f.target().max_degree());
  for (int n = lo; n <= hi; ++n) k.comps[n] = k_map_at(f, *target, n);
  return k;
}

SymbolicDoubleComplex big_k(const ModuleComplex& x, const AlgebraPtr& target) {
  SymbolicDoubleComplex d;
  d.algebra = target;
  for (int p = x.lo(); p <= x.hi(); ++p) {
    GradedModule m = x.term(p);
    if (m.is_zero()) continue;
    KOutput k = k_module(m, target);
    for (int q = m.min_degree(); q <= m.max_degree(); ++q) {
      auto g = k.complex.term(q);
      if (g.empty()) continue;
      d.terms[{p, q}] = g;
      if (q < m.max_degree()) d.d2[{p, q}] = k.complex.diff(q);
    }
  }
  for (int p = x.lo(); p < x.hi(); ++p) {
    ModuleMorphism f = x.diff(p);
    if (f.source().is_zero() || f.target().is_zero()) continue;
    int lo = std::max(f.source().min_degree(), f.target().min_degree());
    int hi = std::min(f.source().max_degree(), f.target().max_degree());
    for (int q = lo; q <= hi; ++q) {
      SymbolicMatrix m = k_map_at(f, *target, q);
      if (m.rows() && m.cols()) d.d1[{p, q}] = std::move(m);
    }
  }
  return d;
}

SymbolicComplex quadratic_functor(const ModuleComplex& x, const AlgebraPtr& target) { return tot(big_k(x, target)); }

SymbolicChainMap quadratic_functor(const ChainMap& f, const AlgebraPtr& target) {
  SymbolicDoubleComplex ds = big_k(f.source, target), dt = big_k(f.target, target);
  SymbolicChainMap out;
  out.source = tot(ds);
  out.target = tot(dt);
  const GradedAlgebra& L = *target;
  int lo = std::min(out.source.lo(), out.target.lo()), hi = std::max(out.source.hi(), out.target.hi());
  for (int n = lo; n <= hi; ++n) {
    SymbolicMatrix m(out.target.term(n), out.source.term(n));
    if (!m.rows() || !m.cols()) continue;
    auto so = tot_offsets(ds, n), to = tot_offsets(dt, n);
    for (const auto& [p, c0] : so) {
      if (!to.count(p)) continue;
      ModuleMorphism fp = f.at(p);
      if (fp.source().is_zero() || fp.target().is_zero()) continue;
      SymbolicMatrix b = k_map_at(fp, L, n - p);
      put(m, to[p], c0, b);
    }
    out.comps[n] = std::move(m);
  }
  return out;
}

ModuleComplex shift_grade_twist(const ModuleComplex& x, int i) { return shift(grade_shift(x, i), -i); }

SymbolicChainMap shift_compat_iso(const ModuleComplex& x, int i, const AlgebraPtr& target, SignRule rule) {
  const GradedAlgebra& L = *target;
  SymbolicDoubleComplex ds = big_k(shift_grade_twist(x, i), target);
  SymbolicChainMap phi;
  phi.source = tot(ds);
  phi.target = grade_shift(quadratic_functor(x, target), -i);
  for (int n = phi.source.lo(); n <= phi.source.hi(); ++n) {
    auto gens = phi.source.term(n);
    if (!(gens == phi.target.term(n)))
      throw Error("shift_compat_iso: generator lists differ at position " + std::to_string(n));
    SymbolicMatrix m(gens, gens);
    for (const auto& [p, c0] : tot_offsets(ds, n)) {
      int q = n - p;
      std::size_t sz = ds.term(p, q).size();
      Scalar s = sign_exponent(rule, i, p, q) % 2 == 0 ? L.field().one() : -L.field().one();
      for (std::size_t k = 0; k < sz; ++k) m.set(c0 + k, c0 + k, L.scale(L.unit(gens[c0 + k].vertex), s));
    }
    phi.comps[n] = std::move(m);
  }
  return phi;
}

}  // namespace koszul
