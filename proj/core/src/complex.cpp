#include "koszul/complex.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "koszul/errors.hpp"

namespace koszul {

int ModuleComplex::lo() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int ModuleComplex::hi() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

GradedModule ModuleComplex::term(int p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? GradedModule(alg_) : it->second;
}

ModuleMorphism ModuleComplex::diff(int p) const {
  auto it = diffs_.find(p);
  if (it != diffs_.end()) return it->second;
  return ModuleMorphism(term(p), term(p + 1));
}

void ModuleComplex::set_term(int p, GradedModule m) {
  if (m.is_zero()) {
    terms_.erase(p);
    return;
  }
  terms_[p] = std::move(m);
}

void ModuleComplex::set_diff(int p, ModuleMorphism d) {
  if (d.source().is_zero() || d.target().is_zero()) {
    diffs_.erase(p);
    return;
  }
  diffs_[p] = std::move(d);
}

bool ModuleComplex::is_complex() const {
  for (const auto& [p, d] : diffs_) {
    if (!(d.source() == term(p)) || !(d.target() == term(p + 1))) return false;
    if (!d.commutes()) return false;
    if (!compose(diff(p + 1), d).is_zero()) return false;
  }
  return true;
}

void ModuleComplex::validate() const {
  if (!is_complex()) throw Error("not a complex: d^2 != 0 or a differential is not a module map");
}

ModuleMorphism ChainMap::at(int p) const {
  auto it = comps.find(p);
  if (it != comps.end()) return it->second;
  return ModuleMorphism(source.term(p), target.term(p));
}

namespace {

std::pair<int, int> joint_range(const ModuleComplex& x, const ModuleComplex& y) {
  bool ex = x.lo() > x.hi(), ey = y.lo() > y.hi();
  if (ex && ey) return {0, -1};
  if (ex) return {y.lo(), y.hi()};
  if (ey) return {x.lo(), x.hi()};
  return {std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi())};
}

// Solve g * pi = d for g, slotwise (pi surjective).
ModuleMorphism descend(const ModuleMorphism& d, const ModuleMorphism& pi) {
  ModuleMorphism g(pi.target(), d.target());
  const GradedModule& q = pi.target();
  for (int n = q.min_degree(); n <= q.max_degree(); ++n)
    for (int x = 0; x < q.algebra().vertex_count(); ++x) {
      if (!q.dim(x, n) || !d.target().dim(x, n)) continue;
      auto s = solve(pi.at(x, n).transpose(), d.at(x, n).transpose());
      if (!s) throw Error("map does not descend to the quotient");
      g.set(x, n, s->transpose());
    }
  return g;
}

}  // namespace

bool is_chain_map(const ChainMap& f) {
  auto [lo, hi] = joint_range(f.source, f.target);
  for (int p = lo; p <= hi; ++p) {
    ModuleMorphism fp = f.at(p);
    if (!fp.commutes()) return false;
    ModuleMorphism a = compose(f.at(p + 1), f.source.diff(p));
    ModuleMorphism b = compose(f.target.diff(p), fp);
    if (!(a.flatten() == b.flatten())) return false;
    ModuleMorphism c = compose(f.at(p), f.source.diff(p - 1));
    ModuleMorphism e = compose(f.target.diff(p - 1), f.at(p - 1));
    if (!(c.flatten() == e.flatten())) return false;
  }
  return true;
}

bool is_chain_isomorphism(const ChainMap& f) {
  if (!is_chain_map(f)) return false;
  auto [lo, hi] = joint_range(f.source, f.target);
  for (int p = lo; p <= hi; ++p)
    if (!f.at(p).is_isomorphism()) return false;
  return true;
}

ModuleComplex stalk(const GradedModule& m, int p) {
  ModuleComplex x(m.algebra_ptr());
  x.set_term(p, m);
  return x;
}

ModuleComplex shift(const ModuleComplex& x, int k) {
  ModuleComplex y(x.algebra_ptr());
  const Scalar sign = (k % 2 == 0) ? x.algebra().field().one() : -x.algebra().field().one();
  for (int p = x.lo(); p <= x.hi(); ++p) y.set_term(p - k, x.term(p));
  for (int p = x.lo(); p <= x.hi(); ++p) y.set_diff(p - k, x.diff(p).scaled(sign));
  return y;
}

ChainMap shift(const ChainMap& f, int k) {
  ChainMap g{shift(f.source, k), shift(f.target, k), {}};
  for (const auto& [p, m] : f.comps) g.comps[p - k] = m;
  return g;
}

ModuleComplex grade_shift(const ModuleComplex& x, int i) {
  ModuleComplex y(x.algebra_ptr());
  for (int p = x.lo(); p <= x.hi(); ++p) y.set_term(p, shift(x.term(p), i));
  for (int p = x.lo(); p <= x.hi(); ++p) y.set_diff(p, shift(x.diff(p), i));
  return y;
}

ChainMap grade_shift(const ChainMap& f, int i) {
  ChainMap g{grade_shift(f.source, i), grade_shift(f.target, i), {}};
  for (const auto& [p, m] : f.comps) g.comps[p] = shift(m, i);
  return g;
}

ModuleComplex direct_sum(const ModuleComplex& x, const ModuleComplex& y) {
  ModuleComplex s(x.algebra_ptr());
  auto [lo, hi] = joint_range(x, y);
  std::map<int, DirectSum> sums;
  for (int p = lo; p <= hi + 1; ++p) sums.emplace(p, direct_sum({x.term(p), y.term(p)}, x.algebra_ptr()));
  for (int p = lo; p <= hi; ++p) s.set_term(p, sums.at(p).module);
  for (int p = lo; p <= hi; ++p) {
    const DirectSum &a = sums.at(p), &b = sums.at(p + 1);
    ModuleMorphism d = compose(b.inclusions[0], compose(x.diff(p), a.projections[0])) +
                       compose(b.inclusions[1], compose(y.diff(p), a.projections[1]));
    s.set_diff(p, std::move(d));
  }
  return s;
}

GradedModule cohomology(const ModuleComplex& x, int p) {
  Submodule k = kernel(x.diff(p));
  ModuleMorphism in = x.diff(p - 1);
  std::map<std::pair<int, int>, Matrix> basis;
  const GradedModule& km = k.module;
  for (int n = km.min_degree(); n <= km.max_degree(); ++n)
    for (int v = 0; v < km.algebra().vertex_count(); ++v) {
      if (!km.dim(v, n)) continue;
      Matrix img = in.at(v, n);
      if (!img.cols() || img.is_zero()) continue;
      Matrix cols = column_space(img).basis().transpose();
      auto c = solve(k.inclusion.at(v, n), cols);
      if (!c) throw Error("image of d is not inside the kernel; not a complex");
      basis[{v, n}] = std::move(*c);
    }
  GradedModule h = quotient_by(km, basis).module;
  h.trim();
  return h;
}

bool is_acyclic(const ModuleComplex& x) {
  for (int p = x.lo(); p <= x.hi(); ++p)
    if (!cohomology(x, p).is_zero()) return false;
  return true;
}

ModuleComplex truncate_le(const ModuleComplex& x, int n) {
  ModuleComplex y(x.algebra_ptr());
  for (int p = x.lo(); p < n; ++p) y.set_term(p, x.term(p));
  Submodule k = kernel(x.diff(n));
  y.set_term(n, k.module);
  for (int p = x.lo(); p < n - 1; ++p) y.set_diff(p, x.diff(p));
  auto f = factor_through_mono(x.diff(n - 1), k.inclusion);
  if (!f) throw Error("not a complex: d^{n-1} does not land in ker d^n");
  y.set_diff(n - 1, *f);
  return y;
}

ModuleComplex truncate_ge(const ModuleComplex& x, int n) {
  ModuleComplex y(x.algebra_ptr());
  Quotient q = cokernel(x.diff(n - 1));
  y.set_term(n, q.module);
  for (int p = n + 1; p <= x.hi(); ++p) y.set_term(p, x.term(p));
  y.set_diff(n, descend(x.diff(n), q.projection));
  for (int p = n + 1; p <= x.hi(); ++p) y.set_diff(p, x.diff(p));
  return y;
}

ModuleComplex brutal_truncate(const ModuleComplex& x, int lo, int hi) {
  ModuleComplex y(x.algebra_ptr());
  for (int p = std::max(lo, x.lo()); p <= std::min(hi, x.hi()); ++p) y.set_term(p, x.term(p));
  for (int p = std::max(lo, x.lo()); p < std::min(hi, x.hi()); ++p) y.set_diff(p, x.diff(p));
  return y;
}

ModuleComplex cone(const ChainMap& f) {
  if (!is_chain_map(f)) throw Error("cone of a map that is not a chain map");
  const ModuleComplex &X = f.source, &Y = f.target;
  ModuleComplex c(X.algebra_ptr());
  auto [lo0, hi0] = joint_range(X, Y);
  int lo = lo0 - 1, hi = hi0;
  std::map<int, DirectSum> sums;
  for (int p = lo; p <= hi + 1; ++p) sums.emplace(p, direct_sum({X.term(p + 1), Y.term(p)}, X.algebra_ptr()));
  for (int p = lo; p <= hi; ++p) c.set_term(p, sums.at(p).module);
  const Scalar minus = -X.algebra().field().one();
  for (int p = lo; p <= hi; ++p) {
    const DirectSum &a = sums.at(p), &b = sums.at(p + 1);
    ModuleMorphism d = compose(b.inclusions[0], compose(X.diff(p + 1).scaled(minus), a.projections[0])) +
                       compose(b.inclusions[1], compose(f.at(p + 1), a.projections[0])) +
                       compose(b.inclusions[1], compose(Y.diff(p), a.projections[1]));
    c.set_diff(p, std::move(d));
  }
  return c;
}

ChainMap identity_chain_map(const ModuleComplex& x) {
  ChainMap f{x, x, {}};
  for (int p = x.lo(); p <= x.hi(); ++p) f.comps[p] = identity_morphism(x.term(p));
  return f;
}

ChainMap zero_chain_map(const ModuleComplex& x, const ModuleComplex& y) { return ChainMap{x, y, {}}; }

namespace {

struct FlatComplex {
  std::map<int, FlatModule> terms;
  std::map<int, FlatMap> diffs;  // p -> p+1
};

FlatComplex flatten_complex(const ModuleComplex& x, int lo, int hi) {
  FlatComplex fc;
  for (int p = lo - 1; p <= hi + 1; ++p) fc.terms[p] = flatten(x.term(p));
  for (int p = lo - 1; p <= hi; ++p) fc.diffs[p] = flatten_map(x.diff(p), fc.terms[p], fc.terms[p + 1]);
  return fc;
}

FlatMap mul(const FlatMap& a, const FlatMap& b) {
  FlatMap c;
  for (std::size_t x = 0; x < a.size(); ++x) c.push_back(a[x] * b[x]);
  return c;
}

void append_entries(Vec& v, const FlatMap& m) {
  for (const auto& blk : m)
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j) v.push_back(blk(i, j));
}

std::size_t entry_count(const FlatModule& a, const FlatModule& b) {
  std::size_t s = 0;
  for (std::size_t x = 0; x < a.dims.size(); ++x) s += a.dims[x] * b.dims[x];
  return s;
}

// Drops coordinates that vanish in every vector.
void compress(std::vector<Vec>& vs, const FieldSpec& f) {
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < vs.front().size(); ++k)
    for (const auto& v : vs)
      if (!v[k].is_zero()) {
        keep.push_back(k);
        break;
      }
  for (auto& v : vs) {
    Vec c(keep.size(), f.zero());
    for (std::size_t k = 0; k < keep.size(); ++k) c[k] = v[keep[k]];
    v = std::move(c);
  }
}

// Hom in the homotopy category from term-level Hom bases. `z` receives the
// chain-map space in coordinates of the concatenated `same` bases.
HomK homotopy_engine(const FieldSpec& f, int lo, int hi, const FlatComplex& X, const FlatComplex& Y,
                     const std::map<int, std::vector<FlatMap>>& same,
                     const std::map<int, std::vector<FlatMap>>& down, Subspace* zout) {
  HomK out;
  // Equation space: Hom(X^p, Y^{p+1}) for p in [lo-1, hi].
  std::map<int, std::size_t> eq_off, raw_off;
  std::size_t eqs = 0, raw = 0;
  for (int p = lo - 1; p <= hi; ++p) {
    eq_off[p] = eqs;
    eqs += entry_count(X.terms.at(p), Y.terms.at(p + 1));
  }
  for (int p = lo; p <= hi; ++p) {
    raw_off[p] = raw;
    raw += entry_count(X.terms.at(p), Y.terms.at(p));
  }
  std::vector<Vec> cols;
  for (int p = lo; p <= hi; ++p)
    for (std::size_t i = 0; i < same.at(p).size(); ++i) {
      const FlatMap& g = same.at(p)[i];
      Vec c(eqs, f.zero());
      // (f d_X)^{p-1} gets g d_X^{p-1}; (d_Y f)^p gets -d_Y^p g.
      Vec a, b;
      append_entries(a, mul(g, X.diffs.at(p - 1)));
      FlatMap dg = mul(Y.diffs.at(p), g);
      append_entries(b, dg);
      for (std::size_t k = 0; k < a.size(); ++k) c[eq_off[p - 1] + k] += a[k];
      for (std::size_t k = 0; k < b.size(); ++k) c[eq_off[p] + k] -= b[k];
      cols.push_back(std::move(c));
    }
  if (cols.empty()) return out;
  compress(cols, f);
  std::size_t live = cols.front().size();
  Subspace z = live == 0 ? Subspace::full(f, cols.size())
                         : kernel(Matrix::from_rows(f, cols, live).transpose());
  out.chain_maps = z.dim();
  if (zout) *zout = z;
  if (!z.dim()) return out;
  std::vector<Vec> nulls;
  for (int p = lo; p <= hi; ++p) {
    auto it = down.find(p);
    if (it == down.end()) continue;
    for (const FlatMap& h : it->second) {
      Vec v(raw, f.zero());
      {
        Vec a;
        append_entries(a, mul(Y.diffs.at(p - 1), h));
        for (std::size_t k = 0; k < a.size(); ++k) v[raw_off[p] + k] += a[k];
      }
      if (raw_off.count(p - 1)) {
        Vec b;
        append_entries(b, mul(h, X.diffs.at(p - 1)));
        for (std::size_t k = 0; k < b.size(); ++k) v[raw_off[p - 1] + k] += b[k];
      }
      nulls.push_back(std::move(v));
    }
  }
  if (!nulls.empty()) compress(nulls, f);
  out.null_homotopic = (nulls.empty() || nulls.front().empty()) ? 0 : rank(Matrix::from_rows(f, nulls, nulls.front().size()));
  return out;
}

}  // namespace

HomK hom_k(const ModuleComplex& x, const ModuleComplex& y) {
  auto [lo, hi] = joint_range(x, y);
  HomK out;
  if (lo > hi) return out;
  const FieldSpec& f = x.algebra().field();
  FlatComplex fx = flatten_complex(x, lo, hi), fy = flatten_complex(y, lo, hi);
  std::map<int, std::vector<ModuleMorphism>> same_m;
  std::map<int, std::vector<FlatMap>> same, down;
  for (int p = lo; p <= hi; ++p) {
    same_m[p] = hom_graded(x.term(p), y.term(p));
    for (const auto& g : same_m[p]) same[p].push_back(flatten_map(g, fx.terms.at(p), fy.terms.at(p)));
    for (const auto& h : hom_graded(x.term(p), y.term(p - 1)))
      down[p].push_back(flatten_map(h, fx.terms.at(p), fy.terms.at(p - 1)));
  }
  std::vector<std::pair<int, std::size_t>> order;
  for (int p = lo; p <= hi; ++p)
    for (std::size_t i = 0; i < same[p].size(); ++i) order.emplace_back(p, i);
  Subspace z;
  out = homotopy_engine(f, lo, hi, fx, fy, same, down, &z);
  if (!out.chain_maps) return out;
  for (std::size_t r = 0; r < z.dim(); ++r) {
    ChainMap cm{x, y, {}};
    for (std::size_t k = 0; k < order.size(); ++k) {
      const Scalar& c = z.basis()(r, k);
      if (c.is_zero()) continue;
      auto [p, i] = order[k];
      ModuleMorphism term = same_m[p][i].scaled(c);
      auto it = cm.comps.find(p);
      if (it == cm.comps.end())
        cm.comps.emplace(p, std::move(term));
      else
        it->second = it->second + term;
    }
    out.basis.push_back(std::move(cm));
  }
  return out;
}

std::pair<int, int> shift_window(const ModuleComplex& x, const ModuleComplex& y) {
  auto [lo, hi] = joint_range(x, y);
  int a = 0, b = -1;
  bool any = false;
  for (int p = lo; p <= hi; ++p) {
    GradedModule s = x.term(p), t = y.term(p);
    if (s.is_zero() || t.is_zero()) continue;
    auto [u, v] = shift_window(s, t);
    a = any ? std::min(a, u) : u;
    b = any ? std::max(b, v) : v;
    any = true;
  }
  return {a, b};
}

std::size_t hom_k_total_dim(const ModuleComplex& x, const ModuleComplex& y) {
  auto [a, b] = shift_window(x, y);
  std::size_t s = 0;
  for (int r = a; r <= b; ++r) s += hom_k(x, grade_shift(y, r)).dim();
  return s;
}

HomK hom_k_ungraded(const ModuleComplex& x, const ModuleComplex& y) {
  auto [lo, hi] = joint_range(x, y);
  if (lo > hi) return {};
  const FieldSpec& f = x.algebra().field();
  FlatComplex fx = flatten_complex(x, lo, hi), fy = flatten_complex(y, lo, hi);
  std::map<int, std::vector<FlatMap>> same, down;
  for (int p = lo; p <= hi; ++p) {
    same[p] = flat_hom_basis(fx.terms.at(p), fy.terms.at(p), f);
    down[p] = flat_hom_basis(fx.terms.at(p), fy.terms.at(p - 1), f);
  }
  return homotopy_engine(f, lo, hi, fx, fy, same, down, nullptr);
}

IsoAnswer is_isomorphic(const ModuleComplex& x, const ModuleComplex& y, std::uint64_t seed) {
  auto [lo, hi] = joint_range(x, y);
  for (int p = lo; p <= hi; ++p) {
    GradedModule a = x.term(p), b = y.term(p);
    int l = std::min(a.min_degree(), b.min_degree()), h = std::max(a.max_degree(), b.max_degree());
    for (int n = l; n <= h; ++n)
      for (int v = 0; v < x.algebra().vertex_count(); ++v)
        if (a.dim(v, n) != b.dim(v, n)) return IsoAnswer::No;
  }
  bool all_zero = true;
  for (int p = lo; p <= hi; ++p)
    if (!x.term(p).is_zero()) all_zero = false;
  if (all_zero) return IsoAnswer::Yes;
  HomK hk = hom_k(x, y);
  if (hk.basis.empty()) return IsoAnswer::No;
  const FieldSpec& f = x.algebra().field();
  auto combine = [&](const std::vector<Scalar>& c) {
    ChainMap g{x, y, {}};
    for (std::size_t i = 0; i < hk.basis.size(); ++i) {
      if (c[i].is_zero()) continue;
      for (const auto& [p, m] : hk.basis[i].comps) {
        ModuleMorphism t = m.scaled(c[i]);
        auto it = g.comps.find(p);
        if (it == g.comps.end())
          g.comps.emplace(p, std::move(t));
        else
          it->second = it->second + t;
      }
    }
    return g;
  };
  auto degreewise_iso = [&](const ChainMap& g) {
    for (int p = lo; p <= hi; ++p)
      if (!g.at(p).is_isomorphism()) return false;
    return true;
  };
  if (!f.is_rational()) {
    double space = std::pow(static_cast<double>(f.characteristic()), static_cast<double>(hk.basis.size()));
    if (space <= 4096) {
      auto total = static_cast<std::size_t>(space);
      auto p = static_cast<std::size_t>(f.characteristic());
      std::vector<Scalar> c(hk.basis.size(), f.zero());
      for (std::size_t k = 0; k < total; ++k) {
        std::size_t t = k;
        for (auto& s : c) {
          s = f.from_int(static_cast<std::int64_t>(t % p));
          t /= p;
        }
        if (degreewise_iso(combine(c))) return IsoAnswer::Yes;
      }
      return IsoAnswer::No;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-7, 7);
  for (int trial = 0; trial < 32; ++trial) {
    std::vector<Scalar> c(hk.basis.size());
    for (auto& s : c) s = f.from_int(dist(rng));
    if (degreewise_iso(combine(c))) return IsoAnswer::Yes;
  }
  return IsoAnswer::Undetermined;
}

}  // namespace koszul
