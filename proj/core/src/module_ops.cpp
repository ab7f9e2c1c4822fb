#include <algorithm>
#include <cmath>
#include <random>

#include "koszul/errors.hpp"
#include "koszul/graded_module.hpp"

namespace koszul {

namespace {

using Key = std::pair<int, int>;
using BasisMap = std::map<Key, Matrix>;

// Columns spanning the subspace.
Matrix columns_of(const Subspace& s) { return s.basis().transpose(); }

Matrix standard_columns(const FieldSpec& f, std::size_t n, const std::vector<std::size_t>& idx) {
  Matrix m(f, n, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) m(idx[k], k) = f.one();
  return m;
}

template <typename F>
void for_each_slot(const GradedModule& m, F&& fn) {
  for (int n = m.min_degree(); n <= m.max_degree(); ++n)
    for (int x = 0; x < m.algebra().vertex_count(); ++x)
      if (m.dim(x, n)) fn(x, n);
}

}  // namespace

Submodule submodule_from_basis(const GradedModule& m, const BasisMap& basis) {
  GradedModule s(m.algebra_ptr());
  auto get = [&](int x, int n) -> Matrix {
    auto it = basis.find({x, n});
    if (it == basis.end()) return Matrix(m.field(), m.dim(x, n), 0);
    return it->second;
  };
  for_each_slot(m, [&](int x, int n) { s.set_dim(x, n, get(x, n).cols()); });
  for (int a = 0; a < m.algebra().quiver().arrow_count(); ++a) {
    const Arrow& ar = m.algebra().quiver().arrow(a);
    for (int n = m.min_degree(); n < m.max_degree(); ++n) {
      Matrix bs = get(ar.source, n), bt = get(ar.target, n + 1);
      if (!bs.cols() || !bt.cols()) {
        if (bs.cols() && !(m.action(a, n) * bs).is_zero()) throw Error("subspace is not closed under the action");
        continue;
      }
      auto x = solve(bt, m.action(a, n) * bs);
      if (!x) throw Error("subspace is not closed under the action");
      s.set_action(a, n, std::move(*x));
    }
  }
  ModuleMorphism inc(s, m);
  for_each_slot(s, [&](int x, int n) { inc.set(x, n, get(x, n)); });
  return {std::move(s), std::move(inc)};
}

Quotient quotient_by(const GradedModule& m, const BasisMap& basis) {
  const FieldSpec& f = m.field();
  std::map<Key, Matrix> proj, lift;
  for_each_slot(m, [&](int x, int n) {
    std::size_t d = m.dim(x, n);
    auto it = basis.find({x, n});
    Subspace u = it == basis.end() ? Subspace(f, d) : Subspace::span(it->second.transpose());
    auto comp = complement_coordinates(u);
    Matrix c = standard_columns(f, d, comp);
    Matrix t = hstack(columns_of(u), c);
    Matrix inv = *inverse(t);
    proj[{x, n}] = inv.block(u.dim(), d, 0, d);
    lift[{x, n}] = std::move(c);
  });
  auto get = [&](std::map<Key, Matrix>& mp, int x, int n, bool rows_side) {
    auto it = mp.find({x, n});
    if (it != mp.end()) return it->second;
    return rows_side ? Matrix(f, 0, m.dim(x, n)) : Matrix(f, m.dim(x, n), 0);
  };
  GradedModule q(m.algebra_ptr());
  for (const auto& [k, p] : proj) q.set_dim(k.first, k.second, p.rows());
  for (int a = 0; a < m.algebra().quiver().arrow_count(); ++a) {
    const Arrow& ar = m.algebra().quiver().arrow(a);
    for (int n = m.min_degree(); n < m.max_degree(); ++n) {
      Matrix pt = get(proj, ar.target, n + 1, true), cs = get(lift, ar.source, n, false);
      if (!pt.rows() || !cs.cols()) continue;
      q.set_action(a, n, pt * m.action(a, n) * cs);
    }
  }
  ModuleMorphism pi(m, q);
  for (auto& [k, p] : proj)
    if (p.rows()) pi.set(k.first, k.second, p);
  return {std::move(q), std::move(pi)};
}

Submodule kernel(const ModuleMorphism& f) {
  BasisMap b;
  for_each_slot(f.source(), [&](int x, int n) { b[{x, n}] = columns_of(kernel(f.at(x, n))); });
  return submodule_from_basis(f.source(), b);
}

Submodule image(const ModuleMorphism& f) {
  BasisMap b;
  for_each_slot(f.target(), [&](int x, int n) {
    Matrix m = f.at(x, n);
    b[{x, n}] = m.cols() ? columns_of(column_space(m)) : Matrix(m.field(), m.rows(), 0);
  });
  return submodule_from_basis(f.target(), b);
}

Quotient cokernel(const ModuleMorphism& f) {
  BasisMap b;
  for_each_slot(f.target(), [&](int x, int n) {
    Matrix m = f.at(x, n);
    if (m.cols()) b[{x, n}] = columns_of(column_space(m));
  });
  return quotient_by(f.target(), b);
}

namespace {
BasisMap radical_basis(const GradedModule& m) {
  BasisMap b;
  const Quiver& q = m.algebra().quiver();
  for_each_slot(m, [&](int z, int n) {
    Matrix acc(m.field(), m.dim(z, n), 0);
    for (int a = 0; a < q.arrow_count(); ++a)
      if (q.arrow(a).target == z && m.dim(q.arrow(a).source, n - 1)) acc = hstack(acc, m.action(a, n - 1));
    b[{z, n}] = acc.cols() ? columns_of(column_space(acc)) : acc;
  });
  return b;
}
}  // namespace

Submodule radical(const GradedModule& m) { return submodule_from_basis(m, radical_basis(m)); }

Quotient top(const GradedModule& m) { return quotient_by(m, radical_basis(m)); }

Submodule socle(const GradedModule& m) {
  BasisMap b;
  const Quiver& q = m.algebra().quiver();
  for_each_slot(m, [&](int x, int n) {
    Matrix acc(m.field(), 0, m.dim(x, n));
    for (int a = 0; a < q.arrow_count(); ++a)
      if (q.arrow(a).source == x && m.dim(q.arrow(a).target, n + 1)) acc = vstack(acc, m.action(a, n));
    b[{x, n}] = columns_of(kernel(acc));
  });
  return submodule_from_basis(m, b);
}

Quotient truncate_above(const GradedModule& m, int d) {
  BasisMap b;
  for_each_slot(m, [&](int x, int n) {
    if (n > d) b[{x, n}] = Matrix::identity(m.field(), m.dim(x, n));
  });
  return quotient_by(m, b);
}

Submodule truncate_below(const GradedModule& m, int d) {
  BasisMap b;
  for_each_slot(m, [&](int x, int n) {
    if (n >= d) b[{x, n}] = Matrix::identity(m.field(), m.dim(x, n));
  });
  return submodule_from_basis(m, b);
}

std::optional<ModuleMorphism> factor_through_mono(const ModuleMorphism& f, const ModuleMorphism& mono) {
  ModuleMorphism g(f.source(), mono.source());
  bool ok = true;
  for_each_slot(f.source(), [&](int x, int n) {
    if (!ok) return;
    Matrix rhs = f.at(x, n);
    Matrix a = mono.at(x, n);
    if (a.cols() == 0) {
      if (!rhs.is_zero()) ok = false;
      return;
    }
    auto s = solve(a, rhs);
    if (!s) {
      ok = false;
      return;
    }
    g.set(x, n, std::move(*s));
  });
  if (!ok) return std::nullopt;
  return g;
}

std::vector<ModuleMorphism> hom_graded(const GradedModule& m, const GradedModule& n) {
  const FieldSpec& f = m.field();
  const GradedAlgebra& A = m.algebra();
  std::map<Key, std::size_t> off;
  std::size_t unknowns = 0;
  int lo = std::max(m.min_degree(), n.min_degree()), hi = std::min(m.max_degree(), n.max_degree());
  for (int d = lo; d <= hi; ++d)
    for (int x = 0; x < A.vertex_count(); ++x) {
      std::size_t sz = m.dim(x, d) * n.dim(x, d);
      if (!sz) continue;
      off[{x, d}] = unknowns;
      unknowns += sz;
    }
  if (unknowns == 0) return {};
  std::vector<Vec> eqs;
  for (int a = 0; a < A.quiver().arrow_count(); ++a) {
    const Arrow& ar = A.quiver().arrow(a);
    for (int d = lo - 1; d <= hi; ++d) {
      // F_t(d+1) M(a)_d - N(a)_d F_s(d) = 0
      std::size_t rows = n.dim(ar.target, d + 1), cols = m.dim(ar.source, d);
      if (!rows || !cols) continue;
      auto it_t = off.find({ar.target, d + 1});
      auto it_s = off.find({ar.source, d});
      if (it_t == off.end() && it_s == off.end()) continue;
      Matrix ma = m.action(a, d), na = n.action(a, d);
      std::size_t mt = m.dim(ar.target, d + 1), ns = n.dim(ar.source, d);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          Vec e(unknowns, f.zero());
          bool any = false;
          if (it_t != off.end())
            for (std::size_t k = 0; k < mt; ++k)
              if (!ma(k, j).is_zero()) {
                e[it_t->second + i * mt + k] += ma(k, j);
                any = true;
              }
          if (it_s != off.end())
            for (std::size_t k = 0; k < ns; ++k)
              if (!na(i, k).is_zero()) {
                e[it_s->second + k * cols + j] -= na(i, k);
                any = true;
              }
          if (any) eqs.push_back(std::move(e));
        }
    }
  }
  Subspace sol = eqs.empty() ? Subspace::full(f, unknowns) : kernel(Matrix::from_rows(f, eqs, unknowns));
  std::vector<ModuleMorphism> out;
  for (std::size_t r = 0; r < sol.dim(); ++r) {
    ModuleMorphism g(m, n);
    for (const auto& [k, o] : off) {
      std::size_t R = n.dim(k.first, k.second), C = m.dim(k.first, k.second);
      Matrix blk(f, R, C);
      for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) blk(i, j) = sol.basis()(r, o + i * C + j);
      g.set(k.first, k.second, std::move(blk));
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::size_t hom_graded_dim(const GradedModule& m, const GradedModule& n) { return hom_graded(m, n).size(); }

std::pair<int, int> shift_window(const GradedModule& m, const GradedModule& n) {
  return {n.min_degree() - m.max_degree(), n.max_degree() - m.min_degree()};
}

TotalHom hom_total(const GradedModule& m, const GradedModule& n) {
  TotalHom t;
  if (m.is_zero() || n.is_zero()) return t;
  auto [a, b] = shift_window(m, n);
  for (int r = a; r <= b; ++r)
    for (auto& g : hom_graded(m, shift(n, r))) t.basis.emplace_back(r, std::move(g));
  t.dim = t.basis.size();
  return t;
}

FlatModule flatten(const GradedModule& mod) {
  const GradedAlgebra& A = mod.algebra();
  const int V = A.vertex_count();
  FlatModule fm;
  fm.dims.assign(static_cast<std::size_t>(V), 0);
  fm.offsets.resize(static_cast<std::size_t>(V));
  for (int x = 0; x < V; ++x) {
    auto ux = static_cast<std::size_t>(x);
    for (int d = mod.min_degree(); d <= mod.max_degree(); ++d) {
      fm.offsets[ux][d] = fm.dims[ux];
      fm.dims[ux] += mod.dim(x, d);
    }
  }
  for (int a = 0; a < A.quiver().arrow_count(); ++a) {
    const Arrow& ar = A.quiver().arrow(a);
    auto s = static_cast<std::size_t>(ar.source), t = static_cast<std::size_t>(ar.target);
    Matrix big(mod.field(), fm.dims[t], fm.dims[s]);
    for (int d = mod.min_degree(); d < mod.max_degree(); ++d) {
      Matrix blk = mod.action(a, d);
      if (!blk.empty()) big.set_block(fm.offsets[t][d + 1], fm.offsets[s][d], blk);
    }
    fm.arrows.push_back(std::move(big));
    fm.ends.emplace_back(s, t);
  }
  return fm;
}

FlatMap flatten_map(const ModuleMorphism& f, const FlatModule& src, const FlatModule& tgt) {
  const GradedModule& m = f.source();
  FlatMap out;
  for (int x = 0; x < m.algebra().vertex_count(); ++x) {
    auto ux = static_cast<std::size_t>(x);
    Matrix big(m.field(), tgt.dims[ux], src.dims[ux]);
    for (const auto& [d, off] : src.offsets[ux]) {
      if (!m.dim(x, d) || !f.target().dim(x, d)) continue;
      big.set_block(tgt.offsets[ux].at(d), off, f.at(x, d));
    }
    out.push_back(std::move(big));
  }
  return out;
}

std::vector<FlatMap> flat_hom_basis(const FlatModule& m, const FlatModule& n, const FieldSpec& f) {
  const std::size_t V = m.dims.size();
  std::vector<std::size_t> off(V);
  std::size_t unknowns = 0;
  for (std::size_t x = 0; x < V; ++x) {
    off[x] = unknowns;
    unknowns += m.dims[x] * n.dims[x];
  }
  if (!unknowns) return {};
  std::vector<Vec> eqs;
  for (std::size_t a = 0; a < m.arrows.size(); ++a) {
    const Matrix &ma = m.arrows[a], &na = n.arrows[a];
    // ma : M(s) -> M(t), na : N(s) -> N(t); F_t ma - na F_s = 0
    auto [s, t] = m.ends[a];
    for (std::size_t i = 0; i < n.dims[t]; ++i)
      for (std::size_t j = 0; j < m.dims[s]; ++j) {
        Vec e(unknowns, f.zero());
        bool any = false;
        for (std::size_t k = 0; k < m.dims[t]; ++k)
          if (!ma(k, j).is_zero()) {
            e[off[t] + i * m.dims[t] + k] += ma(k, j);
            any = true;
          }
        for (std::size_t k = 0; k < n.dims[s]; ++k)
          if (!na(i, k).is_zero()) {
            e[off[s] + k * m.dims[s] + j] -= na(i, k);
            any = true;
          }
        if (any) eqs.push_back(std::move(e));
      }
  }
  Subspace sol = eqs.empty() ? Subspace::full(f, unknowns) : kernel(Matrix::from_rows(f, eqs, unknowns));
  std::vector<FlatMap> out;
  for (std::size_t r = 0; r < sol.dim(); ++r) {
    FlatMap g;
    for (std::size_t x = 0; x < V; ++x) {
      Matrix blk(f, n.dims[x], m.dims[x]);
      for (std::size_t i = 0; i < n.dims[x]; ++i)
        for (std::size_t j = 0; j < m.dims[x]; ++j) blk(i, j) = sol.basis()(r, off[x] + i * m.dims[x] + j);
      g.push_back(std::move(blk));
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::size_t hom_ungraded_dim(const GradedModule& m, const GradedModule& n) {
  return flat_hom_basis(flatten(m), flatten(n), m.field()).size();
}

Cover projective_cover(const GradedModule& m, std::optional<int> max_degree) {
  const GradedAlgebra& A = m.algebra();
  const FieldSpec& f = m.field();
  BasisMap rad = radical_basis(m);
  struct Gen {
    int x, n;
    Vec v;
  };
  std::vector<Gen> gens;
  for_each_slot(m, [&](int x, int n) {
    Subspace u = Subspace::span(rad.at({x, n}).transpose());
    if (rad.at({x, n}).cols() == 0) u = Subspace(f, m.dim(x, n));
    for (auto j : complement_coordinates(u)) {
      Vec v(m.dim(x, n), f.zero());
      v[j] = f.one();
      gens.push_back({x, n, std::move(v)});
    }
  });
  std::vector<GradedModule> parts;
  Cover c;
  for (const auto& g : gens) {
    parts.push_back(projective_upto(m.algebra_ptr(), g.x, -g.n, max_degree));
    c.generators.emplace_back(g.x, -g.n);
  }
  c.module = direct_sum_module(parts, m.algebra_ptr());
  c.map = ModuleMorphism(c.module, m);
  for_each_slot(c.module, [&](int z, int d) {
    if (!m.dim(z, d)) return;
    Matrix blk(f, m.dim(z, d), 0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto& g = gens[i];
      int len = d - g.n;
      std::size_t pd = parts[i].dim(z, d);
      Matrix part(f, m.dim(z, d), pd);
      for (std::size_t k = 0; k < pd; ++k) {
        Vec img = m.element_action(A.basis_element(g.x, z, len, k), g.n).apply(g.v);
        for (std::size_t i = 0; i < img.size(); ++i) part(i, k) = img[i];
      }
      blk = hstack(blk, part);
    }
    c.map.set(z, d, std::move(blk));
  });
  return c;
}

Cover injective_envelope(const GradedModule& m) {
  const GradedAlgebra& A = m.algebra();
  const FieldSpec& f = m.field();
  Submodule soc = socle(m);
  struct Cogen {
    int x, n;
    Vec lambda;
  };
  std::vector<Cogen> cogens;
  for_each_slot(m, [&](int x, int n) {
    Matrix b = soc.inclusion.at(x, n);
    if (!b.cols()) return;
    Matrix l = solve(b.transpose(), Matrix::identity(f, b.cols()))->transpose();
    for (std::size_t i = 0; i < l.rows(); ++i) cogens.push_back({x, n, l.row(i)});
  });
  Cover c;
  std::vector<GradedModule> parts;
  for (const auto& g : cogens) {
    std::optional<int> horizon;
    if (!A.is_finite_dimensional()) horizon = g.n - m.min_degree();
    parts.push_back(injective(m.algebra_ptr(), g.x, -g.n, horizon));
    c.generators.emplace_back(g.x, -g.n);
  }
  c.module = direct_sum_module(parts, m.algebra_ptr());
  c.map = ModuleMorphism(m, c.module);
  for_each_slot(m, [&](int z, int d) {
    if (!c.module.dim(z, d)) return;
    Matrix blk(f, 0, m.dim(z, d));
    for (std::size_t i = 0; i < cogens.size(); ++i) {
      const auto& g = cogens[i];
      int len = g.n - d;
      std::size_t pd = parts[i].dim(z, d);
      Matrix part(f, pd, m.dim(z, d));
      for (std::size_t q = 0; q < pd; ++q) {
        Matrix act = m.element_action(A.basis_element(z, g.x, len, q), d);
        Matrix row = Matrix::row_vector(f, g.lambda) * act;
        part.set_row(q, row.row(0));
      }
      blk = vstack(blk, part);
    }
    c.map.set(z, d, std::move(blk));
  });
  return c;
}

IsoAnswer is_isomorphic(const GradedModule& a, const GradedModule& b, std::uint64_t seed) {
  int lo = std::min(a.min_degree(), b.min_degree()), hi = std::max(a.max_degree(), b.max_degree());
  for (int n = lo; n <= hi; ++n)
    for (int x = 0; x < a.algebra().vertex_count(); ++x)
      if (a.dim(x, n) != b.dim(x, n)) return IsoAnswer::No;
  if (a.is_zero()) return IsoAnswer::Yes;
  auto basis = hom_graded(a, b);
  if (basis.empty()) return IsoAnswer::No;
  const FieldSpec& f = a.field();
  auto combine = [&](const std::vector<Scalar>& c) {
    ModuleMorphism g(a, b);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!c[i].is_zero()) g = g + basis[i].scaled(c[i]);
    return g;
  };
  // Small prime fields: exhaustive search is a proof either way.
  if (!f.is_rational()) {
    double space = std::pow(static_cast<double>(f.characteristic()), static_cast<double>(basis.size()));
    if (space <= 4096) {
      std::vector<Scalar> c(basis.size(), f.zero());
      auto total = static_cast<std::size_t>(space);
      for (std::size_t k = 0; k < total; ++k) {
        std::size_t t = k;
        for (auto& s : c) {
          s = f.from_int(static_cast<std::int64_t>(t % static_cast<std::size_t>(f.characteristic())));
          t /= static_cast<std::size_t>(f.characteristic());
        }
        if (combine(c).is_isomorphism()) return IsoAnswer::Yes;
      }
      return IsoAnswer::No;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-7, 7);
  for (int trial = 0; trial < 32; ++trial) {
    std::vector<Scalar> c(basis.size());
    for (auto& s : c) s = f.from_int(dist(rng));
    if (combine(c).is_isomorphism()) return IsoAnswer::Yes;
  }
  return IsoAnswer::Undetermined;
}

}  // namespace koszul
