#include "koszul/symbolic.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

SymbolicMatrix::SymbolicMatrix(std::vector<Generator> rows, std::vector<Generator> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
  entries_.reserve(rows_.size() * cols_.size());
  for (const auto& b : rows_)
    for (const auto& a : cols_) entries_.push_back(AlgElem{b.vertex, a.vertex, b.shift - a.shift, {}});
}

void SymbolicMatrix::set(std::size_t b, std::size_t a, AlgElem e) {
  AlgElem& slot = entries_.at(b * cols_.size() + a);
  if (e.is_zero()) {
    slot.coords.clear();
    return;
  }
  if (e.source != slot.source || e.target != slot.target || e.degree != slot.degree)
    throw Error("symbolic entry lies in the wrong algebra component");
  slot = std::move(e);
}

bool SymbolicMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const AlgElem& e) { return e.is_zero(); });
}

SymbolicMatrix compose(const GradedAlgebra& A, const SymbolicMatrix& g, const SymbolicMatrix& f) {
  if (!(f.row_generators() == g.col_generators())) throw Error("composing symbolic matrices with mismatched terms");
  SymbolicMatrix out(g.row_generators(), f.col_generators());
  for (std::size_t c = 0; c < g.rows(); ++c)
    for (std::size_t a = 0; a < f.cols(); ++a) {
      AlgElem acc = out.at(c, a);
      for (std::size_t b = 0; b < f.rows(); ++b) {
        const AlgElem &u = f.at(b, a), &v = g.at(c, b);
        if (u.is_zero() || v.is_zero()) continue;
        acc = A.add(acc, A.multiply(u, v));
      }
      out.set(c, a, std::move(acc));
    }
  return out;
}

SymbolicMatrix add(const GradedAlgebra& A, const SymbolicMatrix& x, const SymbolicMatrix& y) {
  if (!(x.row_generators() == y.row_generators()) || !(x.col_generators() == y.col_generators()))
    throw Error("adding symbolic matrices with mismatched terms");
  SymbolicMatrix out(x.row_generators(), x.col_generators());
  for (std::size_t b = 0; b < x.rows(); ++b)
    for (std::size_t a = 0; a < x.cols(); ++a) out.set(b, a, A.add(x.at(b, a), y.at(b, a)));
  return out;
}

SymbolicMatrix scaled(const GradedAlgebra& A, const SymbolicMatrix& x, const Scalar& s) {
  SymbolicMatrix out(x.row_generators(), x.col_generators());
  for (std::size_t b = 0; b < x.rows(); ++b)
    for (std::size_t a = 0; a < x.cols(); ++a)
      if (!x.at(b, a).is_zero()) out.set(b, a, A.scale(x.at(b, a), s));
  return out;
}

bool equal(const GradedAlgebra& A, const SymbolicMatrix& x, const SymbolicMatrix& y) {
  if (!(x.row_generators() == y.row_generators()) || !(x.col_generators() == y.col_generators())) return false;
  for (std::size_t b = 0; b < x.rows(); ++b)
    for (std::size_t a = 0; a < x.cols(); ++a)
      if (!A.equal(x.at(b, a), y.at(b, a))) return false;
  return true;
}

SymbolicMatrix scalar_identity(const GradedAlgebra& A, const std::vector<Generator>& gens, const Scalar& s) {
  SymbolicMatrix m(gens, gens);
  for (std::size_t i = 0; i < gens.size(); ++i) m.set(i, i, A.scale(A.unit(gens[i].vertex), s));
  return m;
}

int SymbolicComplex::lo() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int SymbolicComplex::hi() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

std::vector<Generator> SymbolicComplex::term(int p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? std::vector<Generator>{} : it->second;
}

SymbolicMatrix SymbolicComplex::diff(int p) const {
  auto it = diffs_.find(p);
  if (it != diffs_.end()) return it->second;
  return SymbolicMatrix(term(p + 1), term(p));
}

void SymbolicComplex::set_term(int p, std::vector<Generator> gens) {
  if (gens.empty())
    terms_.erase(p);
  else
    terms_[p] = std::move(gens);
}

void SymbolicComplex::set_diff(int p, SymbolicMatrix d) {
  if (!(d.col_generators() == term(p)) || !(d.row_generators() == term(p + 1)))
    throw Error("differential does not match the terms at position " + std::to_string(p));
  if (d.rows() == 0 || d.cols() == 0)
    diffs_.erase(p);
  else
    diffs_[p] = std::move(d);
}

bool SymbolicComplex::d_squared_zero() const {
  for (int p = lo(); p < hi() - 1; ++p)
    if (!compose(*alg_, diff(p + 1), diff(p)).is_zero()) return false;
  return true;
}

bool SymbolicComplex::is_linear() const {
  for (const auto& [p, gens] : terms_)
    for (const auto& g : gens)
      if (g.shift != p) return false;
  return true;
}

bool SymbolicComplex::is_minimal() const {
  for (const auto& [p, d] : diffs_)
    for (std::size_t b = 0; b < d.rows(); ++b)
      for (std::size_t a = 0; a < d.cols(); ++a)
        if (!d.at(b, a).is_zero() && d.at(b, a).degree < 1) return false;
  return true;
}

SymbolicMatrix SymbolicChainMap::at(int p) const {
  auto it = comps.find(p);
  if (it != comps.end()) return it->second;
  return SymbolicMatrix(target.term(p), source.term(p));
}

bool is_chain_map(const SymbolicChainMap& f) {
  const GradedAlgebra& A = f.source.algebra();
  int lo = std::min(f.source.lo(), f.target.lo()) - 1;
  int hi = std::max(f.source.hi(), f.target.hi());
  for (int p = lo; p <= hi; ++p) {
    SymbolicMatrix l = compose(A, f.at(p + 1), f.source.diff(p));
    SymbolicMatrix r = compose(A, f.target.diff(p), f.at(p));
    if (!equal(A, l, r)) return false;
  }
  return true;
}

SymbolicComplex shift(const SymbolicComplex& x, int k) {
  SymbolicComplex y(x.algebra_ptr());
  const Scalar sign = (k % 2 == 0) ? x.algebra().field().one() : -x.algebra().field().one();
  for (int p = x.lo(); p <= x.hi(); ++p) y.set_term(p - k, x.term(p));
  for (int p = x.lo(); p < x.hi(); ++p) y.set_diff(p - k, scaled(x.algebra(), x.diff(p), sign));
  return y;
}

namespace {
std::vector<Generator> shifted(std::vector<Generator> g, int i) {
  for (auto& x : g) x.shift += i;
  return g;
}

SymbolicMatrix reshift(const SymbolicMatrix& m, int i) {
  SymbolicMatrix out(shifted(m.row_generators(), i), shifted(m.col_generators(), i));
  for (std::size_t b = 0; b < m.rows(); ++b)
    for (std::size_t a = 0; a < m.cols(); ++a)
      if (!m.at(b, a).is_zero()) out.set(b, a, m.at(b, a));
  return out;
}

std::vector<Generator> concat(const std::vector<Generator>& a, const std::vector<Generator>& b) {
  std::vector<Generator> c = a;
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

void put_block(SymbolicMatrix& dst, std::size_t r0, std::size_t c0, const SymbolicMatrix& src) {
  for (std::size_t b = 0; b < src.rows(); ++b)
    for (std::size_t a = 0; a < src.cols(); ++a)
      if (!src.at(b, a).is_zero()) dst.set(r0 + b, c0 + a, src.at(b, a));
}
}  // namespace

SymbolicComplex grade_shift(const SymbolicComplex& x, int i) {
  SymbolicComplex y(x.algebra_ptr());
  for (int p = x.lo(); p <= x.hi(); ++p) y.set_term(p, shifted(x.term(p), i));
  for (int p = x.lo(); p < x.hi(); ++p) y.set_diff(p, reshift(x.diff(p), i));
  return y;
}

SymbolicComplex cone(const SymbolicChainMap& f) {
  if (!is_chain_map(f)) throw Error("cone of a map that is not a chain map");
  const SymbolicComplex &X = f.source, &Y = f.target;
  const GradedAlgebra& A = X.algebra();
  SymbolicComplex c(X.algebra_ptr());
  int lo = std::min(X.lo() - 1, Y.lo()), hi = std::max(X.hi() - 1, Y.hi());
  for (int p = lo; p <= hi; ++p) c.set_term(p, concat(X.term(p + 1), Y.term(p)));
  const Scalar minus = -A.field().one();
  for (int p = lo; p < hi; ++p) {
    SymbolicMatrix d(c.term(p + 1), c.term(p));
    std::size_t nx0 = X.term(p + 1).size(), nx1 = X.term(p + 2).size();
    put_block(d, 0, 0, scaled(A, X.diff(p + 1), minus));
    put_block(d, nx1, 0, f.at(p + 1));
    put_block(d, nx1, nx0, Y.diff(p));
    c.set_diff(p, std::move(d));
  }
  return c;
}

namespace {
std::size_t gen_dim(const GradedAlgebra& A, const Generator& g, int z, int n, std::optional<int> max_degree) {
  if (max_degree && n > *max_degree) return 0;
  return A.dim(g.vertex, z, n + g.shift);
}
}  // namespace

GradedModule materialize_term(const AlgebraPtr& a, const std::vector<Generator>& gens, std::optional<int> max_degree) {
  std::vector<GradedModule> parts;
  for (const auto& g : gens) parts.push_back(projective_upto(a, g.vertex, g.shift, max_degree));
  return direct_sum_module(parts, a);
}

namespace {
ModuleMorphism materialize_map_impl(const AlgebraPtr& ap, const SymbolicMatrix& m, const GradedModule& src,
                                    const GradedModule& tgt, std::optional<int> max_degree) {
  const GradedAlgebra& A = *ap;
  ModuleMorphism f(src, tgt);
  const auto &cols = m.col_generators(), &rows = m.row_generators();
  for (int n = src.min_degree(); n <= src.max_degree(); ++n)
    for (int z = 0; z < A.vertex_count(); ++z) {
      if (!src.dim(z, n) || !tgt.dim(z, n)) continue;
      Matrix blk(A.field(), tgt.dim(z, n), src.dim(z, n));
      std::size_t c0 = 0;
      for (std::size_t a = 0; a < cols.size(); ++a) {
        std::size_t ca = gen_dim(A, cols[a], z, n, max_degree);
        std::size_t r0 = 0;
        for (std::size_t b = 0; b < rows.size(); ++b) {
          std::size_t rb = gen_dim(A, rows[b], z, n, max_degree);
          const AlgElem& lam = m.at(b, a);
          if (ca && rb && !lam.is_zero()) {
            for (std::size_t k = 0; k < ca; ++k) {
              AlgElem img = A.multiply(A.basis_element(cols[a].vertex, z, n + cols[a].shift, k), lam);
              if (img.coords.empty()) continue;
              for (std::size_t i = 0; i < rb; ++i) blk(r0 + i, c0 + k) = img.coords[i];
            }
          }
          r0 += rb;
        }
        c0 += ca;
      }
      f.set(z, n, std::move(blk));
    }
  return f;
}

std::optional<int> infer_truncation(const GradedModule& m, const GradedAlgebra& A) {
  if (A.is_finite_dimensional()) return std::nullopt;
  return m.max_degree();
}
}  // namespace

ModuleMorphism materialize_map(const AlgebraPtr& a, const SymbolicMatrix& m, const GradedModule& src,
                               const GradedModule& tgt) {
  std::optional<int> d = infer_truncation(tgt, *a);
  if (d && !src.is_zero()) d = std::max(*d, src.max_degree());
  return materialize_map_impl(a, m, src, tgt, d);
}

ModuleComplex materialize(const SymbolicComplex& x, std::optional<int> max_degree) {
  const AlgebraPtr& a = x.algebra_ptr();
  if (a->is_finite_dimensional()) max_degree.reset();
  ModuleComplex out(a);
  std::map<int, GradedModule> terms;
  for (int p = x.lo(); p <= x.hi() + 1; ++p) terms.emplace(p, materialize_term(a, x.term(p), max_degree));
  for (int p = x.lo(); p <= x.hi(); ++p) out.set_term(p, terms.at(p));
  for (int p = x.lo(); p < x.hi(); ++p)
    out.set_diff(p, materialize_map_impl(a, x.diff(p), terms.at(p), terms.at(p + 1), max_degree));
  return out;
}

ChainMap materialize(const SymbolicChainMap& f, std::optional<int> max_degree) {
  const AlgebraPtr& a = f.source.algebra_ptr();
  if (a->is_finite_dimensional()) max_degree.reset();
  ChainMap out{materialize(f.source, max_degree), materialize(f.target, max_degree), {}};
  for (const auto& [p, m] : f.comps)
    out.comps[p] = materialize_map_impl(a, m, out.source.term(p), out.target.term(p), max_degree);
  return out;
}

std::vector<Generator> SymbolicDoubleComplex::term(int p, int q) const {
  auto it = terms.find({p, q});
  return it == terms.end() ? std::vector<Generator>{} : it->second;
}

SymbolicMatrix SymbolicDoubleComplex::h(int p, int q) const {
  auto it = d1.find({p, q});
  return it == d1.end() ? SymbolicMatrix(term(p + 1, q), term(p, q)) : it->second;
}

SymbolicMatrix SymbolicDoubleComplex::v(int p, int q) const {
  auto it = d2.find({p, q});
  return it == d2.end() ? SymbolicMatrix(term(p, q + 1), term(p, q)) : it->second;
}

bool SymbolicDoubleComplex::commutes() const {
  const GradedAlgebra& A = *algebra;
  for (const auto& [k, g] : terms) {
    auto [p, q] = k;
    if (!equal(A, compose(A, v(p + 1, q), h(p, q)), compose(A, h(p, q + 1), v(p, q)))) return false;
  }
  return true;
}

bool SymbolicDoubleComplex::squares_vanish() const {
  const GradedAlgebra& A = *algebra;
  for (const auto& [k, g] : terms) {
    auto [p, q] = k;
    if (!compose(A, h(p + 1, q), h(p, q)).is_zero()) return false;
    if (!compose(A, v(p, q + 1), v(p, q)).is_zero()) return false;
  }
  return true;
}

SymbolicComplex tot(const SymbolicDoubleComplex& D) {
  if (!D.commutes()) throw Error("double complex does not commute (d1 d2 != d2 d1)");
  const GradedAlgebra& A = *D.algebra;
  SymbolicComplex t(D.algebra);
  if (D.terms.empty()) return t;
  int pmin = D.terms.begin()->first.first, pmax = D.terms.rbegin()->first.first;
  int nmin = 0, nmax = 0;
  bool first = true;
  for (const auto& [k, g] : D.terms) {
    int n = k.first + k.second;
    nmin = first ? n : std::min(nmin, n);
    nmax = first ? n : std::max(nmax, n);
    first = false;
  }
  auto gens_at = [&](int n) {
    std::vector<Generator> g;
    for (int p = pmin; p <= pmax; ++p) {
      auto part = D.term(p, n - p);
      g.insert(g.end(), part.begin(), part.end());
    }
    return g;
  };
  for (int n = nmin; n <= nmax; ++n) t.set_term(n, gens_at(n));
  for (int n = nmin; n < nmax; ++n) {
    SymbolicMatrix d(t.term(n + 1), t.term(n));
    // Offsets of each p-block in Tot^n and Tot^{n+1}.
    std::map<int, std::size_t> c_off, r_off;
    std::size_t c = 0, r = 0;
    for (int p = pmin; p <= pmax + 1; ++p) {
      c_off[p] = c;
      r_off[p] = r;
      c += D.term(p, n - p).size();
      r += D.term(p, n + 1 - p).size();
    }
    for (int p = pmin; p <= pmax; ++p) {
      int q = n - p;
      if (D.term(p, q).empty()) continue;
      put_block(d, r_off[p + 1], c_off[p], D.h(p, q));
      SymbolicMatrix vv = D.v(p, q);
      put_block(d, r_off[p], c_off[p], p % 2 == 0 ? vv : scaled(A, vv, -A.field().one()));
    }
    t.set_diff(n, std::move(d));
  }
  return t;
}

}  // namespace koszul
