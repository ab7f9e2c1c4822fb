#include "koszul/graded_module.hpp"

#include <algorithm>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

namespace {
std::size_t idx(int n, int lo) { return static_cast<std::size_t>(n - lo); }
std::size_t uz(int v) { return static_cast<std::size_t>(v); }
}  // namespace

GradedModule::GradedModule(AlgebraPtr a) : alg_(std::move(a)) {
  dims_.assign(uz(alg_->vertex_count()), {});
  acts_.assign(uz(alg_->quiver().arrow_count()), {});
}

std::size_t GradedModule::dim(int x, int n) const {
  if (n < lo_ || n > hi_) return 0;
  return dims_[uz(x)][idx(n, lo_)];
}

std::size_t GradedModule::total_dim() const {
  std::size_t s = 0;
  for (const auto& v : dims_)
    for (auto d : v) s += d;
  return s;
}

std::size_t GradedModule::degree_dim(int n) const {
  std::size_t s = 0;
  for (int x = 0; x < alg_->vertex_count(); ++x) s += dim(x, n);
  return s;
}

void GradedModule::extend_range(int n) {
  if (hi_ < lo_) {
    lo_ = hi_ = n;
    for (auto& v : dims_) v.assign(1, 0);
    for (auto& v : acts_) v.assign(1, Matrix());
    return;
  }
  if (n < lo_) {
    std::size_t k = idx(lo_, n);
    for (auto& v : dims_) v.insert(v.begin(), k, 0);
    for (auto& v : acts_) v.insert(v.begin(), k, Matrix());
    lo_ = n;
  } else if (n > hi_) {
    std::size_t k = idx(n, hi_);
    for (auto& v : dims_) v.insert(v.end(), k, 0);
    for (auto& v : acts_) v.insert(v.end(), k, Matrix());
    hi_ = n;
  }
}

void GradedModule::set_dim(int x, int n, std::size_t d) {
  if (d == 0 && (n < lo_ || n > hi_)) return;
  extend_range(n);
  dims_[uz(x)][idx(n, lo_)] = d;
}

void GradedModule::set_action(int arrow, int n, Matrix m) {
  const Arrow& a = alg_->quiver().arrow(arrow);
  if (m.rows() != dim(a.target, n + 1) || m.cols() != dim(a.source, n))
    throw Error("action matrix for arrow '" + a.name + "' has the wrong shape");
  if (m.empty()) return;
  acts_[uz(arrow)][idx(n, lo_)] = std::move(m);
}

Matrix GradedModule::action(int arrow, int n) const {
  const Arrow& a = alg_->quiver().arrow(arrow);
  std::size_t r = dim(a.target, n + 1), c = dim(a.source, n);
  if (n >= lo_ && n <= hi_) {
    const Matrix& m = acts_[uz(arrow)][idx(n, lo_)];
    if (m.rows() == r && m.cols() == c && !(r && c && m.field() != field())) return m;
  }
  return Matrix(field(), r, c);
}

Matrix GradedModule::path_action(const PathWord& p, int n) const {
  Matrix m = Matrix::identity(field(), dim(p.source, n));
  int deg = n;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    m = action(*it, deg) * m;
    ++deg;
  }
  return m;
}

Matrix GradedModule::element_action(const AlgElem& e, int n) const {
  Matrix out(field(), dim(e.target, n + e.degree), dim(e.source, n));
  for (std::size_t k = 0; k < e.coords.size(); ++k) {
    if (e.coords[k].is_zero()) continue;
    out = out + path_action(alg_->basis_path(e.source, e.target, e.degree, k), n).scaled(e.coords[k]);
  }
  return out;
}

bool GradedModule::satisfies_relations() const {
  const auto& pres = alg_->presentation();
  for (const auto& [key, b] : pres.blocks()) {
    const Matrix& rel = b.relations.basis();
    for (std::size_t r = 0; r < rel.rows(); ++r)
      for (int n = lo_; n <= hi_; ++n) {
        if (dim(key.first, n) == 0 || dim(key.second, n + 2) == 0) continue;
        Matrix acc(field(), dim(key.second, n + 2), dim(key.first, n));
        for (std::size_t k = 0; k < b.paths.size(); ++k)
          if (!rel(r, k).is_zero()) acc = acc + path_action(b.paths[k], n).scaled(rel(r, k));
        if (!acc.is_zero()) return false;
      }
  }
  return true;
}

void GradedModule::validate() const {
  for (int a = 0; a < alg_->quiver().arrow_count(); ++a)
    for (int n = lo_; n <= hi_; ++n) {
      const Matrix& m = acts_[uz(a)][idx(n, lo_)];
      const Arrow& ar = alg_->quiver().arrow(a);
      if (!m.empty() && (m.rows() != dim(ar.target, n + 1) || m.cols() != dim(ar.source, n)))
        throw Error("stale action matrix for arrow '" + ar.name + "'");
    }
  if (!satisfies_relations()) throw Error("module does not satisfy the relations");
}

void GradedModule::trim() {
  int a = hi_ + 1, b = lo_ - 1;
  for (int n = lo_; n <= hi_; ++n)
    if (degree_dim(n) > 0) {
      a = std::min(a, n);
      b = std::max(b, n);
    }
  if (a > b) {
    lo_ = 0;
    hi_ = -1;
    for (auto& v : dims_) v.clear();
    for (auto& v : acts_) v.clear();
    return;
  }
  for (auto& v : dims_) v = std::vector<std::size_t>(v.begin() + static_cast<long>(idx(a, lo_)), v.begin() + static_cast<long>(idx(b, lo_)) + 1);
  for (auto& v : acts_) v = std::vector<Matrix>(v.begin() + static_cast<long>(idx(a, lo_)), v.begin() + static_cast<long>(idx(b, lo_)) + 1);
  lo_ = a;
  hi_ = b;
}

bool GradedModule::operator==(const GradedModule& o) const {
  if (alg_ != o.alg_ && !alg_->presentation().same_algebra(o.alg_->presentation())) return false;
  int a = std::min(lo_, o.lo_), b = std::max(hi_, o.hi_);
  for (int n = a; n <= b; ++n)
    for (int x = 0; x < alg_->vertex_count(); ++x)
      if (dim(x, n) != o.dim(x, n)) return false;
  for (int ar = 0; ar < alg_->quiver().arrow_count(); ++ar)
    for (int n = a; n <= b; ++n)
      if (!(action(ar, n) == o.action(ar, n))) return false;
  return true;
}

ModuleMorphism::ModuleMorphism(GradedModule src, GradedModule tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {}

Matrix ModuleMorphism::at(int x, int n) const {
  auto it = maps_.find({x, n});
  std::size_t r = tgt_.dim(x, n), c = src_.dim(x, n);
  if (it != maps_.end() && it->second.rows() == r && it->second.cols() == c) return it->second;
  return Matrix(src_.field(), r, c);
}

void ModuleMorphism::set(int x, int n, Matrix m) {
  if (m.rows() != tgt_.dim(x, n) || m.cols() != src_.dim(x, n)) throw Error("morphism block has the wrong shape");
  if (m.empty()) return;
  maps_[{x, n}] = std::move(m);
}

bool ModuleMorphism::is_zero() const {
  for (const auto& [k, m] : maps_)
    if (!m.is_zero()) return false;
  return true;
}

bool ModuleMorphism::commutes() const {
  const GradedAlgebra& A = src_.algebra();
  int lo = std::min(src_.min_degree(), tgt_.min_degree()) - 1;
  int hi = std::max(src_.max_degree(), tgt_.max_degree());
  for (int a = 0; a < A.quiver().arrow_count(); ++a) {
    const Arrow& ar = A.quiver().arrow(a);
    for (int n = lo; n <= hi; ++n) {
      if (src_.dim(ar.source, n) == 0 || tgt_.dim(ar.target, n + 1) == 0) continue;
      if (!(at(ar.target, n + 1) * src_.action(a, n) == tgt_.action(a, n) * at(ar.source, n))) return false;
    }
  }
  return true;
}

void ModuleMorphism::validate() const {
  if (!commutes()) throw Error("not a module morphism: a commuting square fails");
}

bool ModuleMorphism::is_isomorphism() const {
  int lo = std::min(src_.min_degree(), tgt_.min_degree());
  int hi = std::max(src_.max_degree(), tgt_.max_degree());
  for (int n = lo; n <= hi; ++n)
    for (int x = 0; x < src_.algebra().vertex_count(); ++x) {
      std::size_t d = src_.dim(x, n);
      if (d != tgt_.dim(x, n)) return false;
      if (d && rank(at(x, n)) != d) return false;
    }
  return true;
}

ModuleMorphism ModuleMorphism::operator+(const ModuleMorphism& o) const {
  ModuleMorphism s = *this;
  for (const auto& [k, m] : o.maps_) s.maps_[k] = s.at(k.first, k.second) + m;
  return s;
}

ModuleMorphism ModuleMorphism::scaled(const Scalar& c) const {
  ModuleMorphism s = *this;
  for (auto& [k, m] : s.maps_) m = m.scaled(c);
  return s;
}

Vec ModuleMorphism::flatten() const {
  Vec v;
  int lo = std::min(src_.min_degree(), tgt_.min_degree());
  int hi = std::max(src_.max_degree(), tgt_.max_degree());
  for (int x = 0; x < src_.algebra().vertex_count(); ++x)
    for (int n = lo; n <= hi; ++n) {
      Matrix m = at(x, n);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    }
  return v;
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  ModuleMorphism h(f.source(), g.target());
  const GradedModule& m = f.source();
  for (int x = 0; x < m.algebra().vertex_count(); ++x)
    for (int n = m.min_degree(); n <= m.max_degree(); ++n) {
      if (m.dim(x, n) == 0 || g.target().dim(x, n) == 0) continue;
      h.set(x, n, g.at(x, n) * f.at(x, n));
    }
  return h;
}

ModuleMorphism identity_morphism(const GradedModule& m) {
  ModuleMorphism f(m, m);
  for (int x = 0; x < m.algebra().vertex_count(); ++x)
    for (int n = m.min_degree(); n <= m.max_degree(); ++n)
      if (m.dim(x, n)) f.set(x, n, Matrix::identity(m.field(), m.dim(x, n)));
  return f;
}

GradedModule shift(const GradedModule& m, int i) {
  GradedModule s(m.algebra_ptr());
  for (int n = m.min_degree(); n <= m.max_degree(); ++n)
    for (int x = 0; x < m.algebra().vertex_count(); ++x) s.set_dim(x, n - i, m.dim(x, n));
  for (int a = 0; a < m.algebra().quiver().arrow_count(); ++a)
    for (int n = m.min_degree(); n <= m.max_degree(); ++n) s.set_action(a, n - i, m.action(a, n));
  return s;
}

ModuleMorphism shift(const ModuleMorphism& f, int i) {
  ModuleMorphism g(shift(f.source(), i), shift(f.target(), i));
  const GradedModule& m = f.source();
  for (int x = 0; x < m.algebra().vertex_count(); ++x)
    for (int n = m.min_degree(); n <= m.max_degree(); ++n)
      if (m.dim(x, n) && f.target().dim(x, n)) g.set(x, n - i, f.at(x, n));
  return g;
}

GradedModule zero_module(AlgebraPtr a) { return GradedModule(std::move(a)); }

GradedModule simple(AlgebraPtr a, int x, int r) {
  GradedModule m(std::move(a));
  m.set_dim(x, -r, 1);
  return m;
}

GradedModule projective_upto(AlgebraPtr a, int x, int r, std::optional<int> max_degree) {
  const GradedAlgebra& A = *a;
  int top;
  if (A.is_finite_dimensional()) {
    top = A.top_degree();
    if (max_degree) top = std::min(top, *max_degree + r);
  } else {
    if (!max_degree) throw Unsupported("projective over a locally finite algebra needs a horizon");
    top = *max_degree + r;
  }
  GradedModule m(a);
  for (int d = 0; d <= top; ++d)
    for (int z = 0; z < A.vertex_count(); ++z) m.set_dim(z, d - r, A.dim(x, z, d));
  for (int ai = 0; ai < A.quiver().arrow_count(); ++ai) {
    const Arrow& ar = A.quiver().arrow(ai);
    AlgElem alpha = A.path_element(PathWord{ar.source, ar.target, {ai}});
    for (int d = 0; d < top; ++d) {
      std::size_t src = A.dim(x, ar.source, d), tgt = A.dim(x, ar.target, d + 1);
      if (!src || !tgt) continue;
      Matrix mat(A.field(), tgt, src);
      for (std::size_t k = 0; k < src; ++k) {
        AlgElem img = A.multiply(alpha, A.basis_element(x, ar.source, d, k));
        for (std::size_t i = 0; i < tgt; ++i) mat(i, k) = img.coords[i];
      }
      m.set_action(ai, d - r, std::move(mat));
    }
  }
  return m;
}

GradedModule projective(AlgebraPtr a, int x, int r, std::optional<int> horizon) {
  std::optional<int> maxdeg;
  if (horizon) maxdeg = *horizon - r;
  if (a->is_finite_dimensional()) maxdeg.reset();
  return projective_upto(std::move(a), x, r, maxdeg);
}

GradedModule injective(AlgebraPtr a, int x, int r, std::optional<int> horizon) {
  const GradedAlgebra& A = *a;
  int depth;
  if (A.is_finite_dimensional())
    depth = A.top_degree();
  else if (horizon)
    depth = *horizon;
  else
    throw Unsupported("injective over a locally finite algebra needs a horizon");
  GradedModule m(a);
  for (int d = 0; d <= depth; ++d)
    for (int z = 0; z < A.vertex_count(); ++z) m.set_dim(z, -r - d, A.dim(z, x, d));
  for (int ai = 0; ai < A.quiver().arrow_count(); ++ai) {
    const Arrow& ar = A.quiver().arrow(ai);
    AlgElem alpha = A.path_element(PathWord{ar.source, ar.target, {ai}});
    for (int d = 1; d <= depth; ++d) {
      std::size_t src = A.dim(ar.source, x, d), tgt = A.dim(ar.target, x, d - 1);
      if (!src || !tgt) continue;
      Matrix mat(A.field(), tgt, src);
      for (std::size_t q = 0; q < tgt; ++q) {
        AlgElem qa = A.multiply(A.basis_element(ar.target, x, d - 1, q), alpha);
        for (std::size_t p = 0; p < src; ++p) mat(q, p) = qa.coords[p];
      }
      m.set_action(ai, -r - d, std::move(mat));
    }
  }
  return m;
}

GradedModule direct_sum_module(const std::vector<GradedModule>& parts, AlgebraPtr a) {
  GradedModule S(a);
  const GradedAlgebra& A = *a;
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& p : parts) {
    if (p.is_zero()) continue;
    lo = any ? std::min(lo, p.min_degree()) : p.min_degree();
    hi = any ? std::max(hi, p.max_degree()) : p.max_degree();
    any = true;
  }
  for (int n = lo; n <= hi; ++n)
    for (int x = 0; x < A.vertex_count(); ++x) {
      std::size_t d = 0;
      for (const auto& p : parts) d += p.dim(x, n);
      S.set_dim(x, n, d);
    }
  for (int ai = 0; ai < A.quiver().arrow_count(); ++ai) {
    const Arrow& ar = A.quiver().arrow(ai);
    for (int n = lo; n <= hi; ++n) {
      Matrix m(A.field(), S.dim(ar.target, n + 1), S.dim(ar.source, n));
      std::size_t r0 = 0, c0 = 0;
      for (const auto& p : parts) {
        m.set_block(r0, c0, p.action(ai, n));
        r0 += p.dim(ar.target, n + 1);
        c0 += p.dim(ar.source, n);
      }
      S.set_action(ai, n, std::move(m));
    }
  }
  return S;
}

DirectSum direct_sum(const std::vector<GradedModule>& parts, AlgebraPtr a) {
  DirectSum ds{direct_sum_module(parts, a), {}, {}};
  const GradedAlgebra& A = *a;
  const GradedModule& S = ds.module;
  int lo = S.min_degree(), hi = S.max_degree();
  std::vector<std::map<std::pair<int, int>, std::size_t>> offsets(parts.size());
  for (int n = lo; n <= hi; ++n)
    for (int x = 0; x < A.vertex_count(); ++x) {
      std::size_t off = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        offsets[i][{x, n}] = off;
        off += parts[i].dim(x, n);
      }
    }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    ModuleMorphism inc(parts[i], S), proj(S, parts[i]);
    for (int n = lo; n <= hi; ++n)
      for (int x = 0; x < A.vertex_count(); ++x) {
        std::size_t d = parts[i].dim(x, n);
        if (!d) continue;
        Matrix in(A.field(), S.dim(x, n), d), pr(A.field(), d, S.dim(x, n));
        std::size_t off = offsets[i][{x, n}];
        for (std::size_t k = 0; k < d; ++k) {
          in(off + k, k) = A.field().one();
          pr(k, off + k) = A.field().one();
        }
        inc.set(x, n, std::move(in));
        proj.set(x, n, std::move(pr));
      }
    ds.inclusions.push_back(std::move(inc));
    ds.projections.push_back(std::move(proj));
  }
  return ds;
}

std::string dimension_table(const GradedModule& m) {
  std::ostringstream os;
  const Quiver& q = m.algebra().quiver();
  os << "degree";
  for (const auto& v : q.vertices()) os << "\t" << v;
  os << "\n";
  for (int n = m.min_degree(); n <= m.max_degree(); ++n) {
    os << n;
    for (int x = 0; x < q.vertex_count(); ++x) os << "\t" << m.dim(x, n);
    os << "\n";
  }
  return os.str();
}

}  // namespace koszul
