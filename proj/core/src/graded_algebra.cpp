#include "koszul/graded_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

namespace {
constexpr int kFiniteProbe = 8;
}

bool AlgElem::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

GradedAlgebra::GradedAlgebra(QuadraticPresentation p) : pres_(std::move(p)) {}

std::shared_ptr<const GradedAlgebra> GradedAlgebra::make(QuadraticPresentation p) {
  return std::make_shared<const GradedAlgebra>(std::move(p));
}

void GradedAlgebra::ensure_degree(int n) const {
  if (n < 0) throw Error("negative degree");
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<int>(degrees_.size()) <= n) build_degree(static_cast<int>(degrees_.size()));
}

namespace {

// Normal form of coordinates over b.paths, reduced by the rref ideal basis.
Vec reduce_in(const GradedAlgebra::Block& b, const Vec& coeffs, const FieldSpec& f) {
  Vec out(b.basis.size(), f.zero());
  const Matrix& rows = b.ideal.basis();
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    const Scalar& c = coeffs[p];
    if (c.is_zero()) continue;
    if (b.coord_of_path[p] >= 0) {
      out[static_cast<std::size_t>(b.coord_of_path[p])] += c;
    } else {
      // path = path - row  (rref row has 1 at the pivot, zeros at other pivots)
      auto r = static_cast<std::size_t>(b.ideal_row_of_path[p]);
      for (std::size_t k = 0; k < b.basis.size(); ++k) {
        const Scalar& v = rows(r, b.basis[k]);
        if (!v.is_zero()) out[k] -= c * v;
      }
    }
  }
  return out;
}

// arrow * (normal-form coordinates of a degree n-1 element) as coordinates
// over the words of the degree n block `to`.
void prefix_into(const GradedAlgebra::Block& from, const Vec& coords, int arrow, const GradedAlgebra::Block& to,
                 const Scalar& scale, Vec& acc) {
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].is_zero()) continue;
    std::vector<int> w{arrow};
    const auto& tail = from.paths[from.basis[k]].arrows;
    w.insert(w.end(), tail.begin(), tail.end());
    acc[to.index.at(w)] += scale * coords[k];
  }
}

}  // namespace

// Degree n is spanned by the words a*w, w a normal word of degree n-1; the
// relations needed on top of those are R_2 times normal words of degree n-2.
void GradedAlgebra::build_degree(int n) const {
  const int V = vertex_count();
  const Quiver& q = quiver();
  const FieldSpec& f = field();
  std::vector<Block> blocks(static_cast<std::size_t>(V * V));
  auto prev = [&](int d, int x, int z) -> const Block& {
    return d == n ? blocks[static_cast<std::size_t>(x * V + z)]
                  : degrees_[static_cast<std::size_t>(d)][static_cast<std::size_t>(x * V + z)];
  };
  for (int x = 0; x < V; ++x)
    for (int z = 0; z < V; ++z) {
      Block& b = blocks[static_cast<std::size_t>(x * V + z)];
      if (n == 0) {
        b.paths = paths_between(q, x, z, 0);
      } else {
        for (int a = 0; a < q.arrow_count(); ++a) {
          const Arrow& ar = q.arrow(a);
          if (ar.target != z) continue;
          const Block& tail = prev(n - 1, x, ar.source);
          for (std::size_t k : tail.basis) {
            PathWord w{x, z, {a}};
            w.arrows.insert(w.arrows.end(), tail.paths[k].arrows.begin(), tail.paths[k].arrows.end());
            b.paths.push_back(std::move(w));
          }
        }
        std::sort(b.paths.begin(), b.paths.end(), [](const PathWord& u, const PathWord& v) { return u.arrows < v.arrows; });
      }
      for (std::size_t i = 0; i < b.paths.size(); ++i) b.index.emplace(b.paths[i].arrows, i);
      const std::size_t N = b.paths.size();
      std::vector<Vec> gens;
      if (n >= 2 && N > 0) {
        for (int w = 0; w < V; ++w) {
          const RelationBlock& rb = pres_.block(w, z);
          if (rb.relations.dim() == 0) continue;
          const Block& tails = prev(n - 2, x, w);
          for (std::size_t t : tails.basis) {
            for (std::size_t r = 0; r < rb.relations.dim(); ++r) {
              Vec v(N, f.zero());
              for (std::size_t k = 0; k < rb.paths.size(); ++k) {
                const Scalar& c = rb.relations.basis()(r, k);
                if (c.is_zero()) continue;
                int outer = rb.paths[k].arrows[0], inner = rb.paths[k].arrows[1];
                // inner * t, reduced in degree n-1
                const Block& mid = prev(n - 1, x, q.arrow(inner).target);
                Vec word(mid.paths.size(), f.zero());
                std::vector<int> it{inner};
                it.insert(it.end(), tails.paths[t].arrows.begin(), tails.paths[t].arrows.end());
                word[mid.index.at(it)] = f.one();
                prefix_into(mid, reduce_in(mid, word, f), outer, b, c, v);
              }
              gens.push_back(std::move(v));
            }
          }
        }
      }
      b.ideal = Subspace::span(f, N, gens);
      b.coord_of_path.assign(N, -1);
      b.ideal_row_of_path.assign(N, -1);
      for (std::size_t r = 0; r < b.ideal.pivots().size(); ++r)
        b.ideal_row_of_path[b.ideal.pivots()[r]] = static_cast<long>(r);
      for (std::size_t k = 0; k < N; ++k)
        if (b.ideal_row_of_path[k] < 0) {
          b.coord_of_path[k] = static_cast<long>(b.basis.size());
          b.basis.push_back(k);
        }
    }
  degrees_.push_back(std::move(blocks));
}

const GradedAlgebra::Block& GradedAlgebra::block(int x, int z, int n) const {
  ensure_degree(n);
  std::lock_guard<std::mutex> lock(mu_);
  return degrees_[static_cast<std::size_t>(n)][static_cast<std::size_t>(x * vertex_count() + z)];
}

std::size_t GradedAlgebra::dim(int x, int z, int n) const {
  if (n < 0) return 0;
  return block(x, z, n).basis.size();
}

std::size_t GradedAlgebra::total_dim(int n) const {
  std::size_t s = 0;
  for (int x = 0; x < vertex_count(); ++x)
    for (int z = 0; z < vertex_count(); ++z) s += dim(x, z, n);
  return s;
}

const PathWord& GradedAlgebra::basis_path(int x, int z, int n, std::size_t k) const {
  const Block& b = block(x, z, n);
  return b.paths[b.basis.at(k)];
}

AlgElem GradedAlgebra::zero(int x, int z, int n) const {
  AlgElem e{x, z, n, {}};
  if (n >= 0) e.coords.assign(dim(x, z, n), field().zero());
  return e;
}

AlgElem GradedAlgebra::unit(int x) const {
  AlgElem e = zero(x, x, 0);
  e.coords[0] = field().one();
  return e;
}

AlgElem GradedAlgebra::basis_element(int x, int z, int n, std::size_t k) const {
  AlgElem e = zero(x, z, n);
  e.coords.at(k) = field().one();
  return e;
}

AlgElem GradedAlgebra::reduce(int x, int z, int n, const Vec& path_coeffs) const {
  AlgElem e{x, z, n, reduce_in(block(x, z, n), path_coeffs, field())};
  return e;
}

AlgElem GradedAlgebra::left_arrow(int arrow, const AlgElem& e) const {
  const Arrow& ar = quiver().arrow(arrow);
  if (ar.source != e.target) throw Error("left_arrow: arrow does not compose");
  AlgElem out = zero(e.source, ar.target, e.degree + 1);
  if (e.is_zero()) return out;
  const Block& from = block(e.source, e.target, e.degree);
  const Block& to = block(e.source, ar.target, e.degree + 1);
  Vec acc(to.paths.size(), field().zero());
  prefix_into(from, e.coords, arrow, to, field().one(), acc);
  out.coords = reduce_in(to, acc, field());
  return out;
}

AlgElem GradedAlgebra::path_element(const PathWord& p) const {
  AlgElem e = unit(p.source);
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) e = left_arrow(*it, e);
  e.target = p.target;
  return e;
}

AlgElem GradedAlgebra::multiply(const AlgElem& u, const AlgElem& v) const {
  const int n = u.degree + v.degree;
  if (u.source != v.target || u.degree < 0 || v.degree < 0) return AlgElem{v.source, u.target, n, {}};
  AlgElem out = zero(v.source, u.target, n);
  if (u.is_zero() || v.is_zero()) return out;
  const Block& bu = block(u.source, u.target, u.degree);
  for (std::size_t i = 0; i < u.coords.size(); ++i) {
    if (u.coords[i].is_zero()) continue;
    const auto& w = bu.paths[bu.basis[i]].arrows;
    AlgElem t = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      t = left_arrow(*it, t);
      if (t.is_zero()) break;
    }
    if (t.is_zero()) continue;
    for (std::size_t k = 0; k < t.coords.size(); ++k) out.coords[k] += u.coords[i] * t.coords[k];
  }
  return out;
}

AlgElem GradedAlgebra::add(const AlgElem& a, const AlgElem& b) const {
  if (a.coords.empty() || a.is_zero()) return b;
  if (b.coords.empty() || b.is_zero()) return a;
  if (a.source != b.source || a.target != b.target || a.degree != b.degree)
    throw Error("adding algebra elements from different blocks");
  AlgElem s = a;
  for (std::size_t i = 0; i < s.coords.size(); ++i) s.coords[i] += b.coords[i];
  return s;
}

AlgElem GradedAlgebra::scale(const AlgElem& a, const Scalar& s) const {
  AlgElem r = a;
  for (auto& c : r.coords) c *= s;
  return r;
}

bool GradedAlgebra::equal(const AlgElem& a, const AlgElem& b) const {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.source != b.source || a.target != b.target || a.degree != b.degree) return false;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    if (a.coords[i] != b.coords[i]) return false;
  return true;
}

bool GradedAlgebra::is_finite_dimensional() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (finiteness_known_) return top_.has_value();
  }
  std::optional<int> top;
  for (int n = 0; n <= kFiniteProbe + 1; ++n) {
    if (total_dim(n) == 0) {
      top = n - 1;
      break;
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  top_ = top;
  finiteness_known_ = true;
  return top_.has_value();
}

int GradedAlgebra::top_degree() const {
  if (!is_finite_dimensional()) throw Unsupported("algebra '" + pres_.name() + "' is not finite-dimensional");
  return *top_;
}

std::string GradedAlgebra::element_to_string(const AlgElem& e) const {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < e.coords.size(); ++k) {
    if (e.coords[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!e.coords[k].is_one()) os << e.coords[k] << " ";
    os << path_to_string(quiver(), basis_path(e.source, e.target, e.degree, k));
  }
  return os.str();
}

std::vector<std::vector<std::vector<std::size_t>>> hilbert_block_series(const GradedAlgebra& a, int N) {
  const int V = a.vertex_count();
  std::vector<std::vector<std::vector<std::size_t>>> out;
  for (int n = 0; n <= N; ++n) {
    std::vector<std::vector<std::size_t>> h(static_cast<std::size_t>(V), std::vector<std::size_t>(static_cast<std::size_t>(V)));
    for (int z = 0; z < V; ++z)
      for (int x = 0; x < V; ++x) h[static_cast<std::size_t>(z)][static_cast<std::size_t>(x)] = a.dim(x, z, n);
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace koszul
