#include "koszul/matrix.hpp"

#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

Matrix::Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(FieldSpec f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(FieldSpec f, const std::vector<Vec>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j].in_field(f);
  }
  return m;
}

Matrix Matrix::row_vector(FieldSpec f, const Vec& v) { return from_rows(f, {v}, v.size()); }

Matrix Matrix::column_vector(FieldSpec f, const Vec& v) {
  Matrix m(f, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i].in_field(f);
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j].in_field(field_);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& b) const {
  if (cols_ != b.rows_) throw Error("matrix product shape mismatch");
  Matrix c(field_, rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bk = b(k, j);
        if (!bk.is_zero()) c(i, j) += a * bk;
      }
    }
  return c;
}

Matrix Matrix::operator+(const Matrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error("matrix sum shape mismatch");
  Matrix c = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix Matrix::operator-(const Matrix& b) const { return *this + (-b); }

Matrix Matrix::operator-() const {
  Matrix c = *this;
  for (auto& x : c.data_) x = -x;
  return c;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix c = *this;
  for (auto& x : c.data_) x *= s;
  return c;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error("matrix-vector shape mismatch");
  Vec out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != b.data_[i]) return false;
  return true;
}

Matrix Matrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  Matrix b(field_, r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) b(i - r0, j - c0) = (*this)(i, j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix b(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) b(i, j) = (*this)(i, cols[j]);
  return b;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix b(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(rows[i], j);
  return b;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("hstack row mismatch");
  Matrix c(a.field(), a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error("vstack column mismatch");
  Matrix c(a.field(), a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

Matrix block_direct_sum(const Matrix& a, const Matrix& b) {
  Matrix c(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

Matrix kronecker_product(const Matrix& a, const Matrix& b) {
  Matrix c(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) c.set_block(i * b.rows(), j * b.cols(), b.scaled(a(i, j)));
  return c;
}

namespace {

// In-place Gauss-Jordan on a working copy; returns pivots. Rows past the
// rank are left zero.
std::vector<std::size_t> eliminate(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  Matrix w = m;
  auto piv = eliminate(w);
  return {w.block(0, piv.size(), 0, m.cols()), piv};
}

std::size_t rank(const Matrix& m) {
  Matrix w = m;
  return eliminate(w).size();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix w = hstack(m, Matrix::identity(m.field(), n));
  auto piv = eliminate(w);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  return w.block(0, n, n, 2 * n);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("solve shape mismatch");
  Matrix w = hstack(a, b);
  auto piv = eliminate(w);
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(piv[r], j) = w(r, a.cols() + j);
  }
  return x;
}

Subspace::Subspace(FieldSpec f, std::size_t ambient)
    : field_(f), ambient_(ambient), basis_(f, 0, ambient) {}

Subspace Subspace::span(const Matrix& rows) {
  Subspace s(rows.field(), rows.cols());
  auto r = rref(rows);
  s.basis_ = std::move(r.reduced);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::span(FieldSpec f, std::size_t ambient, const std::vector<Vec>& vectors) {
  return span(Matrix::from_rows(f, vectors, ambient));
}

Subspace Subspace::full(FieldSpec f, std::size_t ambient) {
  return span(Matrix::identity(f, ambient));
}

bool Subspace::contains(const Vec& v) const {
  Vec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i].in_field(field_);
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Scalar c = w[pivots_[r]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_(r, j).is_zero()) w[j] -= c * basis_(r, j);
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& s) const {
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!contains(s.basis_.row(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(pivots_.size());
  for (std::size_t r = 0; r < pivots_.size(); ++r) c[r] = v[pivots_[r]].in_field(field_);
  return c;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && field_ == o.field_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

Subspace kernel(const Matrix& m) {
  auto r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, m.field().zero());
    v[f] = m.field().one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, vecs);
}

Subspace row_space(const Matrix& m) { return Subspace::span(m); }
Subspace column_space(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  // x = u A = v B  <=>  (u, -v) in ker of [A; B]^T.
  Matrix stacked = vstack(a.basis(), -b.basis());
  Subspace k = kernel(stacked.transpose());
  if (k.dim() == 0) return Subspace(a.field(), a.ambient_dim());
  Matrix u = k.basis().block(0, k.dim(), 0, a.dim());
  return Subspace::span(u * a.basis());
}

Subspace annihilator(const Subspace& s) { return kernel(s.basis()); }

std::vector<std::size_t> complement_coordinates(const Subspace& s) {
  std::vector<bool> is_pivot(s.ambient_dim(), false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < s.ambient_dim(); ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

}  // namespace koszul
