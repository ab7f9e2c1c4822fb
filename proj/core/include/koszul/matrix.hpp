#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "koszul/field.hpp"

namespace koszul {

using Vec = std::vector<Scalar>;

// Dense matrix over a FieldSpec. Entries are stored row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec f, std::size_t n);
  static Matrix from_rows(FieldSpec f, const std::vector<Vec>& rows, std::size_t cols = 0);
  static Matrix row_vector(FieldSpec f, const Vec& v);
  static Matrix column_vector(FieldSpec f, const Vec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& b) const;
  Matrix operator+(const Matrix& b) const;
  Matrix operator-(const Matrix& b) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;
  Vec apply(const Vec& v) const;

  bool is_zero() const;
  bool operator==(const Matrix& b) const;

  // Submatrix of rows [r0,r1) and columns [c0,c1).
  Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;

  std::string str() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_direct_sum(const Matrix& a, const Matrix& b);
Matrix kronecker_product(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;                    // nonzero rows only
  std::vector<std::size_t> pivots;   // strictly increasing
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
// Some X with A X = B, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// A subspace of k^n given by an rref basis (rows).
class Subspace {
 public:
  Subspace() = default;
  Subspace(FieldSpec f, std::size_t ambient);  // zero subspace

  static Subspace span(const Matrix& rows);
  static Subspace span(FieldSpec f, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(FieldSpec f, std::size_t ambient);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& s) const;
  // Coordinates of v in the rref basis (v must lie in the subspace).
  Vec coordinates(const Vec& v) const;

  bool operator==(const Subspace& o) const;

 private:
  FieldSpec field_;
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace row_space(const Matrix& m);
Subspace column_space(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
// Vectors pairing to zero with s under the standard dot product.
Subspace annihilator(const Subspace& s);
// Standard basis vectors completing s to a basis of the ambient space.
std::vector<std::size_t> complement_coordinates(const Subspace& s);

}  // namespace koszul
