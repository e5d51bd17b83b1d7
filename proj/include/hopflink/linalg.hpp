#pragma once

// Dense exact matrices and subspaces with canonical RREF bases.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopflink/scalar.hpp"

namespace hopf {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Scalar& s);
/// a += s * b
void axpy(Vec& a, const Scalar& s, const Vec& b);
std::string to_string(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Rows of equal length; an empty list gives a 0 x cols matrix.
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols = 0);
  static Matrix from_cols(const std::vector<Vec>& cols, std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void append_row(const Vec& v);

  Matrix transpose() const;
  Vec apply(const Vec& v) const;  // M v
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix r;                          // zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of K^ambient.
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace from_matrix_rows(const Matrix& m);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec> vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its reduction against the basis; zero iff v lies in the space.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v on the basis; throws AmbientMismatch if v is outside.
  Vec coordinates(const Vec& v) const;
  /// Residual of v modulo the space, read on the non-pivot columns; this is
  /// the image of v in the quotient K^ambient / this.
  Vec quotient_coordinates(const Vec& v) const;
  std::vector<std::size_t> non_pivots() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  /// Byte-stable text of the basis, usable as a cache key.
  std::string key() const;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Right kernel {v : M v = 0}.
Subspace kernel(const Matrix& m);

struct SolveResult {
  Vec x;
  Subspace kernel;
};
/// Solves M x = b; throws Inconsistent when no solution exists.
SolveResult solve(const Matrix& m, const Vec& b);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Vectors from a's basis completing b to a basis of a + b.
std::vector<Vec> quotient_basis(const Subspace& a, const Subspace& b);
/// True when b is contained in a.
bool contains(const Subspace& a, const Subspace& b);
/// {f : f(v) = 0 for all v in s} in the dual coordinates.
Subspace annihilator(const Subspace& s);
/// Image of s under the linear map v -> M v.
Subspace image(const Matrix& m, const Subspace& s);

}  // namespace hopf
