#include "hopflink/linalg.hpp"

#include <sstream>

namespace hopf {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Scalar(1L);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw AmbientMismatch("vector lengths differ");
  Vec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw AmbientMismatch("vector lengths differ");
  Vec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scale(const Vec& a, const Scalar& s) {
  Vec out = a;
  for (auto& x : out) x *= s;
  return out;
}

void axpy(Vec& a, const Scalar& s, const Vec& b) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) a[i].add_scaled(b[i], s);
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1L);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows[0].size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeMismatch("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
  if (!cols.empty()) rows = cols[0].size();
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ShapeMismatch("ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Matrix::append_row(const Vec& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw ShapeMismatch("row length differs");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw ShapeMismatch("matrix-vector shape");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero() && !(*this)(i, j).is_zero())
        out[i].add_scaled((*this)(i, j), v[j]);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product shape");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j).add_scaled(b(k, j), x);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix sum shape");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix difference shape");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << hopf::to_string(row(i));
  }
  os << "]";
  return os.str();
}

RrefResult rref(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inv();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = -m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j).add_scaled(m(r, j), f);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = std::move(m(i, j));
  return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw ShapeMismatch("inverse of a non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1L);
  }
  auto res = rref(std::move(aug));
  if (res.pivots.size() < n || (n > 0 && res.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = res.r(i, n + j);
  return inv;
}

Subspace Subspace::from_matrix_rows(const Matrix& m) {
  Subspace s(m.cols());
  auto res = rref(m);
  s.basis_ = std::move(res.r);
  s.pivots_ = std::move(res.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  Matrix m(0, ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw AmbientMismatch("vector outside ambient space");
    m.append_row(v);
  }
  return from_matrix_rows(m);
}

Subspace Subspace::whole(std::size_t ambient) {
  return from_matrix_rows(Matrix::identity(ambient));
}

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw AmbientMismatch("vector outside ambient space");
  Vec r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    Scalar f = -c;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      if (!basis_(i, j).is_zero()) r[j].add_scaled(basis_(i, j), f);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return hopf::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatch("ambient dimensions differ");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw AmbientMismatch("vector is not in the subspace");
  Vec c(dim());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

Vec Subspace::quotient_coordinates(const Vec& v) const {
  Vec r = reduce(v);
  Vec out;
  out.reserve(ambient_ - dim());
  for (std::size_t j : non_pivots()) out.push_back(std::move(r[j]));
  return out;
}

std::string Subspace::key() const {
  std::string k = std::to_string(ambient_) + ":";
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    for (std::size_t j = 0; j < basis_.cols(); ++j) {
      k += basis_(i, j).to_string();
      k += ',';
    }
  return k;
}

Subspace kernel(const Matrix& m) {
  auto res = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : res.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = Scalar(1L);
    for (std::size_t i = 0; i < res.pivots.size(); ++i) v[res.pivots[i]] = -res.r(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(cols, basis);
}

SolveResult solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw ShapeMismatch("right-hand side length");
  const std::size_t cols = m.cols();
  Matrix aug(m.rows(), cols + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = b[i];
  }
  auto res = rref(std::move(aug));
  if (!res.pivots.empty() && res.pivots.back() == cols)
    throw Inconsistent("linear system has no solution");
  Vec x(cols);
  for (std::size_t i = 0; i < res.pivots.size(); ++i) x[res.pivots[i]] = res.r(i, cols);
  return {std::move(x), kernel(m)};
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("ambient dimensions differ");
  Matrix m = a.basis();
  for (std::size_t i = 0; i < b.dim(); ++i) m.append_row(b.basis().row(i));
  return Subspace::from_matrix_rows(m);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("ambient dimensions differ");
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
  // Zassenhaus: rows (a | a) and (b | 0); rows with zero left half give a ∩ b
  Matrix z(a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      z(i, j) = a.basis()(i, j);
      z(i, n + j) = a.basis()(i, j);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) z(a.dim() + i, j) = b.basis()(i, j);
  auto res = rref(std::move(z));
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < res.pivots.size(); ++i) {
    if (res.pivots[i] < n) continue;
    Vec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = res.r(i, n + j);
    rows.push_back(std::move(v));
  }
  return Subspace::span(n, rows);
}

std::vector<Vec> quotient_basis(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("ambient dimensions differ");
  std::vector<Vec> reps;
  Subspace acc = b;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec v = a.vector(i);
    if (acc.contains(v)) continue;
    reps.push_back(v);
    acc = sum(acc, Subspace::span(a.ambient_dim(), {v}));
  }
  return reps;
}

bool contains(const Subspace& a, const Subspace& b) { return a.contains(b); }

Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::whole(s.ambient_dim());
  return kernel(s.basis());
}

Subspace image(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw AmbientMismatch("map domain differs from ambient");
  std::vector<Vec> imgs;
  for (std::size_t i = 0; i < s.dim(); ++i) imgs.push_back(m.apply(s.vector(i)));
  return Subspace::span(m.rows(), imgs);
}

}  // namespace hopf
