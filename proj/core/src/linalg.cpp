#include "hom3lie/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hom3lie/error.hpp"

namespace hom3lie {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::dimension_mismatch,
                std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Vec

Vec Vec::unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

bool Vec::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rat& r) { return hom3lie::is_zero(r); });
}

Vec& Vec::operator+=(const Vec& other) {
  require_same_size(size(), other.size(), "vector addition");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& other) {
  require_same_size(size(), other.size(), "vector subtraction");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Vec& Vec::operator*=(const Rat& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Vec& Vec::axpy(const Rat& s, const Vec& other) {
  require_same_size(size(), other.size(), "axpy");
  if (hom3lie::is_zero(s)) return *this;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!hom3lie::is_zero(other.entries_[i])) entries_[i] += s * other.entries_[i];
  }
  return *this;
}

Vec Vec::slice(std::size_t offset, std::size_t len) const {
  if (offset + len > size()) {
    throw Error(ErrorCode::dimension_mismatch, "vector slice out of range");
  }
  return Vec(std::vector<Rat>(entries_.begin() + static_cast<std::ptrdiff_t>(offset),
                              entries_.begin() + static_cast<std::ptrdiff_t>(offset + len)));
}

Vec Vec::concat(const Vec& a, const Vec& b) {
  std::vector<Rat> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Vec(std::move(out));
}

Rat dot(const Vec& a, const Vec& b) {
  require_same_size(a.size(), b.size(), "dot product");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::shape_mismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::diagonal(const std::vector<Rat>& diag) {
  Mat m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Mat Mat::from_rows(std::span<const Vec> rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_size(rows[i].size(), cols, "matrix row");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_columns(std::span<const Vec> cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Mat Mat::block_diag(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Mat Mat::elementary(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  Mat m(rows, cols);
  m(i, j) = 1;
  return m;
}

Vec Mat::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Vec Mat::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::set_column(std::size_t j, const Vec& v) {
  require_same_size(v.size(), rows_, "matrix column");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rat& r) { return hom3lie::is_zero(r); });
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Mat::vectorize() const { return Vec(data_); }

Mat Mat::unvectorize(const Vec& v, std::size_t rows, std::size_t cols) {
  require_same_size(v.size(), rows * cols, "unvectorize");
  Mat m(rows, cols);
  for (std::size_t k = 0; k < v.size(); ++k) m.data_[k] = v[k];
  return m;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw Error(ErrorCode::shape_mismatch, "matrix block out of range");
  }
  Mat b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw Error(ErrorCode::shape_mismatch, "matrix block out of range");
  }
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Vec Mat::apply(const Vec& v) const {
  require_same_size(v.size(), cols_, "matrix-vector product");
  Vec out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (hom3lie::is_zero(v[j])) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rat& a = (*this)(i, j);
      if (!hom3lie::is_zero(a)) out[i] += a * v[j];
    }
  }
  return out;
}

Mat& Mat::operator+=(const Mat& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::shape_mismatch, "matrix addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::shape_mismatch, "matrix subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Mat& Mat::operator*=(const Rat& s) {
  for (auto& e : data_) e *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::shape_mismatch, "matrix product");
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!is_zero(b(k, j))) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Mat power(const Mat& m, unsigned k) {
  if (!m.is_square()) throw Error(ErrorCode::shape_mismatch, "power of non-square matrix");
  Mat result = Mat::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) result = result * m;
  return result;
}

// ---------------------------------------------------------------------------
// Elimination

Echelon echelon(Mat m) {
  Echelon out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));
    }
    const Rat inv = 1 / m(lead_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || is_zero(m(i, col))) continue;
      const Rat factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!is_zero(m(lead_row, j))) m(i, j) -= factor * m(lead_row, j);
      }
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

Mat rref(const Mat& m) { return echelon(m).reduced; }

std::size_t rank(const Mat& m) { return echelon(m).pivots.size(); }

std::optional<Mat> inverse(const Mat& m) {
  if (!m.is_square()) throw Error(ErrorCode::shape_mismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Mat::identity(n));
  Echelon e = echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Rat determinant(const Mat& m) {
  if (!m.is_square()) throw Error(ErrorCode::shape_mismatch, "determinant of non-square matrix");
  Mat a = m;
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(a(pivot, col))) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(a(i, col))) continue;
      const Rat factor = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  return det;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  require_same_size(b.size(), m.rows(), "solve right-hand side");
  Mat aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  aug.set_column(m.cols(), b);
  const Echelon e = echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace::Subspace(std::size_t n, Echelon e)
    : ambient_(n), basis_(e.reduced.block(0, 0, e.pivots.size(), n)),
      pivots_(std::move(e.pivots)) {}

Subspace Subspace::full(std::size_t n) { return row_space(Mat::identity(n)); }

Subspace Subspace::span(std::size_t n, std::span<const Vec> generators) {
  return Subspace(n, echelon(Mat::from_rows(generators, n)));
}

Subspace Subspace::span(std::size_t n, std::initializer_list<Vec> generators) {
  return span(n, std::span<const Vec>(generators.begin(), generators.size()));
}

Subspace Subspace::row_space(const Mat& m) { return Subspace(m.cols(), echelon(m)); }

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (p < pivots_.size() && pivots_[p] == c) {
      ++p;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) {
    throw Error(ErrorCode::ambient_mismatch, "membership test: vector length " +
                                                 std::to_string(v.size()) + " vs ambient " +
                                                 std::to_string(ambient_));
  }
  // Reduce v against the echelon rows; the pivot entries determine the
  // coefficients uniquely.
  Vec r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Rat c = r[pivots_[i]];
    if (!hom3lie::is_zero(c)) r.axpy(-c, basis_.row(i));
  }
  return r.is_zero();
}

Subspace nullspace(const Mat& m) {
  const Echelon e = echelon(m);
  std::vector<Vec> gens;
  std::size_t p = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (p < e.pivots.size() && e.pivots[p] == free) {
      ++p;
      continue;
    }
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), gens);
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::ambient_mismatch,
                "subspaces live in Q^" + std::to_string(a.ambient_dim()) + " and Q^" +
                    std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  std::vector<Vec> gens = a.basis();
  for (auto& v : b.basis()) gens.push_back(std::move(v));
  return Subspace::span(a.ambient_dim(), gens);
}

bool subspace_contains(const Subspace& a, const Vec& v) { return a.contains(v); }

bool subspace_leq(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  for (const auto& v : a.basis()) {
    if (!b.contains(v)) return false;
  }
  return true;
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  // x = sum s_i a_i = sum t_j b_j  <=>  [A^T | -B^T] (s, t) = 0
  const std::size_t n = a.ambient_dim();
  Mat sys(n, a.dim() + b.dim());
  sys.set_block(0, 0, a.basis_matrix().transpose());
  sys.set_block(0, a.dim(), -b.basis_matrix().transpose());
  std::vector<Vec> gens;
  for (const auto& st : nullspace(sys).basis()) {
    Vec x(n);
    for (std::size_t i = 0; i < a.dim(); ++i) x.axpy(st[i], a.basis_matrix().row(i));
    gens.push_back(std::move(x));
  }
  return Subspace::span(n, gens);
}

Subspace image(const Mat& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) {
    throw Error(ErrorCode::ambient_mismatch, "image: map domain does not match subspace");
  }
  std::vector<Vec> gens;
  for (const auto& v : s.basis()) gens.push_back(m.apply(v));
  return Subspace::span(m.rows(), gens);
}

}  // namespace hom3lie
