#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "hom3lie/rational.hpp"

namespace hom3lie {

/// Column vector of exact rationals. The length is fixed at construction.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : entries_(n) {}
  Vec(std::initializer_list<Rat> entries) : entries_(entries) {}
  explicit Vec(std::vector<Rat> entries) : entries_(std::move(entries)) {}

  static Vec zero(std::size_t n) { return Vec(n); }
  static Vec unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return entries_.size(); }
  Rat& operator[](std::size_t i) { return entries_[i]; }
  const Rat& operator[](std::size_t i) const { return entries_[i]; }

  std::span<const Rat> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool is_zero() const;

  Vec& operator+=(const Vec& other);
  Vec& operator-=(const Vec& other);
  Vec& operator*=(const Rat& s);
  /// this += s * other
  Vec& axpy(const Rat& s, const Vec& other);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator-(Vec a) { return a *= Rat(-1); }
  friend Vec operator*(const Rat& s, Vec a) { return a *= s; }
  friend bool operator==(const Vec&, const Vec&) = default;

  /// Sub-vector [offset, offset + len).
  Vec slice(std::size_t offset, std::size_t len) const;
  /// Concatenation (a, b).
  static Vec concat(const Vec& a, const Vec& b);

 private:
  std::vector<Rat> entries_;
};

Rat dot(const Vec& a, const Vec& b);

/// Dense row-major matrix of exact rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat identity(std::size_t n);
  static Mat diagonal(const std::vector<Rat>& diag);
  static Mat from_rows(std::span<const Vec> rows, std::size_t cols);
  static Mat from_columns(std::span<const Vec> cols, std::size_t rows);
  /// Block-diagonal [[a, 0], [0, b]].
  static Mat block_diag(const Mat& a, const Mat& b);
  /// The matrix with a single 1 at (i, j).
  static Mat elementary(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  void set_column(std::size_t j, const Vec& v);

  bool is_zero() const;
  Mat transpose() const;
  /// Row-major flattening to a vector of length rows * cols.
  Vec vectorize() const;
  static Mat unvectorize(const Vec& v, std::size_t rows, std::size_t cols);

  /// Copy of the block rows [r0, r0 + nr) x cols [c0, c0 + nc).
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);

  Vec apply(const Vec& v) const;

  Mat& operator+=(const Mat& other);
  Mat& operator-=(const Mat& other);
  Mat& operator*=(const Rat& s);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(Mat a) { return a *= Rat(-1); }
  friend Mat operator*(const Rat& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v) { return a.apply(v); }
  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Matrix power for k >= 0.
Mat power(const Mat& m, unsigned k);

struct Echelon {
  Mat reduced;                       // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Unique reduced row-echelon form, first nonzero entry in column order
/// taken as pivot.
Echelon echelon(Mat m);
Mat rref(const Mat& m);
std::size_t rank(const Mat& m);

std::optional<Mat> inverse(const Mat& m);
Rat determinant(const Mat& m);

/// Some x with m x = b, or nothing when the system is inconsistent. Free
/// variables are set to zero.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// A linear subspace of Q^n held as the nonzero rows of its reduced
/// row-echelon basis. Two subspaces are equal iff their bases are equal.
class Subspace {
 public:
  /// Zero subspace of Q^n.
  explicit Subspace(std::size_t ambient_dim);

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n);
  static Subspace span(std::size_t n, std::span<const Vec> generators);
  static Subspace span(std::size_t n, std::initializer_list<Vec> generators);
  /// Row space of m.
  static Subspace row_space(const Mat& m);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }

  /// Basis rows as a dim x ambient matrix.
  const Mat& basis_matrix() const noexcept { return basis_; }
  std::vector<Vec> basis() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Columns that are not pivots, in increasing order.
  std::vector<std::size_t> free_columns() const;

  bool contains(const Vec& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::size_t n, Echelon e);

  std::size_t ambient_;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of {v : m v = 0}.
Subspace nullspace(const Mat& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const Vec& v);
bool subspace_leq(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
/// m(S) for a linear map m : Q^{S.ambient} -> Q^{m.rows}.
Subspace image(const Mat& m, const Subspace& s);

}  // namespace hom3lie
