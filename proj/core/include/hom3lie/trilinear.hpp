#pragma once

#include <array>
#include <cstddef>
#include <map>

#include "hom3lie/linalg.hpp"

namespace hom3lie {

/// 0-based basis index triple.
using Triple = std::array<std::size_t, 3>;

/// Sorts a triple in place and returns the sign of the sorting permutation,
/// or 0 when an index repeats.
int sort_triple(Triple& t);

/// A skew-symmetric trilinear map Q^n x Q^n x Q^n -> Q^m held by its values
/// on strictly increasing basis triples. Values on other triples follow from
/// the sign of the permutation; repeated arguments give zero. Zero values are
/// not stored.
class AlternatingTrilinear {
 public:
  AlternatingTrilinear(std::size_t domain_dim, std::size_t codomain_dim)
      : domain_(domain_dim), codomain_(codomain_dim) {}

  std::size_t domain_dim() const noexcept { return domain_; }
  std::size_t codomain_dim() const noexcept { return codomain_; }

  /// Sets the value on the basis triple (i, j, k) in any order; the stored
  /// increasing-key value is adjusted by the permutation sign. Repeated
  /// indices are rejected with invalid_index.
  void set(std::size_t i, std::size_t j, std::size_t k, const Vec& value);

  /// Value on an arbitrary basis triple.
  Vec basis_value(std::size_t i, std::size_t j, std::size_t k) const;

  /// Trilinear skew extension: sum over stored triples of the 3x3 minor of
  /// (x, y, z) times the stored value.
  Vec operator()(const Vec& x, const Vec& y, const Vec& z) const;

  const std::map<Triple, Vec>& stored() const noexcept { return values_; }

  bool is_zero() const noexcept { return values_.empty(); }

  friend bool operator==(const AlternatingTrilinear&, const AlternatingTrilinear&) = default;

 private:
  std::size_t domain_;
  std::size_t codomain_;
  std::map<Triple, Vec> values_;
};

/// A general (not necessarily skew) trilinear map Q^n x Q^n x Q^n -> Q^m,
/// dense over all ordered basis triples.
class TrilinearTable {
 public:
  TrilinearTable(std::size_t domain_dim, std::size_t codomain_dim);

  std::size_t domain_dim() const noexcept { return domain_; }
  std::size_t codomain_dim() const noexcept { return codomain_; }

  Vec& at(std::size_t i, std::size_t j, std::size_t k);
  const Vec& at(std::size_t i, std::size_t j, std::size_t k) const;

  Vec operator()(const Vec& x, const Vec& y, const Vec& z) const;

  /// True iff every transposition of arguments negates the value.
  bool is_skew() const;

 private:
  std::size_t domain_;
  std::size_t codomain_;
  std::vector<Vec> values_;
};

}  // namespace hom3lie
