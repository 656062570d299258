#pragma once

#include <cstddef>
#include <vector>

#include "hom3lie/algebra.hpp"

namespace hom3lie {

/// alpha^k. Negative k requires a regular algebra and uses the exact
/// inverse; throws not_regular otherwise.
Mat alpha_power(const Hom3LieAlgebra& L, int k);

/// D o alpha = alpha o D, and
/// D[u,v,w] = [Du, a^k v, a^k w] + [a^k u, Dv, a^k w] + [a^k u, a^k v, Dw]
/// on all increasing basis triples.
bool is_alpha_k_derivation(const Hom3LieAlgebra& L, const Mat& D, int k);

/// A space of n x n matrices, canonicalized through row-major
/// vectorization.
struct DerivationSpace {
  int k = 0;
  std::vector<Mat> basis;
  Subspace vectorized{0};

  std::size_t dim() const noexcept { return basis.size(); }
  bool contains(const Mat& D) const { return vectorized.contains(D.vectorize()); }
};

/// Canonical basis of the alpha^k-derivations, the nullspace of the stacked
/// linear system in the n^2 unknowns D_ij.
DerivationSpace derivation_space(const Hom3LieAlgebra& L, int k);

/// {u : alpha(u) = u}.
Subspace fixed_space(const Hom3LieAlgebra& L);

/// Matrix of v -> [u1, u2, alpha^k(v)]. Both arguments must be fixed by
/// alpha (not_fixed_point otherwise). The result is an alpha^(k+1)-derivation
/// whenever L is multiplicative.
Mat inner_derivation(const Hom3LieAlgebra& L, const Vec& u1, const Vec& u2, int k);

/// Span of inner_derivation(L, b_i, b_j, k - 1) over a basis of the fixed
/// space. Requires k >= 1 (invalid_grade otherwise).
DerivationSpace inner_space(const Hom3LieAlgebra& L, int k);

/// D o Dp - Dp o D.
Mat commutator(const Mat& D, const Mat& Dp);

/// The one-dimensional extension L + QD built from a linear map D with
///   [u + lD, v + mD, w + nD] = [u,v,w] + l D(v) + m D(w) - n D(u)
/// and twist alpha (+) 1. The displayed formula is neither skew-symmetric
/// nor trilinear, so it is kept in two forms: `literal_bracket` evaluates it
/// on arbitrary vectors, and `table` holds its values on basis triples as a
/// general trilinear tensor.
struct DerivationExtension {
  Hom3LieAlgebra base;
  Mat derivation;
  Mat twist;
  TrilinearTable table;

  /// skew_ok: whether `table` is skew-symmetric.
  /// hom_jacobi_ok: the hom-Jacobi identity on (x, D, u, v, w) for basis x
  /// and increasing basis triples (u, v, w) of L, with the literal formula.
  /// This is the identity that holds exactly when D satisfies the
  /// alpha-twisted Leibniz rule.
  /// multiplicative_ok: twist o bracket = bracket o twist^3 on basis triples.
  AlgebraReport report;

  /// Hom-Jacobi of `table` over every ordered basis 5-tuple of L + QD.
  bool full_table_hom_jacobi_ok = true;
  std::size_t full_table_violation_count = 0;

  Vec literal_bracket(const Vec& a, const Vec& b, const Vec& c) const;
};

DerivationExtension derivation_extension(const Hom3LieAlgebra& L, const Mat& D,
                                         std::size_t max_witnesses = kDefaultMaxWitnesses);

}  // namespace hom3lie
