#pragma once

#include <cstddef>
#include <vector>

#include "hom3lie/linalg.hpp"
#include "hom3lie/report.hpp"
#include "hom3lie/trilinear.hpp"

namespace hom3lie {

/// A finite-dimensional hom 3-Lie algebra (L, [.,.,.], alpha) in a fixed
/// basis e_1..e_n. The bracket is stored by its structure constants on
/// increasing triples and is skew-symmetric by construction; alpha is the
/// twist map.
class Hom3LieAlgebra {
 public:
  /// Abelian algebra of dimension n with identity twist.
  explicit Hom3LieAlgebra(std::size_t dim);
  /// Abelian algebra with the given twist.
  Hom3LieAlgebra(std::size_t dim, Mat alpha);
  Hom3LieAlgebra(AlternatingTrilinear brackets, Mat alpha);

  std::size_t dim() const noexcept { return brackets_.domain_dim(); }
  const Mat& alpha() const noexcept { return alpha_; }
  const AlternatingTrilinear& brackets() const noexcept { return brackets_; }

  /// Sets [e_i, e_j, e_k] (0-based, any order of distinct indices).
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Vec& value);
  void set_alpha(Mat alpha);

  Vec basis_bracket(std::size_t i, std::size_t j, std::size_t k) const {
    return brackets_.basis_value(i, j, k);
  }
  Vec bracket(const Vec& x, const Vec& y, const Vec& z) const { return brackets_(x, y, z); }
  Vec twist(const Vec& x) const { return alpha_.apply(x); }

  bool is_abelian() const noexcept { return brackets_.is_zero(); }

  friend bool operator==(const Hom3LieAlgebra&, const Hom3LieAlgebra&) = default;

 private:
  AlternatingTrilinear brackets_;
  Mat alpha_;
};

struct AlgebraReport {
  bool skew_ok = true;
  bool hom_jacobi_ok = true;
  bool multiplicative_ok = true;
  bool regular_ok = true;
  std::vector<Violation> violations;
  std::size_t violation_count = 0;

  bool all_ok() const noexcept {
    return skew_ok && hom_jacobi_ok && multiplicative_ok && regular_ok;
  }
  /// Combines flags with AND and concatenates witnesses (bounded).
  void merge(const AlgebraReport& other, std::size_t max_witnesses = kDefaultMaxWitnesses);
};

Vec bracket(const Hom3LieAlgebra& L, const Vec& x, const Vec& y, const Vec& z);

/// Always passes for Hom3LieAlgebra; present so callers can request the
/// check uniformly alongside the others.
AlgebraReport verify_skew(const Hom3LieAlgebra& L);

/// [a x, a y, [u,v,w]] = [[x,y,u], a v, a w] + [a u, [x,y,v], a w] + [a u, a v, [x,y,w]]
/// over all ordered basis pairs (x, y) and increasing basis triples (u, v, w).
AlgebraReport verify_hom_jacobi(const Hom3LieAlgebra& L,
                                std::size_t max_witnesses = kDefaultMaxWitnesses);

/// a[e_i,e_j,e_k] = [a e_i, a e_j, a e_k] for all i < j < k.
AlgebraReport verify_multiplicative(const Hom3LieAlgebra& L,
                                    std::size_t max_witnesses = kDefaultMaxWitnesses);

/// Multiplicative with invertible twist.
AlgebraReport verify_regular(const Hom3LieAlgebra& L,
                             std::size_t max_witnesses = kDefaultMaxWitnesses);

/// skew + hom-Jacobi + multiplicative (regularity is reported separately).
AlgebraReport verify_algebra(const Hom3LieAlgebra& L,
                             std::size_t max_witnesses = kDefaultMaxWitnesses);

/// alpha(S) in S and [S,S,S] in S.
bool is_subalgebra(const Hom3LieAlgebra& L, const Subspace& S);
/// alpha(S) in S and [S,L,L] in S.
bool is_ideal(const Hom3LieAlgebra& L, const Subspace& S);

/// Canonical span of [a, b, c] over the bases of the three subspaces.
Subspace subspace_bracket(const Hom3LieAlgebra& L, const Subspace& s1, const Subspace& s2,
                          const Subspace& s3);

/// L (+) G with vanishing mixed brackets and twist alpha (+) beta. The basis
/// of L comes first.
Hom3LieAlgebra direct_sum(const Hom3LieAlgebra& L, const Hom3LieAlgebra& G);

/// phi (G.dim x L.dim) preserves brackets on basis triples and
/// phi o alpha = beta o phi.
bool is_morphism(const Mat& phi, const Hom3LieAlgebra& L, const Hom3LieAlgebra& G);

/// span{ e_i + phi(e_i) } inside direct_sum(L, G).
Subspace graph(const Mat& phi, const Hom3LieAlgebra& L, const Hom3LieAlgebra& G);

struct Quotient {
  Hom3LieAlgebra algebra;
  /// (n - dim I) x n map onto the quotient coordinates.
  Mat projection;
  /// n x (n - dim I) section: quotient basis vector c lifts to e_{free[c]}.
  Mat section;
  /// Ambient coordinates used as the quotient basis (non-pivot columns of I).
  std::vector<std::size_t> free_columns;
};

/// L / I on the basis of non-pivot coordinates of I's canonical basis.
/// Throws not_an_ideal unless is_ideal(L, I).
Quotient quotient(const Hom3LieAlgebra& L, const Subspace& I);

}  // namespace hom3lie
