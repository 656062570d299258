#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "hom3lie/algebra.hpp"

namespace hom3lie {

using Pair = std::array<std::size_t, 2>;

/// A representation (V, rho, A) of an n-dimensional algebra on an
/// m-dimensional space: A is the twist on V and rho is a skew bilinear map
/// L x L -> gl(V), stored on increasing basis pairs.
class Representation {
 public:
  Representation(std::size_t algebra_dim, std::size_t module_dim);
  Representation(std::size_t algebra_dim, Mat A);

  std::size_t algebra_dim() const noexcept { return algebra_dim_; }
  std::size_t module_dim() const noexcept { return A_.rows(); }
  const Mat& A() const noexcept { return A_; }
  void set_A(Mat A);

  /// Sets rho(e_i, e_j) for distinct 0-based indices in any order.
  void set_rho(std::size_t i, std::size_t j, const Mat& value);
  Mat rho_basis(std::size_t i, std::size_t j) const;

  /// sum_{i<j} (x_i y_j - x_j y_i) rho(e_i, e_j)
  Mat rho(const Vec& x, const Vec& y) const;

  const std::map<Pair, Mat>& stored() const noexcept { return rho_; }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  std::size_t algebra_dim_;
  Mat A_;
  std::map<Pair, Mat> rho_;
};

Mat rho_apply(const Representation& R, const Vec& x, const Vec& y);

struct RepresentationReport {
  /// rho(a u, a v) A = A rho(u, v)
  bool twist_ok = true;
  /// rho([x,y,z], a u) A = rho(a y, a z) rho(x,u) + rho(a z, a x) rho(y,u) + rho(a x, a y) rho(z,u)
  bool bracket_action_ok = true;
  /// rho(a x, a y) rho(z,u) = rho(a z, a u) rho(x,y) + rho([x,y,z], a u) A + rho(a z, [x,y,u]) A
  bool commutation_ok = true;
  std::vector<Violation> violations;
  std::size_t violation_count = 0;

  bool ok() const noexcept { return twist_ok && bracket_action_ok && commutation_ok; }
};

/// Checks the three module identities over all basis pairs / quadruples.
/// Matrix-valued witnesses are recorded row-major.
RepresentationReport verify_representation(const Hom3LieAlgebra& L, const Representation& R,
                                           std::size_t max_witnesses = kDefaultMaxWitnesses);

/// V = L, A = alpha, rho(e_i, e_j) = ad(e_i, e_j).
Representation adjoint_rep(const Hom3LieAlgebra& L);

/// V*, rho*(i,j) = -rho(i,j)^T, twist A^T. For the adjoint module this is
/// the coadjoint module with twist f -> f o alpha.
Representation dual_rep(const Representation& R);

/// dual_rep(adjoint_rep(L)).
Representation coadjoint_rep(const Hom3LieAlgebra& L);

/// L (+) V with [u+X, v+Y, w+Z] = [u,v,w] + rho(u,v)Z + rho(w,u)Y + rho(v,w)X
/// and twist alpha (+) A. L-basis first. Throws invalid_representation
/// unless verify_representation passes.
Hom3LieAlgebra semidirect_product(const Hom3LieAlgebra& L, const Representation& R);

/// The same construction without the precondition check.
Hom3LieAlgebra semidirect_product_unchecked(const Hom3LieAlgebra& L, const Representation& R);

}  // namespace hom3lie
