#pragma once

#include <cstddef>
#include <vector>

#include "hom3lie/algebra.hpp"
#include "hom3lie/representation.hpp"

namespace hom3lie {

/// A skew trilinear map theta : L ^ L ^ L -> V.
class Cocycle {
 public:
  Cocycle(std::size_t algebra_dim, std::size_t module_dim) : theta_(algebra_dim, module_dim) {}
  explicit Cocycle(AlternatingTrilinear theta) : theta_(std::move(theta)) {}

  std::size_t algebra_dim() const noexcept { return theta_.domain_dim(); }
  std::size_t module_dim() const noexcept { return theta_.codomain_dim(); }

  void set(std::size_t i, std::size_t j, std::size_t k, const Vec& value) {
    theta_.set(i, j, k, value);
  }
  Vec basis_value(std::size_t i, std::size_t j, std::size_t k) const {
    return theta_.basis_value(i, j, k);
  }
  Vec operator()(const Vec& x, const Vec& y, const Vec& z) const { return theta_(x, y, z); }

  const AlternatingTrilinear& table() const noexcept { return theta_; }
  bool is_zero() const noexcept { return theta_.is_zero(); }

  friend Cocycle operator+(const Cocycle& a, const Cocycle& b);
  friend bool operator==(const Cocycle&, const Cocycle&) = default;

 private:
  AlternatingTrilinear theta_;
};

/// Symmetric bilinear form given by its Gram matrix.
class BilinForm {
 public:
  /// Throws shape_mismatch unless gram is square and symmetric.
  explicit BilinForm(Mat gram);

  std::size_t dim() const noexcept { return gram_.rows(); }
  const Mat& gram() const noexcept { return gram_; }
  Rat operator()(const Vec& x, const Vec& y) const { return dot(x, gram_.apply(y)); }
  bool is_nondegenerate() const { return rank(gram_) == dim(); }

  friend bool operator==(const BilinForm&, const BilinForm&) = default;

 private:
  Mat gram_;
};

struct CocycleReport {
  bool ok = true;
  std::vector<Violation> violations;
  std::size_t violation_count = 0;
};

/// The 3-cocycle identity over all basis 5-tuples (x, y, z, u, v):
///   theta([x,u,v], a y, a z) + theta([y,u,v], a z, a x) + theta(a x, a y, [z,u,v])
///   - theta([x,y,z], a u, a v) + rho(a y, a z) theta(x,u,v) + rho(a z, a x) theta(y,u,v)
///   + rho(a x, a y) theta(z,u,v) - rho(a u, a v) theta(x,y,z) = 0
CocycleReport verify_cocycle(const Hom3LieAlgebra& L, const Representation& R,
                             const Cocycle& theta,
                             std::size_t max_witnesses = kDefaultMaxWitnesses);

/// theta_f(x,y,z) = f([x,y,z]) - rho(x,y) f(z) - rho(z,x) f(y) - rho(y,z) f(x)
/// for f : L -> V given as an m x n matrix.
Cocycle coboundary(const Hom3LieAlgebra& L, const Representation& R, const Mat& f);

/// The T_theta bracket on L (+) V with twist alpha (+) A, built without
/// checking any precondition.
Hom3LieAlgebra build_t_theta(const Hom3LieAlgebra& L, const Representation& R,
                             const Cocycle& theta);

struct TThetaExtension {
  Hom3LieAlgebra algebra;
  AlgebraReport report;
};

/// Throws invalid_representation / invalid_cocycle when the inputs fail
/// their identities. The result is verified, not assumed.
TThetaExtension t_theta_extension(const Hom3LieAlgebra& L, const Representation& R,
                                  const Cocycle& theta);

struct TStarExtension {
  Hom3LieAlgebra algebra;
  /// q_L(x1 + f1, x2 + f2) = f1(x2) + f2(x1), Gram [[0, I], [I, 0]].
  BilinForm form;
};

/// T_theta over the coadjoint module: L (+) L*, dual basis appended, twist
/// [[alpha, 0], [0, alpha^T]]. theta must take values in L*.
TStarExtension t_star_extension(const Hom3LieAlgebra& L, const Cocycle& theta);

/// The canonical form on L (+) L*.
BilinForm hyperbolic_form(std::size_t n);

/// theta(e_i,e_j,e_k)(e_l) + theta(e_i,e_j,e_l)(e_k) = 0 for all i<j<k and l.
bool theta_cyclic_ok(const Hom3LieAlgebra& L, const Cocycle& theta);

struct MetricReport {
  bool symmetric = true;
  bool nondegenerate = true;
  /// B([x1,x2,x3], x4) + B([x1,x2,x4], x3) = 0 on all basis 4-tuples.
  bool invariant = true;
  /// B(a x, a y) = B(x, y); reported only, not part of metric().
  bool alpha_compatible = true;
  std::vector<Violation> violations;
  std::size_t violation_count = 0;

  bool metric() const noexcept { return symmetric && nondegenerate && invariant; }
};

MetricReport verify_metric(const Hom3LieAlgebra& G, const Mat& gram,
                           std::size_t max_witnesses = kDefaultMaxWitnesses);
MetricReport verify_metric(const Hom3LieAlgebra& G, const BilinForm& B,
                           std::size_t max_witnesses = kDefaultMaxWitnesses);

struct ShiftIsomorphism {
  /// [[I, 0], [f, I]] : T_theta(L) -> T_{theta + theta_f}(L)
  Mat sigma;
  bool ok = false;
};

ShiftIsomorphism shift_isomorphism(const Hom3LieAlgebra& L, const Representation& R,
                                   const Cocycle& theta, const Mat& f);

/// sigma invertible, sigma[x,y,z]_G = [sigma x, sigma y, sigma z]_Gp on basis
/// triples, and B(x,y) = Bp(sigma x, sigma y) on basis pairs.
bool is_isometry(const Hom3LieAlgebra& G, const BilinForm& B, const Hom3LieAlgebra& Gp,
                 const BilinForm& Bp, const Mat& sigma);

}  // namespace hom3lie
