#include "hom3lie/extensions.hpp"

#include <string>

#include "hom3lie/error.hpp"

namespace hom3lie {

namespace {

void require_cocycle_shape(const Hom3LieAlgebra& L, const Representation& R, const Cocycle& th) {
  if (R.algebra_dim() != L.dim() || th.algebra_dim() != L.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "cocycle/representation are not over this algebra");
  }
  if (th.module_dim() != R.module_dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "cocycle takes values in dimension " + std::to_string(th.module_dim()) +
                    " but the module has dimension " + std::to_string(R.module_dim()));
  }
}

}  // namespace

Cocycle operator+(const Cocycle& a, const Cocycle& b) {
  if (a.algebra_dim() != b.algebra_dim() || a.module_dim() != b.module_dim()) {
    throw Error(ErrorCode::dimension_mismatch, "adding cocycles of different shapes");
  }
  Cocycle out = a;
  for (const auto& [t, v] : b.table().stored()) {
    out.set(t[0], t[1], t[2], a.basis_value(t[0], t[1], t[2]) + v);
  }
  return out;
}

BilinForm::BilinForm(Mat gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw Error(ErrorCode::shape_mismatch, "Gram matrix must be square");
  if (gram_ != gram_.transpose()) {
    throw Error(ErrorCode::shape_mismatch, "Gram matrix must be symmetric");
  }
}

CocycleReport verify_cocycle(const Hom3LieAlgebra& L, const Representation& R,
                             const Cocycle& th, std::size_t max_witnesses) {
  require_cocycle_shape(L, R, th);
  const std::size_t n = L.dim();
  std::vector<Vec> ae;
  for (std::size_t i = 0; i < n; ++i) ae.push_back(L.alpha().column(i));
  std::vector<Mat> raa(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) raa[i * n + j] = R.rho(ae[i], ae[j]);
  auto rho_a = [&](std::size_t i, std::size_t j) -> const Mat& { return raa[i * n + j]; };

  ViolationLog log(max_witnesses);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Vec xyz = L.basis_bracket(x, y, z);
        const Vec th_xyz = th.basis_value(x, y, z);
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = 0; v < n; ++v) {
            Vec lhs = th(L.basis_bracket(x, u, v), ae[y], ae[z]);
            lhs += th(L.basis_bracket(y, u, v), ae[z], ae[x]);
            lhs += th(ae[x], ae[y], L.basis_bracket(z, u, v));
            lhs -= th(xyz, ae[u], ae[v]);
            lhs += rho_a(y, z).apply(th.basis_value(x, u, v));
            lhs += rho_a(z, x).apply(th.basis_value(y, u, v));
            lhs += rho_a(x, y).apply(th.basis_value(z, u, v));
            lhs -= rho_a(u, v).apply(th_xyz);
            if (!lhs.is_zero()) {
              log.add("cocycle", {x + 1, y + 1, z + 1, u + 1, v + 1}, lhs,
                      Vec(th.module_dim()));
            }
          }
      }
  CocycleReport r;
  r.ok = log.empty();
  r.violation_count = log.count();
  r.violations = std::move(log).take();
  return r;
}

Cocycle coboundary(const Hom3LieAlgebra& L, const Representation& R, const Mat& f) {
  if (R.algebra_dim() != L.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "representation does not match the algebra");
  }
  if (f.rows() != R.module_dim() || f.cols() != L.dim()) {
    throw Error(ErrorCode::shape_mismatch, "f must be " + std::to_string(R.module_dim()) + "x" +
                                               std::to_string(L.dim()));
  }
  const std::size_t n = L.dim();
  Cocycle th(n, R.module_dim());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        Vec v = f.apply(L.basis_bracket(x, y, z));
        v -= R.rho_basis(x, y).apply(f.column(z));
        v -= R.rho_basis(z, x).apply(f.column(y));
        v -= R.rho_basis(y, z).apply(f.column(x));
        th.set(x, y, z, v);
      }
  return th;
}

Hom3LieAlgebra build_t_theta(const Hom3LieAlgebra& L, const Representation& R,
                             const Cocycle& theta) {
  require_cocycle_shape(L, R, theta);
  Hom3LieAlgebra T = semidirect_product_unchecked(L, R);
  const std::size_t n = L.dim();
  for (const auto& [t, value] : theta.table().stored()) {
    T.set_bracket(t[0], t[1], t[2], Vec::concat(L.basis_bracket(t[0], t[1], t[2]), value));
  }
  (void)n;
  return T;
}

TThetaExtension t_theta_extension(const Hom3LieAlgebra& L, const Representation& R,
                                  const Cocycle& theta) {
  require_cocycle_shape(L, R, theta);
  const auto rep = verify_representation(L, R, 1);
  if (!rep.ok()) {
    throw Error(ErrorCode::invalid_representation,
                "T_theta extension needs a representation; " +
                    std::to_string(rep.violation_count) + " identity violations found");
  }
  const auto coc = verify_cocycle(L, R, theta, 1);
  if (!coc.ok) {
    throw Error(ErrorCode::invalid_cocycle, "theta fails the 3-cocycle identity on " +
                                                std::to_string(coc.violation_count) +
                                                " basis tuples");
  }
  Hom3LieAlgebra T = build_t_theta(L, R, theta);
  AlgebraReport report = verify_algebra(T);
  return {std::move(T), std::move(report)};
}

BilinForm hyperbolic_form(std::size_t n) {
  Mat g(2 * n, 2 * n);
  g.set_block(0, n, Mat::identity(n));
  g.set_block(n, 0, Mat::identity(n));
  return BilinForm(std::move(g));
}

TStarExtension t_star_extension(const Hom3LieAlgebra& L, const Cocycle& theta) {
  if (theta.algebra_dim() != L.dim() || theta.module_dim() != L.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "T* extension needs theta : L^3 -> L*");
  }
  return {build_t_theta(L, coadjoint_rep(L), theta), hyperbolic_form(L.dim())};
}

bool theta_cyclic_ok(const Hom3LieAlgebra& L, const Cocycle& theta) {
  const std::size_t n = L.dim();
  if (theta.algebra_dim() != n || theta.module_dim() != n) {
    throw Error(ErrorCode::dimension_mismatch, "theta must map L^3 into L*");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec ijk = theta.basis_value(i, j, k);
        for (std::size_t l = 0; l < n; ++l) {
          if (ijk[l] + theta.basis_value(i, j, l)[k] != 0) return false;
        }
      }
  return true;
}

MetricReport verify_metric(const Hom3LieAlgebra& G, const Mat& gram, std::size_t max_witnesses) {
  const std::size_t n = G.dim();
  if (gram.rows() != n || gram.cols() != n) {
    throw Error(ErrorCode::dimension_mismatch, "form dimension does not match the algebra");
  }
  MetricReport r;
  ViolationLog log(max_witnesses);
  r.symmetric = gram == gram.transpose();
  if (!r.symmetric) log.add("form-symmetric", {}, Vec(), Vec());
  r.nondegenerate = rank(gram) == n;
  if (!r.nondegenerate) {
    log.add("form-nondegenerate", {}, Vec{Rat(static_cast<long>(rank(gram)))},
            Vec{Rat(static_cast<long>(n))});
  }
  auto B = [&](const Vec& x, const Vec& y) { return dot(x, gram.apply(y)); };
  std::vector<Vec> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(Vec::unit(n, i));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Vec abc = G.basis_bracket(a, b, c);
        for (std::size_t d = 0; d < n; ++d) {
          const Rat lhs = B(abc, e[d]);
          const Rat rhs = -B(G.basis_bracket(a, b, d), e[c]);
          if (lhs != rhs) {
            r.invariant = false;
            log.add("invariance", {a + 1, b + 1, c + 1, d + 1}, Vec{lhs}, Vec{rhs});
          }
        }
      }
  r.alpha_compatible = G.alpha().transpose() * gram * G.alpha() == gram;
  r.violation_count = log.count();
  r.violations = std::move(log).take();
  return r;
}

MetricReport verify_metric(const Hom3LieAlgebra& G, const BilinForm& B,
                           std::size_t max_witnesses) {
  return verify_metric(G, B.gram(), max_witnesses);
}

ShiftIsomorphism shift_isomorphism(const Hom3LieAlgebra& L, const Representation& R,
                                   const Cocycle& theta, const Mat& f) {
  require_cocycle_shape(L, R, theta);
  const std::size_t n = L.dim();
  const std::size_t m = R.module_dim();
  if (f.rows() != m || f.cols() != n) {
    throw Error(ErrorCode::shape_mismatch, "f must be " + std::to_string(m) + "x" +
                                               std::to_string(n));
  }
  Mat sigma = Mat::identity(n + m);
  sigma.set_block(n, 0, f);
  const Hom3LieAlgebra source = build_t_theta(L, R, theta);
  const Hom3LieAlgebra target = build_t_theta(L, R, theta + coboundary(L, R, f));
  const bool ok = is_morphism(sigma, source, target) && determinant(sigma) != 0;
  return {std::move(sigma), ok};
}

bool is_isometry(const Hom3LieAlgebra& G, const BilinForm& B, const Hom3LieAlgebra& Gp,
                 const BilinForm& Bp, const Mat& sigma) {
  const std::size_t n = G.dim();
  if (B.dim() != n || Bp.dim() != Gp.dim() || sigma.rows() != Gp.dim() || sigma.cols() != n) {
    throw Error(ErrorCode::shape_mismatch, "isometry candidate has inconsistent shapes");
  }
  if (Gp.dim() != n || determinant(sigma) == 0) return false;
  if (sigma.transpose() * Bp.gram() * sigma != B.gram()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (sigma.apply(G.basis_bracket(i, j, k)) !=
            Gp.bracket(sigma.column(i), sigma.column(j), sigma.column(k))) {
          return false;
        }
      }
  return true;
}

}  // namespace hom3lie
