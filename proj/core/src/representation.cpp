#include "hom3lie/representation.hpp"

#include <string>

#include "hom3lie/error.hpp"

namespace hom3lie {

Representation::Representation(std::size_t algebra_dim, std::size_t module_dim)
    : algebra_dim_(algebra_dim), A_(Mat::identity(module_dim)) {}

Representation::Representation(std::size_t algebra_dim, Mat A)
    : algebra_dim_(algebra_dim), A_(std::move(A)) {
  if (!A_.is_square()) throw Error(ErrorCode::shape_mismatch, "module twist must be square");
}

void Representation::set_A(Mat A) {
  if (A.rows() != module_dim() || A.cols() != module_dim()) {
    throw Error(ErrorCode::shape_mismatch, "module twist has the wrong size");
  }
  A_ = std::move(A);
}

void Representation::set_rho(std::size_t i, std::size_t j, const Mat& value) {
  if (i >= algebra_dim_ || j >= algebra_dim_ || i == j) {
    throw Error(ErrorCode::invalid_index, "rho needs two distinct indices in 1.." +
                                              std::to_string(algebra_dim_));
  }
  if (value.rows() != module_dim() || value.cols() != module_dim()) {
    throw Error(ErrorCode::shape_mismatch, "rho value must be " + std::to_string(module_dim()) +
                                               "x" + std::to_string(module_dim()));
  }
  const bool flip = i > j;
  const Pair key = flip ? Pair{j, i} : Pair{i, j};
  if (value.is_zero()) {
    rho_.erase(key);
  } else {
    rho_[key] = flip ? -value : value;
  }
}

Mat Representation::rho_basis(std::size_t i, std::size_t j) const {
  if (i >= algebra_dim_ || j >= algebra_dim_) {
    throw Error(ErrorCode::invalid_index, "rho index out of range");
  }
  if (i == j) return Mat::zero(module_dim(), module_dim());
  const bool flip = i > j;
  auto it = rho_.find(flip ? Pair{j, i} : Pair{i, j});
  if (it == rho_.end()) return Mat::zero(module_dim(), module_dim());
  return flip ? -it->second : it->second;
}

Mat Representation::rho(const Vec& x, const Vec& y) const {
  if (x.size() != algebra_dim_ || y.size() != algebra_dim_) {
    throw Error(ErrorCode::dimension_mismatch, "rho arguments must have length " +
                                                   std::to_string(algebra_dim_));
  }
  Mat out(module_dim(), module_dim());
  for (const auto& [p, m] : rho_) {
    const Rat c = x[p[0]] * y[p[1]] - x[p[1]] * y[p[0]];
    if (!is_zero(c)) out += c * m;
  }
  return out;
}

Mat rho_apply(const Representation& R, const Vec& x, const Vec& y) { return R.rho(x, y); }

RepresentationReport verify_representation(const Hom3LieAlgebra& L, const Representation& R,
                                           std::size_t max_witnesses) {
  if (R.algebra_dim() != L.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "representation is over a " +
                                                   std::to_string(R.algebra_dim()) +
                                                   "-dimensional algebra, not " +
                                                   std::to_string(L.dim()));
  }
  const std::size_t n = L.dim();
  const Mat& A = R.A();
  std::vector<Vec> e, ae;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(Vec::unit(n, i));
    ae.push_back(L.alpha().column(i));
  }
  // rho on twisted basis pairs and on basis pairs, cached
  std::vector<Mat> rho_aa(n * n), rho_ee(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rho_aa[i * n + j] = R.rho(ae[i], ae[j]);
      rho_ee[i * n + j] = R.rho_basis(i, j);
    }
  auto raa = [&](std::size_t i, std::size_t j) -> const Mat& { return rho_aa[i * n + j]; };
  auto ree = [&](std::size_t i, std::size_t j) -> const Mat& { return rho_ee[i * n + j]; };

  ViolationLog twist(max_witnesses), action(max_witnesses), comm(max_witnesses);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const Mat lhs = raa(u, v) * A;
      const Mat rhs = A * ree(u, v);
      if (lhs != rhs) twist.add("rep-twist", {u + 1, v + 1}, lhs.vectorize(), rhs.vectorize());
    }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Vec xyz = L.basis_bracket(x, y, z);
        for (std::size_t u = 0; u < n; ++u) {
          const Mat bracket_term = R.rho(xyz, ae[u]) * A;
          {
            const Mat rhs = raa(y, z) * ree(x, u) + raa(z, x) * ree(y, u) + raa(x, y) * ree(z, u);
            if (bracket_term != rhs) {
              action.add("rep-bracket-action", {x + 1, y + 1, z + 1, u + 1},
                         bracket_term.vectorize(), rhs.vectorize());
            }
          }
          {
            const Mat lhs = raa(x, y) * ree(z, u);
            const Mat rhs = raa(z, u) * ree(x, y) + bracket_term +
                            R.rho(ae[z], L.basis_bracket(x, y, u)) * A;
            if (lhs != rhs) {
              comm.add("rep-commutation", {x + 1, y + 1, z + 1, u + 1}, lhs.vectorize(),
                       rhs.vectorize());
            }
          }
        }
      }

  RepresentationReport r;
  r.twist_ok = twist.empty();
  r.bracket_action_ok = action.empty();
  r.commutation_ok = comm.empty();
  r.violation_count = twist.count() + action.count() + comm.count();
  for (const auto* log : {&twist, &action, &comm})
    for (const auto& v : log->records())
      if (r.violations.size() < max_witnesses) r.violations.push_back(v);
  return r;
}

Representation adjoint_rep(const Hom3LieAlgebra& L) {
  const std::size_t n = L.dim();
  Representation R(n, L.alpha());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Mat ad(n, n);
      for (std::size_t c = 0; c < n; ++c) ad.set_column(c, L.basis_bracket(i, j, c));
      R.set_rho(i, j, ad);
    }
  return R;
}

Representation dual_rep(const Representation& R) {
  Representation D(R.algebra_dim(), R.A().transpose());
  for (const auto& [p, m] : R.stored()) D.set_rho(p[0], p[1], -m.transpose());
  return D;
}

Representation coadjoint_rep(const Hom3LieAlgebra& L) { return dual_rep(adjoint_rep(L)); }

Hom3LieAlgebra semidirect_product_unchecked(const Hom3LieAlgebra& L, const Representation& R) {
  if (R.algebra_dim() != L.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "representation does not match the algebra");
  }
  const std::size_t n = L.dim();
  const std::size_t m = R.module_dim();
  Hom3LieAlgebra S(n + m, Mat::block_diag(L.alpha(), R.A()));
  for (const auto& [t, value] : L.brackets().stored()) {
    S.set_bracket(t[0], t[1], t[2], Vec::concat(value, Vec(m)));
  }
  // [e_i, e_j, X_c] = rho(e_i, e_j) X_c; the other two placements follow by
  // skew-symmetry and agree with rho(w,u)Y and rho(v,w)X.
  for (const auto& [p, mat] : R.stored()) {
    for (std::size_t c = 0; c < m; ++c) {
      S.set_bracket(p[0], p[1], n + c, Vec::concat(Vec(n), mat.column(c)));
    }
  }
  return S;
}

Hom3LieAlgebra semidirect_product(const Hom3LieAlgebra& L, const Representation& R) {
  const auto report = verify_representation(L, R, 1);
  if (!report.ok()) {
    throw Error(ErrorCode::invalid_representation,
                "semidirect product needs a representation; " +
                    std::to_string(report.violation_count) + " identity violations found");
  }
  return semidirect_product_unchecked(L, R);
}

}  // namespace hom3lie
