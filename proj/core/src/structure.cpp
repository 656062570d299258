#include "hom3lie/structure.hpp"

#include <string>

#include "hom3lie/error.hpp"

namespace hom3lie {

const char* series_kind_name(SeriesKind kind) noexcept {
  switch (kind) {
    case SeriesKind::derived: return "derived";
    case SeriesKind::central_descending: return "central-descending";
    case SeriesKind::central_ascending: return "central-ascending";
  }
  return "?";
}

Subspace centralizer_step(const Hom3LieAlgebra& L, const Subspace& I) {
  const std::size_t n = L.dim();
  if (I.ambient_dim() != n) throw Error(ErrorCode::ambient_mismatch, "subspace is not in L");
  const auto annihilator = nullspace(I.basis_matrix()).basis();
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      Mat m(n, n);
      for (std::size_t c = 0; c < n; ++c) m.set_column(c, L.basis_bracket(c, j, k));
      const Mat mt = m.transpose();
      for (const auto& w : annihilator) rows.push_back(mt.apply(w));
    }
  if (rows.empty()) return Subspace::full(n);
  return nullspace(Mat::from_rows(rows, n));
}

SeriesResult series(const Hom3LieAlgebra& L, SeriesKind kind, std::size_t max_steps) {
  if (max_steps < 1) throw Error(ErrorCode::out_of_range, "max_steps must be at least 1");
  const std::size_t n = L.dim();
  const Subspace full = Subspace::full(n);
  const bool ascending = kind == SeriesKind::central_ascending;
  SeriesResult r;
  r.kind = kind;
  r.terms.push_back(ascending ? Subspace::zero(n) : full);
  auto done = [&](const Subspace& s) { return ascending ? s.is_full() : s.is_zero(); };
  if (done(r.terms.back())) {
    r.length = 0;
    return r;
  }
  for (std::size_t step = 0; step < max_steps; ++step) {
    const Subspace& cur = r.terms.back();
    Subspace next = kind == SeriesKind::derived ? subspace_bracket(L, cur, cur, full)
                    : kind == SeriesKind::central_descending ? subspace_bracket(L, cur, full, full)
                                                             : centralizer_step(L, cur);
    const bool same = next == cur;
    r.terms.push_back(std::move(next));
    if (done(r.terms.back())) {
      r.length = r.terms.size() - 1;
      break;
    }
    if (same) {
      r.stabilized = true;
      break;
    }
  }
  return r;
}

std::optional<std::size_t> is_solvable(const Hom3LieAlgebra& L, std::size_t max_steps) {
  return series(L, SeriesKind::derived, max_steps).length;
}

std::optional<std::size_t> is_nilpotent(const Hom3LieAlgebra& L, std::size_t max_steps) {
  return series(L, SeriesKind::central_descending, max_steps).length;
}

bool is_isotropic(const BilinForm& B, const Subspace& S) {
  if (S.ambient_dim() != B.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "subspace and form live in different dimensions");
  }
  const auto basis = S.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      if (!is_zero(B(basis[i], basis[j]))) return false;
  return true;
}

namespace {

bool is_complement(const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() == a.ambient_dim() && subspace_sum(a, b).is_full();
}

}  // namespace

Subspace isotropic_complement(const BilinForm& B, const Subspace& I) {
  const std::size_t n = B.dim();
  if (I.ambient_dim() != n) {
    throw Error(ErrorCode::dimension_mismatch, "subspace and form live in different dimensions");
  }
  if (!B.is_nondegenerate()) throw Error(ErrorCode::degenerate_form, "form is degenerate");
  const std::size_t k = I.dim();
  if (2 * k != n) {
    throw Error(ErrorCode::wrong_ideal_dimension, "isotropic subspace has dimension " +
                                                      std::to_string(k) + ", need " +
                                                      std::to_string(n) + "/2");
  }
  if (!is_isotropic(B, I)) throw Error(ErrorCode::not_isotropic, "subspace is not isotropic");

  const auto e = I.basis();
  // rows e_i^T G; B(e_i, f) = (e_i^T G) f
  std::vector<Vec> rows;
  for (const auto& v : e) rows.push_back(B.gram().transpose().apply(v));
  const Mat system = Mat::from_rows(rows, n);
  std::vector<Vec> f;
  for (std::size_t j = 0; j < k; ++j) {
    auto sol = solve(system, Vec::unit(k, j));
    if (!sol) throw Error(ErrorCode::degenerate_form, "no dual vector for the isotropic basis");
    f.push_back(std::move(*sol));
  }
  std::vector<Vec> g;
  for (std::size_t j = 0; j < k; ++j) {
    Vec v = f[j];
    v.axpy(Rat(-1, 2) * B(f[j], f[j]), e[j]);
    for (std::size_t l = 0; l < j; ++l) v.axpy(-B(f[j], f[l]), e[l]);
    g.push_back(std::move(v));
  }
  Subspace L0 = Subspace::span(n, g);
  if (!is_complement(L0, I) || !is_isotropic(B, L0)) {
    throw Error(ErrorCode::invalid_complement, "hyperbolic completion did not close");
  }
  return L0;
}

ReconstructionResult reconstruct_t_star(const Hom3LieAlgebra& G, const BilinForm& B,
                                        const Subspace& I, const std::optional<Subspace>& L0opt) {
  const std::size_t n = G.dim();
  if (B.dim() != n || I.ambient_dim() != n) {
    throw Error(ErrorCode::dimension_mismatch, "algebra, form and ideal dimensions differ");
  }
  if (!verify_metric(G, B, 1).metric()) {
    throw Error(ErrorCode::not_metric, "form is not a non-degenerate invariant form");
  }
  if (!is_ideal(G, I)) throw Error(ErrorCode::not_an_ideal, "subspace is not an ideal");
  const std::size_t k = I.dim();
  if (2 * k != n) {
    throw Error(ErrorCode::wrong_ideal_dimension, "ideal has dimension " + std::to_string(k) +
                                                      ", need " + std::to_string(n) + "/2");
  }
  if (!is_isotropic(B, I)) throw Error(ErrorCode::not_isotropic, "ideal is not isotropic");
  if (!subspace_bracket(G, I, I, Subspace::full(n)).is_zero()) {
    throw Error(ErrorCode::not_abelian_ideal, "[I, I, G] is not zero");
  }
  Subspace L0 = L0opt ? *L0opt : isotropic_complement(B, I);
  if (L0.ambient_dim() != n || !is_complement(L0, I) || !is_isotropic(B, L0)) {
    throw Error(ErrorCode::invalid_complement,
                "complement must be isotropic and span the space together with the ideal");
  }

  Quotient Q = quotient(G, I);
  const Hom3LieAlgebra& L = Q.algebra;

  // Change of basis to (L0 basis, I basis); the trailing block of the inverse
  // gives coordinates along I.
  const auto l0b = L0.basis();
  const auto ib = I.basis();
  std::vector<Vec> cols(l0b);
  cols.insert(cols.end(), ib.begin(), ib.end());
  const Mat M = Mat::from_columns(cols, n);
  const Mat Minv = *inverse(M);
  const Mat to_i = Minv.block(k, 0, k, n);  // k x n, coordinates in I basis
  const Mat I_basis = Mat::from_columns(ib, n);
  const Mat rho1 = I_basis * to_i;

  // Lift of quotient coordinates into L0.
  const Mat L0_basis = Mat::from_columns(l0b, n);
  const Mat lift = L0_basis * *inverse(Q.projection * L0_basis);

  // delta(i)(xbar_c) = B(i, lift xbar_c); as a map G -> L*: S^T G^T
  const Mat delta_on_G = lift.transpose() * B.gram().transpose();
  const Mat delta = delta_on_G * I_basis;

  Cocycle theta(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (std::size_t c = b + 1; c < k; ++c) {
        const Vec x = G.bracket(lift.column(a), lift.column(b), lift.column(c));
        theta.set(a, b, c, delta_on_G.apply(rho1.apply(x)));
      }

  TStarExtension ext = t_star_extension(L, theta);
  Mat sigma(n, n);
  sigma.set_block(0, 0, Q.projection);
  sigma.set_block(k, 0, delta_on_G * rho1);
  const bool iso = is_isometry(G, B, ext.algebra, ext.form, sigma);
  return {std::move(Q), std::move(L0), delta, std::move(theta), std::move(ext.algebra),
          std::move(ext.form), std::move(sigma), iso};
}

SolvabilityCheck tstar_solvability_check(const Hom3LieAlgebra& L, const Cocycle& theta,
                                         std::size_t max_steps) {
  const TStarExtension ext = t_star_extension(L, theta);
  SolvabilityCheck r;
  r.base_solvable = is_solvable(L, max_steps);
  r.base_nilpotent = is_nilpotent(L, max_steps);
  r.ext_solvable = is_solvable(ext.algebra, max_steps);
  r.ext_nilpotent = is_nilpotent(ext.algebra, max_steps);
  if (r.base_solvable) {
    r.solvable_ok = r.ext_solvable && *r.ext_solvable <= *r.base_solvable + 1;
  }
  if (r.base_nilpotent) r.nilpotent_ok = r.ext_nilpotent.has_value();
  return r;
}

}  // namespace hom3lie
