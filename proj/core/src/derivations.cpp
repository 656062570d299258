#include "hom3lie/derivations.hpp"

#include <string>

#include "hom3lie/error.hpp"

namespace hom3lie {

Mat alpha_power(const Hom3LieAlgebra& L, int k) {
  if (k >= 0) return power(L.alpha(), static_cast<unsigned>(k));
  if (!verify_regular(L, 1).regular_ok) {
    throw Error(ErrorCode::not_regular,
                "negative power alpha^" + std::to_string(k) + " needs a regular algebra");
  }
  return power(*inverse(L.alpha()), static_cast<unsigned>(-k));
}

namespace {

void require_operator(const Mat& D, std::size_t n) {
  if (D.rows() != n || D.cols() != n) {
    throw Error(ErrorCode::shape_mismatch, "expected a " + std::to_string(n) + "x" +
                                               std::to_string(n) + " linear map");
  }
}

/// Stacked residual of both derivation conditions; zero iff D qualifies.
/// Layout: n^2 entries of D a - a D, then n entries per increasing triple.
Vec derivation_residual(const Hom3LieAlgebra& L, const Mat& D, const Mat& ak) {
  const std::size_t n = L.dim();
  std::vector<Rat> out;
  const Mat comm = D * L.alpha() - L.alpha() * D;
  for (const auto& r : comm.vectorize()) out.push_back(r);

  std::vector<Vec> be, de;
  for (std::size_t i = 0; i < n; ++i) {
    be.push_back(ak.column(i));
    de.push_back(D.column(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec r = D.apply(L.basis_bracket(i, j, k));
        r -= L.bracket(de[i], be[j], be[k]);
        r -= L.bracket(be[i], de[j], be[k]);
        r -= L.bracket(be[i], be[j], de[k]);
        for (const auto& x : r) out.push_back(x);
      }
  return Vec(std::move(out));
}

DerivationSpace space_from_generators(const std::vector<Mat>& gens, std::size_t n, int k) {
  std::vector<Vec> flat;
  flat.reserve(gens.size());
  for (const auto& g : gens) flat.push_back(g.vectorize());
  DerivationSpace s;
  s.k = k;
  s.vectorized = Subspace::span(n * n, flat);
  for (const auto& v : s.vectorized.basis()) s.basis.push_back(Mat::unvectorize(v, n, n));
  return s;
}

}  // namespace

bool is_alpha_k_derivation(const Hom3LieAlgebra& L, const Mat& D, int k) {
  require_operator(D, L.dim());
  return derivation_residual(L, D, alpha_power(L, k)).is_zero();
}

DerivationSpace derivation_space(const Hom3LieAlgebra& L, int k) {
  const std::size_t n = L.dim();
  const Mat ak = alpha_power(L, k);
  // Each unknown D_ac contributes the residual of the elementary matrix E_ac
  // as one column of the homogeneous system.
  std::vector<Vec> columns;
  columns.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      columns.push_back(derivation_residual(L, Mat::elementary(n, n, a, c), ak));
  const Mat system = Mat::from_columns(columns, columns.front().size());

  DerivationSpace s;
  s.k = k;
  s.vectorized = nullspace(system);
  for (const auto& v : s.vectorized.basis()) s.basis.push_back(Mat::unvectorize(v, n, n));
  return s;
}

Subspace fixed_space(const Hom3LieAlgebra& L) {
  return nullspace(L.alpha() - Mat::identity(L.dim()));
}

Mat inner_derivation(const Hom3LieAlgebra& L, const Vec& u1, const Vec& u2, int k) {
  const std::size_t n = L.dim();
  if (u1.size() != n || u2.size() != n) {
    throw Error(ErrorCode::dimension_mismatch, "inner derivation arguments must have length " +
                                                   std::to_string(n));
  }
  if (L.twist(u1) != u1 || L.twist(u2) != u2) {
    throw Error(ErrorCode::not_fixed_point, "inner derivation arguments must be fixed by alpha");
  }
  const Mat ak = alpha_power(L, k);
  Mat ad(n, n);
  for (std::size_t c = 0; c < n; ++c) ad.set_column(c, L.bracket(u1, u2, ak.column(c)));
  return ad;
}

DerivationSpace inner_space(const Hom3LieAlgebra& L, int k) {
  if (k < 1) {
    throw Error(ErrorCode::invalid_grade, "inner derivations exist from grade 1, got " +
                                              std::to_string(k));
  }
  const auto fixed = fixed_space(L).basis();
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < fixed.size(); ++i)
    for (std::size_t j = i + 1; j < fixed.size(); ++j)
      gens.push_back(inner_derivation(L, fixed[i], fixed[j], k - 1));
  return space_from_generators(gens, L.dim(), k);
}

Mat commutator(const Mat& D, const Mat& Dp) {
  if (D.rows() != Dp.rows() || D.cols() != Dp.cols() || !D.is_square()) {
    throw Error(ErrorCode::shape_mismatch, "commutator needs two square matrices of equal size");
  }
  return D * Dp - Dp * D;
}

// ---------------------------------------------------------------------------
// Derivation extension

Vec DerivationExtension::literal_bracket(const Vec& a, const Vec& b, const Vec& c) const {
  const std::size_t n = base.dim();
  const Vec u = a.slice(0, n), v = b.slice(0, n), w = c.slice(0, n);
  const Rat& l = a[n];
  const Rat& m = b[n];
  const Rat& s = c[n];
  Vec out = base.bracket(u, v, w);
  out.axpy(l, derivation.apply(v));
  out.axpy(m, derivation.apply(w));
  out.axpy(-s, derivation.apply(u));
  return Vec::concat(out, Vec(1));
}

DerivationExtension derivation_extension(const Hom3LieAlgebra& L, const Mat& D,
                                         std::size_t max_witnesses) {
  const std::size_t n = L.dim();
  require_operator(D, n);
  const std::size_t N = n + 1;
  Mat one(1, 1);
  one(0, 0) = 1;
  DerivationExtension ext{L, D, Mat::block_diag(L.alpha(), one), TrilinearTable(N, N), {}};

  std::vector<Vec> e;
  for (std::size_t i = 0; i < N; ++i) e.push_back(Vec::unit(N, i));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) ext.table.at(i, j, k) = ext.literal_bracket(e[i], e[j], e[k]);

  AlgebraReport& rep = ext.report;
  rep.skew_ok = ext.table.is_skew();
  if (!rep.skew_ok) {
    rep.violation_count += 1;
    // first transposition that fails, for the record
    for (std::size_t i = 0; i < N && rep.violations.empty(); ++i)
      for (std::size_t j = 0; j < N && rep.violations.empty(); ++j)
        for (std::size_t k = 0; k < N && rep.violations.empty(); ++k) {
          if (ext.table.at(j, i, k) != -ext.table.at(i, j, k)) {
            rep.violations.push_back(
                {"skew", {i + 1, j + 1, k + 1}, ext.table.at(j, i, k), -ext.table.at(i, j, k)});
          } else if (ext.table.at(i, k, j) != -ext.table.at(i, j, k)) {
            rep.violations.push_back(
                {"skew", {i + 1, j + 1, k + 1}, ext.table.at(i, k, j), -ext.table.at(i, j, k)});
          }
        }
  }

  auto tw = [&](const Vec& x) { return ext.twist.apply(x); };
  auto br = [&](const Vec& a, const Vec& b, const Vec& c) { return ext.literal_bracket(a, b, c); };

  // Hom-Jacobi on (x, D, u, v, w).
  ViolationLog hj(max_witnesses);
  const Vec& d = e[n];
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        for (std::size_t w = v + 1; w < n; ++w) {
          const Vec lhs = br(tw(e[x]), tw(d), br(e[u], e[v], e[w]));
          Vec rhs = br(br(e[x], d, e[u]), tw(e[v]), tw(e[w]));
          rhs += br(tw(e[u]), br(e[x], d, e[v]), tw(e[w]));
          rhs += br(tw(e[u]), tw(e[v]), br(e[x], d, e[w]));
          if (lhs != rhs) hj.add("hom-jacobi", {x + 1, N, u + 1, v + 1, w + 1}, lhs, rhs);
        }
  rep.hom_jacobi_ok = hj.empty();
  rep.violation_count += hj.count();
  for (const auto& r : hj.records())
    if (rep.violations.size() < max_witnesses) rep.violations.push_back(r);

  ViolationLog mult(max_witnesses);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) {
        const Vec lhs = tw(ext.table.at(i, j, k));
        const Vec rhs = br(tw(e[i]), tw(e[j]), tw(e[k]));
        if (lhs != rhs) mult.add("multiplicative", {i + 1, j + 1, k + 1}, lhs, rhs);
      }
  rep.multiplicative_ok = mult.empty();
  rep.violation_count += mult.count();
  for (const auto& r : mult.records())
    if (rep.violations.size() < max_witnesses) rep.violations.push_back(r);

  std::vector<Vec> te;
  for (std::size_t i = 0; i < N; ++i) te.push_back(ext.twist.column(i));
  const TrilinearTable& T = ext.table;
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t u = 0; u < N; ++u)
        for (std::size_t v = 0; v < N; ++v)
          for (std::size_t w = 0; w < N; ++w) {
            const Vec lhs = T(te[x], te[y], T.at(u, v, w));
            Vec rhs = T(T.at(x, y, u), te[v], te[w]);
            rhs += T(te[u], T.at(x, y, v), te[w]);
            rhs += T(te[u], te[v], T.at(x, y, w));
            if (lhs != rhs) ++ext.full_table_violation_count;
          }
  ext.full_table_hom_jacobi_ok = ext.full_table_violation_count == 0;
  return ext;
}

}  // namespace hom3lie
