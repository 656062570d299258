#include "hom3lie/algebra.hpp"

#include <string>

#include "hom3lie/error.hpp"

namespace hom3lie {

namespace {

void require_square(const Mat& alpha, std::size_t n, const char* what) {
  if (alpha.rows() != n || alpha.cols() != n) {
    throw Error(ErrorCode::shape_mismatch, std::string(what) + " must be " + std::to_string(n) +
                                               "x" + std::to_string(n));
  }
}

void require_ambient(const Subspace& S, std::size_t n) {
  if (S.ambient_dim() != n) {
    throw Error(ErrorCode::dimension_mismatch, "subspace of Q^" + std::to_string(S.ambient_dim()) +
                                                   " used in a " + std::to_string(n) +
                                                   "-dimensional algebra");
  }
}

std::vector<Vec> twisted_basis(const Hom3LieAlgebra& L) {
  std::vector<Vec> out;
  out.reserve(L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) out.push_back(L.alpha().column(i));
  return out;
}

}  // namespace

Hom3LieAlgebra::Hom3LieAlgebra(std::size_t dim) : Hom3LieAlgebra(dim, Mat::identity(dim)) {}

Hom3LieAlgebra::Hom3LieAlgebra(std::size_t dim, Mat alpha)
    : brackets_(dim, dim), alpha_(std::move(alpha)) {
  require_square(alpha_, dim, "twist map");
}

Hom3LieAlgebra::Hom3LieAlgebra(AlternatingTrilinear brackets, Mat alpha)
    : brackets_(std::move(brackets)), alpha_(std::move(alpha)) {
  if (brackets_.domain_dim() != brackets_.codomain_dim()) {
    throw Error(ErrorCode::dimension_mismatch, "bracket must map L^3 into L");
  }
  require_square(alpha_, dim(), "twist map");
}

void Hom3LieAlgebra::set_bracket(std::size_t i, std::size_t j, std::size_t k, const Vec& value) {
  brackets_.set(i, j, k, value);
}

void Hom3LieAlgebra::set_alpha(Mat alpha) {
  require_square(alpha, dim(), "twist map");
  alpha_ = std::move(alpha);
}

void AlgebraReport::merge(const AlgebraReport& other, std::size_t max_witnesses) {
  skew_ok = skew_ok && other.skew_ok;
  hom_jacobi_ok = hom_jacobi_ok && other.hom_jacobi_ok;
  multiplicative_ok = multiplicative_ok && other.multiplicative_ok;
  regular_ok = regular_ok && other.regular_ok;
  for (const auto& v : other.violations) {
    if (violations.size() < max_witnesses) violations.push_back(v);
  }
  violation_count += other.violation_count;
}

Vec bracket(const Hom3LieAlgebra& L, const Vec& x, const Vec& y, const Vec& z) {
  return L.bracket(x, y, z);
}

AlgebraReport verify_skew(const Hom3LieAlgebra&) { return {}; }

AlgebraReport verify_hom_jacobi(const Hom3LieAlgebra& L, std::size_t max_witnesses) {
  const std::size_t n = L.dim();
  const auto ae = twisted_basis(L);
  ViolationLog log(max_witnesses);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      for (std::size_t w = v + 1; w < n; ++w) {
        const Vec uvw = L.basis_bracket(u, v, w);
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            const Vec lhs = L.bracket(ae[x], ae[y], uvw);
            Vec rhs = L.bracket(L.basis_bracket(x, y, u), ae[v], ae[w]);
            rhs += L.bracket(ae[u], L.basis_bracket(x, y, v), ae[w]);
            rhs += L.bracket(ae[u], ae[v], L.basis_bracket(x, y, w));
            if (lhs != rhs) {
              log.add("hom-jacobi", {x + 1, y + 1, u + 1, v + 1, w + 1}, lhs, rhs);
            }
          }
        }
      }
    }
  }
  AlgebraReport r;
  r.hom_jacobi_ok = log.empty();
  r.violation_count = log.count();
  r.violations = std::move(log).take();
  return r;
}

AlgebraReport verify_multiplicative(const Hom3LieAlgebra& L, std::size_t max_witnesses) {
  const std::size_t n = L.dim();
  const auto ae = twisted_basis(L);
  ViolationLog log(max_witnesses);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec lhs = L.twist(L.basis_bracket(i, j, k));
        const Vec rhs = L.bracket(ae[i], ae[j], ae[k]);
        if (lhs != rhs) log.add("multiplicative", {i + 1, j + 1, k + 1}, lhs, rhs);
      }
    }
  }
  AlgebraReport r;
  r.multiplicative_ok = log.empty();
  r.violation_count = log.count();
  r.violations = std::move(log).take();
  return r;
}

AlgebraReport verify_regular(const Hom3LieAlgebra& L, std::size_t max_witnesses) {
  AlgebraReport r = verify_multiplicative(L, max_witnesses);
  const std::size_t rk = rank(L.alpha());
  if (rk < L.dim()) {
    r.violation_count += 1;
    if (r.violations.size() < max_witnesses) {
      r.violations.push_back({"twist-invertible", {}, Vec{Rat(static_cast<long>(rk))},
                              Vec{Rat(static_cast<long>(L.dim()))}});
    }
  }
  r.regular_ok = r.multiplicative_ok && rk == L.dim();
  return r;
}

AlgebraReport verify_algebra(const Hom3LieAlgebra& L, std::size_t max_witnesses) {
  AlgebraReport r = verify_skew(L);
  r.merge(verify_hom_jacobi(L, max_witnesses), max_witnesses);
  r.merge(verify_multiplicative(L, max_witnesses), max_witnesses);
  return r;
}

bool is_subalgebra(const Hom3LieAlgebra& L, const Subspace& S) {
  require_ambient(S, L.dim());
  if (!subspace_leq(image(L.alpha(), S), S)) return false;
  const auto b = S.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      for (std::size_t k = j + 1; k < b.size(); ++k)
        if (!S.contains(L.bracket(b[i], b[j], b[k]))) return false;
  return true;
}

bool is_ideal(const Hom3LieAlgebra& L, const Subspace& S) {
  require_ambient(S, L.dim());
  if (!subspace_leq(image(L.alpha(), S), S)) return false;
  const std::size_t n = L.dim();
  for (const auto& s : S.basis()) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!S.contains(L.bracket(s, Vec::unit(n, j), Vec::unit(n, k)))) return false;
      }
    }
  }
  return true;
}

Subspace subspace_bracket(const Hom3LieAlgebra& L, const Subspace& s1, const Subspace& s2,
                          const Subspace& s3) {
  require_ambient(s1, L.dim());
  require_ambient(s2, L.dim());
  require_ambient(s3, L.dim());
  std::vector<Vec> gens;
  const auto b1 = s1.basis();
  const auto b2 = s2.basis();
  const auto b3 = s3.basis();
  for (const auto& a : b1)
    for (const auto& b : b2)
      for (const auto& c : b3) {
        Vec v = L.bracket(a, b, c);
        if (!v.is_zero()) gens.push_back(std::move(v));
      }
  return Subspace::span(L.dim(), gens);
}

Hom3LieAlgebra direct_sum(const Hom3LieAlgebra& L, const Hom3LieAlgebra& G) {
  const std::size_t n = L.dim();
  const std::size_t m = G.dim();
  Hom3LieAlgebra sum(n + m, Mat::block_diag(L.alpha(), G.alpha()));
  for (const auto& [t, value] : L.brackets().stored()) {
    sum.set_bracket(t[0], t[1], t[2], Vec::concat(value, Vec(m)));
  }
  for (const auto& [t, value] : G.brackets().stored()) {
    sum.set_bracket(n + t[0], n + t[1], n + t[2], Vec::concat(Vec(n), value));
  }
  return sum;
}

namespace {

void require_map_shape(const Mat& phi, const Hom3LieAlgebra& L, const Hom3LieAlgebra& G) {
  if (phi.rows() != G.dim() || phi.cols() != L.dim()) {
    throw Error(ErrorCode::shape_mismatch,
                "map must be " + std::to_string(G.dim()) + "x" + std::to_string(L.dim()) +
                    ", got " + std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()));
  }
}

}  // namespace

bool is_morphism(const Mat& phi, const Hom3LieAlgebra& L, const Hom3LieAlgebra& G) {
  require_map_shape(phi, L, G);
  if (phi * L.alpha() != G.alpha() * phi) return false;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (phi.apply(L.basis_bracket(i, j, k)) !=
            G.bracket(phi.column(i), phi.column(j), phi.column(k))) {
          return false;
        }
      }
  return true;
}

Subspace graph(const Mat& phi, const Hom3LieAlgebra& L, const Hom3LieAlgebra& G) {
  require_map_shape(phi, L, G);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    gens.push_back(Vec::concat(Vec::unit(L.dim(), i), phi.column(i)));
  }
  return Subspace::span(L.dim() + G.dim(), gens);
}

Quotient quotient(const Hom3LieAlgebra& L, const Subspace& I) {
  require_ambient(I, L.dim());
  if (!is_ideal(L, I)) {
    throw Error(ErrorCode::not_an_ideal, "quotient requires an ideal stable under the twist");
  }
  const std::size_t n = L.dim();
  const auto free = I.free_columns();
  const std::size_t q = free.size();

  std::vector<std::size_t> position(n, q);
  for (std::size_t c = 0; c < q; ++c) position[free[c]] = c;

  Mat projection(q, n);
  Mat section(n, q);
  for (std::size_t c = 0; c < q; ++c) {
    projection(c, free[c]) = 1;
    section(free[c], c) = 1;
  }
  // pivot column p_r of basis row b_r maps to -(b_r restricted to free columns)
  const Mat& basis = I.basis_matrix();
  for (std::size_t r = 0; r < I.dim(); ++r) {
    const std::size_t p = I.pivots()[r];
    for (std::size_t c = 0; c < q; ++c) projection(c, p) = -basis(r, free[c]);
  }

  Hom3LieAlgebra out(q, projection * L.alpha() * section);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b)
      for (std::size_t c = b + 1; c < q; ++c) {
        out.set_bracket(a, b, c, projection.apply(L.basis_bracket(free[a], free[b], free[c])));
      }
  return {std::move(out), std::move(projection), std::move(section), free};
}

}  // namespace hom3lie
