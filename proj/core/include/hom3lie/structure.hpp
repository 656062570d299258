#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hom3lie/algebra.hpp"
#include "hom3lie/extensions.hpp"

namespace hom3lie {

enum class SeriesKind { derived, central_descending, central_ascending };

const char* series_kind_name(SeriesKind kind) noexcept;

struct SeriesResult {
  SeriesKind kind = SeriesKind::derived;
  /// terms[0] is L (descending kinds) or 0 (ascending).
  std::vector<Subspace> terms;
  /// The last two terms coincide and the series never reached its end.
  bool stabilized = false;
  /// Smallest k with terms[k] = 0 (descending) or terms[k] = L (ascending).
  std::optional<std::size_t> length;
};

inline constexpr std::size_t kDefaultMaxSteps = 64;

/// derived:            L^(n+1) = [L^(n), L^(n), L]
/// central_descending: L^(n+1) = [L^n, L, L]
/// central_ascending:  C_(n+1) = {a : [a, L, L] in C_n}, C_0 = 0
SeriesResult series(const Hom3LieAlgebra& L, SeriesKind kind,
                    std::size_t max_steps = kDefaultMaxSteps);

/// {a : [a, e_j, e_k] in I for all j < k}.
Subspace centralizer_step(const Hom3LieAlgebra& L, const Subspace& I);

std::optional<std::size_t> is_solvable(const Hom3LieAlgebra& L,
                                       std::size_t max_steps = kDefaultMaxSteps);
std::optional<std::size_t> is_nilpotent(const Hom3LieAlgebra& L,
                                        std::size_t max_steps = kDefaultMaxSteps);

bool is_isotropic(const BilinForm& B, const Subspace& S);

/// An isotropic L0 with L0 (+) I = whole space. Requires B non-degenerate
/// of dimension 2k and I isotropic of dimension k.
Subspace isotropic_complement(const BilinForm& B, const Subspace& I);

struct ReconstructionResult {
  Quotient quotient;
  Subspace complement{0};
  /// k x k: column c of the ideal basis maps to the functional B(i_c, lift(.)).
  Mat delta;
  Cocycle theta{0, 0};
  Hom3LieAlgebra tstar{0};
  BilinForm tstar_form{Mat()};
  /// 2k x 2k map G -> L (+) L*.
  Mat sigma;
  bool isometry_ok = false;
};

/// Rebuilds a metric algebra (G, B) with an isotropic ideal I of half
/// dimension as a T*-extension of G/I. L0 defaults to isotropic_complement.
/// Errors: not_metric, not_an_ideal, wrong_ideal_dimension, not_isotropic,
/// not_abelian_ideal, invalid_complement.
ReconstructionResult reconstruct_t_star(const Hom3LieAlgebra& G, const BilinForm& B,
                                        const Subspace& I,
                                        const std::optional<Subspace>& L0 = std::nullopt);

struct SolvabilityCheck {
  std::optional<std::size_t> base_solvable;
  std::optional<std::size_t> base_nilpotent;
  std::optional<std::size_t> ext_solvable;
  std::optional<std::size_t> ext_nilpotent;
  /// solvable(L) => solvable(T*) with length(T*) <= length(L) + 1.
  bool solvable_ok = true;
  /// nilpotent(L) => nilpotent(T*).
  bool nilpotent_ok = true;

  bool ok() const noexcept { return solvable_ok && nilpotent_ok; }
};

SolvabilityCheck tstar_solvability_check(const Hom3LieAlgebra& L, const Cocycle& theta,
                                         std::size_t max_steps = kDefaultMaxSteps);

}  // namespace hom3lie
