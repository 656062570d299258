#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hom3lie {

/// Every failure the library raises carries one of these codes. The CLI maps
/// them to exit codes: parse errors are input-malformed (2), everything else
/// is a named precondition failure (1).
enum class ErrorCode {
  dimension_mismatch,
  ambient_mismatch,
  shape_mismatch,
  invalid_index,
  parse_error,
  not_an_ideal,
  not_regular,
  not_fixed_point,
  invalid_grade,
  invalid_representation,
  invalid_cocycle,
  not_metric,
  not_isotropic,
  not_abelian_ideal,
  wrong_ideal_dimension,
  degenerate_form,
  invalid_complement,
  out_of_range,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace hom3lie
