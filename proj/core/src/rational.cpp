#include "hom3lie/rational.hpp"

#include <cctype>

#include "hom3lie/error.hpp"

namespace hom3lie {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::ambient_mismatch: return "ambient-mismatch";
    case ErrorCode::shape_mismatch: return "shape-mismatch";
    case ErrorCode::invalid_index: return "invalid-index";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::not_an_ideal: return "not-an-ideal";
    case ErrorCode::not_regular: return "not-regular";
    case ErrorCode::not_fixed_point: return "not-fixed-point";
    case ErrorCode::invalid_grade: return "invalid-grade";
    case ErrorCode::invalid_representation: return "invalid-representation";
    case ErrorCode::invalid_cocycle: return "invalid-cocycle";
    case ErrorCode::not_metric: return "not-metric";
    case ErrorCode::not_isotropic: return "not-isotropic";
    case ErrorCode::not_abelian_ideal: return "not-abelian-ideal";
    case ErrorCode::wrong_ideal_dimension: return "wrong-ideal-dimension";
    case ErrorCode::degenerate_form: return "degenerate-form";
    case ErrorCode::invalid_complement: return "invalid-complement";
    case ErrorCode::out_of_range: return "out-of-range";
  }
  return "unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::parse_error,
                 "malformed rational \"" + std::string(text) + "\"");
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw fail();
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw fail();
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

}  // namespace hom3lie
