#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hom3lie {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation.
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" (q != 0). Surrounding whitespace is rejected.
/// Throws Error(parse_error) on malformed input.
Rat parse_rat(std::string_view text);

/// Canonical text: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rat& r);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace hom3lie
