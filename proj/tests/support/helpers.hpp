#pragma once

#include <initializer_list>

#include "hom3lie/linalg.hpp"

namespace hom3lie::testing {

/// e_i with a 1-based index, as written in the algebra files.
inline Vec e(std::size_t n, std::size_t i) { return Vec::unit(n, i - 1); }

inline Vec vec(std::initializer_list<long> xs) {
  Vec v(xs.size());
  std::size_t i = 0;
  for (long x : xs) v[i++] = Rat(x);
  return v;
}

inline Mat diag(std::initializer_list<long> xs) {
  std::vector<Rat> d;
  for (long x : xs) d.emplace_back(x);
  return Mat::diagonal(d);
}

}  // namespace hom3lie::testing
