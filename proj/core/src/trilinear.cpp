#include "hom3lie/trilinear.hpp"

#include <string>
#include <utility>

#include "hom3lie/error.hpp"

namespace hom3lie {

int sort_triple(Triple& t) {
  int sign = 1;
  // three-element bubble sort
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t a = 0; a + 1 < 3; ++a) {
      if (t[a] > t[a + 1]) {
        std::swap(t[a], t[a + 1]);
        sign = -sign;
      }
    }
  }
  if (t[0] == t[1] || t[1] == t[2]) return 0;
  return sign;
}

namespace {

void check_index(std::size_t i, std::size_t n) {
  if (i >= n) {
    throw Error(ErrorCode::invalid_index,
                "basis index " + std::to_string(i + 1) + " exceeds dimension " + std::to_string(n));
  }
}

void check_length(const Vec& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw Error(ErrorCode::dimension_mismatch, std::string(what) + ": expected length " +
                                                   std::to_string(n) + ", got " +
                                                   std::to_string(v.size()));
  }
}

}  // namespace

void AlternatingTrilinear::set(std::size_t i, std::size_t j, std::size_t k, const Vec& value) {
  check_index(i, domain_);
  check_index(j, domain_);
  check_index(k, domain_);
  check_length(value, codomain_, "trilinear value");
  Triple t{i, j, k};
  const int sign = sort_triple(t);
  if (sign == 0) {
    throw Error(ErrorCode::invalid_index, "repeated index in basis triple (" +
                                              std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                              "," + std::to_string(k + 1) + ")");
  }
  if (value.is_zero()) {
    values_.erase(t);
  } else {
    values_[t] = sign > 0 ? value : -value;
  }
}

Vec AlternatingTrilinear::basis_value(std::size_t i, std::size_t j, std::size_t k) const {
  check_index(i, domain_);
  check_index(j, domain_);
  check_index(k, domain_);
  Triple t{i, j, k};
  const int sign = sort_triple(t);
  if (sign == 0) return Vec(codomain_);
  auto it = values_.find(t);
  if (it == values_.end()) return Vec(codomain_);
  return sign > 0 ? it->second : -it->second;
}

Vec AlternatingTrilinear::operator()(const Vec& x, const Vec& y, const Vec& z) const {
  check_length(x, domain_, "trilinear argument");
  check_length(y, domain_, "trilinear argument");
  check_length(z, domain_, "trilinear argument");
  Vec out(codomain_);
  for (const auto& [t, value] : values_) {
    const auto [i, j, k] = t;
    // coefficient of e_i ^ e_j ^ e_k in x ^ y ^ z
    const Rat minor = x[i] * (y[j] * z[k] - y[k] * z[j]) - x[j] * (y[i] * z[k] - y[k] * z[i]) +
                      x[k] * (y[i] * z[j] - y[j] * z[i]);
    out.axpy(minor, value);
  }
  return out;
}

TrilinearTable::TrilinearTable(std::size_t domain_dim, std::size_t codomain_dim)
    : domain_(domain_dim), codomain_(codomain_dim),
      values_(domain_dim * domain_dim * domain_dim, Vec(codomain_dim)) {}

Vec& TrilinearTable::at(std::size_t i, std::size_t j, std::size_t k) {
  check_index(i, domain_);
  check_index(j, domain_);
  check_index(k, domain_);
  return values_[(i * domain_ + j) * domain_ + k];
}

const Vec& TrilinearTable::at(std::size_t i, std::size_t j, std::size_t k) const {
  check_index(i, domain_);
  check_index(j, domain_);
  check_index(k, domain_);
  return values_[(i * domain_ + j) * domain_ + k];
}

Vec TrilinearTable::operator()(const Vec& x, const Vec& y, const Vec& z) const {
  check_length(x, domain_, "trilinear argument");
  check_length(y, domain_, "trilinear argument");
  check_length(z, domain_, "trilinear argument");
  Vec out(codomain_);
  for (std::size_t i = 0; i < domain_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < domain_; ++j) {
      if (is_zero(y[j])) continue;
      const Rat xy = x[i] * y[j];
      for (std::size_t k = 0; k < domain_; ++k) {
        if (is_zero(z[k])) continue;
        out.axpy(xy * z[k], values_[(i * domain_ + j) * domain_ + k]);
      }
    }
  }
  return out;
}

bool TrilinearTable::is_skew() const {
  for (std::size_t i = 0; i < domain_; ++i) {
    for (std::size_t j = 0; j < domain_; ++j) {
      for (std::size_t k = 0; k < domain_; ++k) {
        const Vec& v = at(i, j, k);
        if (!(at(j, i, k) == -v) || !(at(i, k, j) == -v)) return false;
      }
    }
  }
  return true;
}

}  // namespace hom3lie
