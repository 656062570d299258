#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hom3lie/linalg.hpp"

namespace hom3lie {

inline constexpr std::size_t kDefaultMaxWitnesses = 16;

/// One failed instance of a checked identity. Indices are 1-based basis
/// indices in the order the identity takes its arguments.
struct Violation {
  std::string identity;
  std::vector<std::size_t> indices;
  Vec lhs;
  Vec rhs;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Keeps the first `limit` violations in sweep order and an exact total.
class ViolationLog {
 public:
  explicit ViolationLog(std::size_t limit = kDefaultMaxWitnesses) : limit_(limit) {}

  void add(std::string identity, std::vector<std::size_t> indices, Vec lhs, Vec rhs) {
    ++count_;
    if (kept_.size() < limit_) {
      kept_.push_back({std::move(identity), std::move(indices), std::move(lhs), std::move(rhs)});
    }
  }

  /// Appends another log's records, respecting this log's limit.
  void absorb(const std::vector<Violation>& records, std::size_t total) {
    for (const auto& r : records) {
      if (kept_.size() < limit_) kept_.push_back(r);
    }
    count_ += total;
  }

  std::size_t count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  const std::vector<Violation>& records() const noexcept { return kept_; }
  std::vector<Violation> take() && { return std::move(kept_); }

 private:
  std::size_t limit_;
  std::size_t count_ = 0;
  std::vector<Violation> kept_;
};

}  // namespace hom3lie
