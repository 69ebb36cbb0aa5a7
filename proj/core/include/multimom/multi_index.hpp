#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

namespace multimom {

/// Ordered tuple of non-negative exponents (p_1, ..., p_d), one per free
/// coordinate of the distribution it is evaluated against.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<unsigned> exps) : exps_(exps) {}
  explicit MultiIndex(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static MultiIndex zeros(std::size_t d) {
    return MultiIndex(std::vector<unsigned>(d, 0u));
  }

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  /// Total order, sum of all exponents.
  unsigned order() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
  }

  auto begin() const { return exps_.begin(); }
  auto end() const { return exps_.end(); }

  bool operator==(const MultiIndex&) const = default;

 private:
  std::vector<unsigned> exps_;
};

}  // namespace multimom
