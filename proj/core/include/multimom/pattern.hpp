#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace multimom {

/// Canonical exponent pattern over distinct coordinates: a non-empty list
/// of positive exponents stored in non-increasing order, one representative
/// per symmetry class of mixed moments. Construction sorts the input.
class Pattern {
 public:
  Pattern(std::initializer_list<unsigned> exps)
      : Pattern(std::vector<unsigned>(exps)) {}
  explicit Pattern(std::vector<unsigned> exps);

  /// Number of distinct coordinates the pattern touches.
  std::size_t arity() const { return exps_.size(); }

  /// Total order, sum of all exponents.
  unsigned order() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
  }

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  auto begin() const { return exps_.begin(); }
  auto end() const { return exps_.end(); }

  /// "(4,2,1)" — used by the CLI catalog listing and diagnostics.
  std::string str() const;

  bool operator==(const Pattern&) const = default;
  auto operator<=>(const Pattern&) const = default;

 private:
  std::vector<unsigned> exps_;
};

/// All patterns of total order 1..max_order: the integer partitions of
/// each order, listed by ascending order and reverse-lexicographically
/// within an order, e.g. order 4 gives (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Pattern> patterns_up_to(unsigned max_order);

}  // namespace multimom
