#pragma once

#include <vector>

#include "multimom/rational.hpp"

namespace multimom {

/// Trial count m and exact probability vector x of a multinomial law over
/// d free categories. The last category is implicit with probability
/// 1 - sum(x), so the only requirements are x_i in [0, 1] and sum(x) <= 1.
class MultinomialParams {
 public:
  /// Validates on construction. Throws std::invalid_argument when m < 0,
  /// x is empty, a component leaves [0, 1], or the components sum past 1
  /// (the diagnostic names the offending sum).
  MultinomialParams(Integer trials, std::vector<Rational> probs);

  const Integer& trials() const { return trials_; }
  const std::vector<Rational>& probs() const { return probs_; }
  unsigned dim() const { return static_cast<unsigned>(probs_.size()); }

  /// Probability 1 - sum(x) of the implicit final category.
  const Rational& leftover() const { return leftover_; }

  bool operator==(const MultinomialParams&) const = default;

 private:
  Integer trials_;
  std::vector<Rational> probs_;
  Rational leftover_;
};

}  // namespace multimom
