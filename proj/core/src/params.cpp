#include "multimom/params.hpp"

#include <stdexcept>

namespace multimom {

MultinomialParams::MultinomialParams(Integer trials, std::vector<Rational> probs)
    : trials_(std::move(trials)), probs_(std::move(probs)) {
  if (trials_ < 0) {
    throw std::invalid_argument("trial count must be non-negative, got " +
                                trials_.get_str());
  }
  if (probs_.empty()) {
    throw std::invalid_argument("probability vector must be non-empty");
  }
  Rational sum(0);
  for (const Rational& p : probs_) {
    if (p < Rational(0) || p > Rational(1)) {
      throw std::invalid_argument("probability " + p.str() +
                                  " outside [0, 1]");
    }
    sum += p;
  }
  if (sum > Rational(1)) {
    throw std::invalid_argument("probabilities sum to " + sum.str() +
                                ", which exceeds 1");
  }
  leftover_ = Rational(1) - sum;
}

}  // namespace multimom
