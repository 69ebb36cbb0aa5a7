#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "multimom/multi_index.hpp"
#include "multimom/oracle.hpp"
#include "multimom/params.hpp"

namespace multimom {

/// Draws whole multinomial count vectors by sequential conditional
/// binomials: coordinate i is Binomial(trials left, x_i / mass left).
/// Uniforms come from raw std::mt19937_64 outputs ((x >> 11) * 2^-53), so
/// draws are bit-reproducible on every conforming standard library.
class MultinomialSampler {
 public:
  /// Throws std::invalid_argument when the trial count does not fit in
  /// 64 bits (such draws could not be materialized anyway).
  explicit MultinomialSampler(const MultinomialParams& params);

  /// One count vector of length dim().
  std::vector<std::uint64_t> draw(std::mt19937_64& rng) const;

  unsigned dim() const { return static_cast<unsigned>(conditional_.size()); }
  std::uint64_t trials() const { return trials_; }

 private:
  std::uint64_t trials_;
  std::vector<double> conditional_;
};

/// Seeded Monte Carlo estimate of a moment.
struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;  ///< sample stddev / sqrt(n)
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
};

/// Empirical mean of the noncentral or central observable over n
/// independent draws. Central observables subtract the exact mean m*x
/// (converted to double once), never the sample mean. Deterministic for a
/// fixed seed.
///
/// Requires n >= 2 (the standard error needs it) and kind in
/// {noncentral, central}; violations throw std::invalid_argument.
MonteCarloEstimate sample_moment(const MultinomialParams& params,
                                 const MultiIndex& p, MomentKind kind,
                                 std::uint64_t n, std::uint64_t seed);

}  // namespace multimom
