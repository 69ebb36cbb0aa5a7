#include "multimom/sampler.hpp"

#include <cmath>
#include <stdexcept>

#include "multimom/numeric_moments.hpp"

namespace multimom {

namespace {

double unit_uniform(std::mt19937_64& rng) {
  // 53-bit mantissa from the top of the raw output.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t draw_binomial(std::mt19937_64& rng, std::uint64_t trials,
                            double prob) {
  std::uint64_t successes = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (unit_uniform(rng) < prob) ++successes;
  }
  return successes;
}

}  // namespace

MultinomialSampler::MultinomialSampler(const MultinomialParams& params) {
  if (!params.trials().fits_ulong_p()) {
    throw std::invalid_argument("trial count too large to sample");
  }
  trials_ = params.trials().get_ui();
  conditional_.resize(params.dim());
  Rational mass(1);
  for (unsigned i = 0; i < params.dim(); ++i) {
    conditional_[i] =
        mass.is_zero() ? 0.0 : (params.probs()[i] / mass).to_double();
    mass -= params.probs()[i];
  }
}

std::vector<std::uint64_t> MultinomialSampler::draw(
    std::mt19937_64& rng) const {
  std::vector<std::uint64_t> counts(conditional_.size());
  std::uint64_t remaining = trials_;
  for (std::size_t i = 0; i < conditional_.size(); ++i) {
    counts[i] = draw_binomial(rng, remaining, conditional_[i]);
    remaining -= counts[i];
  }
  return counts;
}

MonteCarloEstimate sample_moment(const MultinomialParams& params,
                                 const MultiIndex& p, MomentKind kind,
                                 std::uint64_t n, std::uint64_t seed) {
  if (p.size() != params.dim()) {
    throw std::invalid_argument(
        "multi-index has length " + std::to_string(p.size()) +
        " but the distribution has dimension " + std::to_string(params.dim()));
  }
  if (kind == MomentKind::factorial) {
    throw std::invalid_argument("sampling supports noncentral and central");
  }
  if (n < 2) {
    throw std::invalid_argument("need at least 2 samples for a standard error");
  }

  const MultinomialSampler sampler(params);
  const unsigned d = params.dim();

  std::vector<double> center(d, 0.0);
  if (kind == MomentKind::central) {
    const auto exact = mean(params);
    for (unsigned i = 0; i < d; ++i) center[i] = exact[i].to_double();
  }

  std::mt19937_64 rng(seed);

  // Welford running mean/variance keeps the accumulation stable and the
  // result a pure function of the draw sequence.
  double running_mean = 0.0;
  double running_m2 = 0.0;
  for (std::uint64_t s = 0; s < n; ++s) {
    const auto counts = sampler.draw(rng);
    double g = 1.0;
    for (unsigned i = 0; i < d; ++i) {
      const double base = static_cast<double>(counts[i]) - center[i];
      for (unsigned e = 0; e < p[i]; ++e) g *= base;
    }
    const double delta = g - running_mean;
    running_mean += delta / static_cast<double>(s + 1);
    running_m2 += delta * (g - running_mean);
  }

  MonteCarloEstimate estimate;
  estimate.mean = running_mean;
  estimate.standard_error =
      std::sqrt(running_m2 / static_cast<double>(n - 1) /
                static_cast<double>(n));
  estimate.n_samples = n;
  estimate.seed = seed;
  return estimate;
}

}  // namespace multimom
