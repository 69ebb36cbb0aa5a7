#pragma once

#include <vector>

#include "multimom/multi_index.hpp"
#include "multimom/params.hpp"
#include "multimom/rational.hpp"

namespace multimom {

/// Probability of observing exactly the counts k: the multinomial mass
/// m! / ((m - sum k)! prod k_i!) * (1 - sum x)^(m - sum k) * prod x_i^k_i,
/// computed exactly. Returns 0 outside the support (sum k > m).
/// Throws std::invalid_argument when k's length differs from dim().
Rational pmf(const MultinomialParams& params, const MultiIndex& k);

/// E[prod_i falling_factorial(count_i, k_i)] = m^(sum k) * prod x_i^k_i.
Rational factorial_moment(const MultinomialParams& params, const MultiIndex& k);

/// Raw mixed moment E[prod_i count_i^p_i], the Stirling-weighted sum of
/// factorial moments over all k <= p componentwise.
Rational noncentral_moment(const MultinomialParams& params, const MultiIndex& p);

/// Mixed moment about the mean, E[prod_i (count_i - m x_i)^p_i], via the
/// nested binomial/Stirling expansion evaluated term by term.
Rational central_moment(const MultinomialParams& params, const MultiIndex& p);

/// Coordinate means (m x_1, ..., m x_d).
std::vector<Rational> mean(const MultinomialParams& params);

}  // namespace multimom
