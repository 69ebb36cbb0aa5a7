#include "multimom/numeric_moments.hpp"

#include <stdexcept>
#include <string>

#include "multimom/combinatorics.hpp"
#include "multimom/detail/odometer.hpp"

namespace multimom {

namespace {

void require_dim(const MultinomialParams& params, const MultiIndex& idx) {
  if (idx.size() != params.dim()) {
    throw std::invalid_argument(
        "multi-index has length " + std::to_string(idx.size()) +
        " but the distribution has dimension " + std::to_string(params.dim()));
  }
}

}  // namespace

Rational pmf(const MultinomialParams& params, const MultiIndex& k) {
  require_dim(params, k);
  const Integer& m = params.trials();
  Integer total(k.order());
  if (total > m) return Rational(0);

  // m! / (m - sum k)! = falling factorial of m, and the k_i! divide it
  // into the multinomial coefficient.
  Integer coeff = falling_factorial(m, k.order());
  Integer denom(1);
  for (unsigned ki : k) {
    for (unsigned j = 2; j <= ki; ++j) denom *= j;
  }

  Rational result(std::move(coeff), std::move(denom));
  result *= pow(params.leftover(), m - total);
  for (unsigned i = 0; i < k.size(); ++i) {
    result *= pow(params.probs()[i], static_cast<unsigned long>(k[i]));
  }
  return result;
}

Rational factorial_moment(const MultinomialParams& params, const MultiIndex& k) {
  require_dim(params, k);
  Rational result(falling_factorial(params.trials(), k.order()));
  for (unsigned i = 0; i < k.size() && !result.is_zero(); ++i) {
    result *= pow(params.probs()[i], static_cast<unsigned long>(k[i]));
  }
  return result;
}

Rational noncentral_moment(const MultinomialParams& params, const MultiIndex& p) {
  require_dim(params, p);
  Rational result(0);
  detail::for_each_box_point(
      std::span(p.exponents()), [&](const std::vector<unsigned>& k) {
        Integer stirling_product(1);
        unsigned total = 0;
        for (unsigned i = 0; i < k.size(); ++i) {
          stirling_product *= stirling2(p[i], k[i]);
          if (stirling_product == 0) return;
          total += k[i];
        }
        Rational term(falling_factorial(params.trials(), total) *
                      stirling_product);
        for (unsigned i = 0; i < k.size(); ++i) {
          term *= pow(params.probs()[i], static_cast<unsigned long>(k[i]));
        }
        result += term;
      });
  return result;
}

Rational central_moment(const MultinomialParams& params, const MultiIndex& p) {
  require_dim(params, p);
  const Integer& m = params.trials();
  Rational result(0);
  detail::for_each_box_point(
      std::span(p.exponents()), [&](const std::vector<unsigned>& l) {
        Integer binom_product(1);
        unsigned sign_exp = 0;
        for (unsigned i = 0; i < l.size(); ++i) {
          binom_product *= binomial(p[i], l[i]);
          sign_exp += p[i] - l[i];
        }
        Integer centering = ipow(-m, sign_exp);
        detail::for_each_box_point(
            std::span(l), [&](const std::vector<unsigned>& k) {
              Integer stirling_product(1);
              unsigned total = 0;
              for (unsigned i = 0; i < k.size(); ++i) {
                stirling_product *= stirling2(l[i], k[i]);
                if (stirling_product == 0) return;
                total += k[i];
              }
              Rational term(falling_factorial(m, total) * centering *
                            binom_product * stirling_product);
              for (unsigned i = 0; i < k.size(); ++i) {
                term *= pow(params.probs()[i],
                            static_cast<unsigned long>(p[i] - l[i] + k[i]));
              }
              result += term;
            });
      });
  return result;
}

std::vector<Rational> mean(const MultinomialParams& params) {
  std::vector<Rational> result;
  result.reserve(params.dim());
  Rational m(params.trials());
  for (const Rational& x : params.probs()) result.push_back(m * x);
  return result;
}

}  // namespace multimom
