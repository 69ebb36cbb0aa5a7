#include "multimom/symbolic_moments.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "multimom/combinatorics.hpp"
#include "multimom/detail/odometer.hpp"

namespace multimom {

namespace {

/// Coefficients c_0..c_k of the expansion m^(k) = sum_j c_j m^j, built by
/// multiplying out m(m-1)...(m-k+1) one factor at a time.
std::vector<Integer> falling_power_as_ordinary(unsigned k) {
  std::vector<Integer> coeffs{Integer(1)};
  coeffs.reserve(k + 1);
  for (unsigned i = 0; i < k; ++i) {
    coeffs.emplace_back(0);
    // Multiply by (m - i), highest degree first so each cell is final.
    for (std::size_t j = coeffs.size() - 1; j > 0; --j) {
      coeffs[j] = coeffs[j - 1] - Integer(i) * coeffs[j];
    }
    coeffs[0] *= -Integer(i);
  }
  return coeffs;
}

}  // namespace

MomentPoly symbolic_noncentral(const Pattern& pattern) {
  MomentPoly poly(pattern, /*central=*/false);
  detail::for_each_box_point(
      std::span(pattern.exponents()), [&](const std::vector<unsigned>& k) {
        Integer coeff(1);
        unsigned total = 0;
        for (std::size_t i = 0; i < k.size(); ++i) {
          coeff *= stirling2(pattern[i], k[i]);
          if (coeff == 0) return;
          total += k[i];
        }
        poly.add(total, k, coeff);
      });
  return poly;
}

MomentPoly symbolic_central(const Pattern& pattern) {
  // Accumulate in the ordinary basis, where the centering factor
  // (-m)^(sum (p_i - l_i)) is a plain degree shift, then fold back.
  OrdinaryPoly accum(pattern, /*central=*/true);
  const auto& p = pattern.exponents();
  detail::for_each_box_point(
      std::span(p), [&](const std::vector<unsigned>& l) {
        Integer binom_product(1);
        unsigned shift = 0;
        for (std::size_t i = 0; i < l.size(); ++i) {
          binom_product *= binomial(p[i], l[i]);
          shift += p[i] - l[i];
        }
        if (shift % 2 == 1) binom_product = -binom_product;
        detail::for_each_box_point(
            std::span(l), [&](const std::vector<unsigned>& k) {
              Integer coeff = binom_product;
              unsigned total = 0;
              Monomial monomial(k.size());
              for (std::size_t i = 0; i < k.size(); ++i) {
                coeff *= stirling2(l[i], k[i]);
                if (coeff == 0) return;
                total += k[i];
                monomial[i] = p[i] - l[i] + k[i];
              }
              const auto expansion = falling_power_as_ordinary(total);
              for (unsigned j = 0; j <= total; ++j) {
                accum.add(shift + j, monomial, coeff * expansion[j]);
              }
            });
      });
  return to_falling(accum);
}

OrdinaryPoly to_ordinary(const MomentPoly& poly) {
  OrdinaryPoly out(poly.pattern(), poly.central());
  for (const auto& [key, coeff] : poly.terms()) {
    const auto expansion = falling_power_as_ordinary(key.m_degree);
    for (unsigned j = 0; j <= key.m_degree; ++j) {
      out.add(j, key.monomial, coeff * expansion[j]);
    }
  }
  return out;
}

MomentPoly to_falling(const OrdinaryPoly& poly) {
  MomentPoly out(poly.pattern(), poly.central());
  for (const auto& [key, coeff] : poly.terms()) {
    for (unsigned j = 0; j <= key.m_degree; ++j) {
      out.add(j, key.monomial, coeff * stirling2(key.m_degree, j));
    }
  }
  return out;
}

namespace {

std::vector<Rational> bound_coordinates(const Pattern& pattern,
                                        const MultinomialParams& params,
                                        std::span<const unsigned> coords) {
  if (coords.size() != pattern.arity()) {
    throw std::invalid_argument("coordinate list length " +
                                std::to_string(coords.size()) +
                                " does not match pattern arity " +
                                std::to_string(pattern.arity()));
  }
  std::vector<Rational> values;
  values.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= params.dim()) {
      throw std::invalid_argument("coordinate index " +
                                  std::to_string(coords[i]) +
                                  " out of range for dimension " +
                                  std::to_string(params.dim()));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (coords[j] == coords[i]) {
        throw std::invalid_argument("coordinate index " +
                                    std::to_string(coords[i]) +
                                    " used more than once");
      }
    }
    values.push_back(params.probs()[coords[i]]);
  }
  return values;
}

template <MBasis Basis>
Rational evaluate_impl(const Poly<Basis>& poly, const MultinomialParams& params,
                       std::span<const unsigned> coords) {
  const auto xs = bound_coordinates(poly.pattern(), params, coords);
  Rational result(0);
  for (const auto& [key, coeff] : poly.terms()) {
    Rational term(Basis == MBasis::falling
                      ? Rational(falling_factorial(params.trials(), key.m_degree))
                      : Rational(ipow(params.trials(), key.m_degree)));
    term *= Rational(coeff);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      term *= pow(xs[i], static_cast<unsigned long>(key.monomial[i]));
    }
    result += term;
  }
  return result;
}

}  // namespace

Rational evaluate(const MomentPoly& poly, const MultinomialParams& params,
                  std::span<const unsigned> coords) {
  return evaluate_impl(poly, params, coords);
}

Rational evaluate(const OrdinaryPoly& poly, const MultinomialParams& params,
                  std::span<const unsigned> coords) {
  return evaluate_impl(poly, params, coords);
}

std::vector<std::pair<Pattern, MomentPoly>> catalog(unsigned max_order,
                                                    bool central) {
  std::vector<std::pair<Pattern, MomentPoly>> out;
  for (Pattern& pattern : patterns_up_to(max_order)) {
    MomentPoly poly =
        central ? symbolic_central(pattern) : symbolic_noncentral(pattern);
    out.emplace_back(std::move(pattern), std::move(poly));
  }
  return out;
}

std::span<const TableErratum> reference_table_errata() {
  static const std::array<TableErratum, 3> errata{{
      {Pattern{8},
       "966 m^(3) x2^2 inside E[xi1^8]",
       "966 m^(3) x1^2 (the pattern has a single coordinate)"},
      {Pattern{7, 1},
       "leading term m inside E[xi1^7 xi2]",
       "m^(2) (every term carries one falling-factorial step per coordinate)"},
      {Pattern{5, 3},
       "x4^4 in the m^(6) bracket of E[xi1^5 xi2^3]",
       "x1^4 (the pattern has two coordinates)"},
  }};
  return errata;
}

}  // namespace multimom
