#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multimom/pattern.hpp"
#include "multimom/rational.hpp"

namespace multimom {

/// Degrees of the probability variables x_1..x_r, one per pattern coordinate.
using Monomial = std::vector<unsigned>;

/// How the trial-count variable m is graded in a polynomial term.
enum class MBasis {
  falling,   ///< m^(k) = m(m-1)...(m-k+1)
  ordinary,  ///< plain power m^k
};

/// Term key ordered by m-degree, then lexicographically by monomial —
/// the canonical term order of every rendering and serialization.
struct TermKey {
  unsigned m_degree = 0;
  Monomial monomial;

  auto operator<=>(const TermKey&) const = default;
};

/// Sparse polynomial in m and the pattern's probability variables with
/// arbitrary-precision integer coefficients. Zero coefficients are never
/// stored; iteration order over terms() is canonical. The template
/// parameter pins the m-basis so falling- and ordinary-basis polynomials
/// cannot be mixed by accident.
template <MBasis Basis>
class Poly {
 public:
  Poly(Pattern pattern, bool central)
      : pattern_(std::move(pattern)), central_(central) {}

  static constexpr MBasis basis() { return Basis; }
  const Pattern& pattern() const { return pattern_; }
  bool central() const { return central_; }

  const std::map<TermKey, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Merges `coeff` into the (m_degree, monomial) cell, dropping the cell
  /// if the result is zero. The monomial length must equal the arity.
  void add(unsigned m_degree, Monomial monomial, const Integer& coeff) {
    if (monomial.size() != pattern_.arity()) {
      throw std::invalid_argument(
          "monomial length " + std::to_string(monomial.size()) +
          " does not match pattern arity " + std::to_string(pattern_.arity()));
    }
    if (coeff == 0) return;
    TermKey key{m_degree, std::move(monomial)};
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool operator==(const Poly&) const = default;

 private:
  Pattern pattern_;
  bool central_;
  std::map<TermKey, Integer> terms_;
};

/// Symbolic moment in the falling-factorial basis: each term is
/// coeff * m^(m_degree) * prod x_i^monomial[i].
using MomentPoly = Poly<MBasis::falling>;

/// The same shape with ordinary powers of m.
using OrdinaryPoly = Poly<MBasis::ordinary>;

}  // namespace multimom
