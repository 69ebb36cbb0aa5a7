#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multimom/moment_poly.hpp"
#include "multimom/params.hpp"
#include "multimom/pattern.hpp"
#include "multimom/rational.hpp"

namespace multimom {

/// Closed-form raw mixed moment E[prod xi_{j_i}^{p_i}] for distinct
/// coordinates j_1..j_r as a polynomial in m (falling basis) and x_{j_i}.
/// Every coefficient is a positive integer.
MomentPoly symbolic_noncentral(const Pattern& pattern);

/// Closed-form central mixed moment E[prod (xi_{j_i} - m x_{j_i})^{p_i}],
/// fully combined: the nested binomial/Stirling sums are expanded, like
/// terms merged, and ordinary powers of m folded back into the falling
/// basis. The order-1 pattern yields the zero polynomial.
MomentPoly symbolic_central(const Pattern& pattern);

/// Basis change m^(k) -> sum of ordinary powers. The result is the same
/// function of (m, x); to_falling inverts it exactly.
OrdinaryPoly to_ordinary(const MomentPoly& poly);

/// Inverse basis change via m^e = sum_k S2(e, k) m^(k).
MomentPoly to_falling(const OrdinaryPoly& poly);

/// Substitutes m = params.trials() and x_i = params.probs()[coords[i]].
/// coords are zero-based, must be distinct, in range, and match the
/// pattern's arity; violations throw std::invalid_argument.
Rational evaluate(const MomentPoly& poly, const MultinomialParams& params,
                  std::span<const unsigned> coords);
Rational evaluate(const OrdinaryPoly& poly, const MultinomialParams& params,
                  std::span<const unsigned> coords);

/// One (pattern, polynomial) entry per integer partition of every total
/// order 1..max_order, in the deterministic order of patterns_up_to.
std::vector<std::pair<Pattern, MomentPoly>> catalog(unsigned max_order,
                                                    bool central);

/// A known misprint in the widely circulated printed table of order-8 raw
/// moment formulas, with the corrected reading this library produces.
struct TableErratum {
  Pattern pattern;
  std::string printed;    ///< the term as it appears in print
  std::string corrected;  ///< the term the Stirling expansion yields
};

/// The three known misprints, in table order.
std::span<const TableErratum> reference_table_errata();

}  // namespace multimom
