#pragma once

#include <deque>
#include <shared_mutex>
#include <vector>

#include "multimom/rational.hpp"

namespace multimom {

/// Memoized triangular table of Stirling numbers of the second kind,
/// entries(p, k) = S2(p, k), built from the recurrence
/// S2(p, k) = k * S2(p-1, k) + S2(p-1, k-1).
///
/// Rows grow on demand. Growth is internally synchronized, concurrent reads
/// are safe, and existing cells never move, so returned references remain
/// valid for the lifetime of the table.
class StirlingTable {
 public:
  StirlingTable() { ensure(0); }
  explicit StirlingTable(unsigned max_p) { ensure(max_p); }

  /// S2(p, k): partitions of a p-element set into k non-empty blocks.
  /// Returns 0 when k > p, so callers can scan rectangular ranges freely.
  const Integer& at(unsigned p, unsigned k) const;

  unsigned max_p() const;

 private:
  void ensure(unsigned p) const;

  mutable std::shared_mutex mutex_;
  mutable std::deque<std::vector<Integer>> rows_;  // rows_[p][k], k <= p
};

/// Memoized Pascal triangle with the same growth and thread-safety
/// contract as StirlingTable.
class BinomialTable {
 public:
  BinomialTable() { ensure(0); }
  explicit BinomialTable(unsigned max_p) { ensure(max_p); }

  /// C(p, l); 0 when l > p.
  const Integer& at(unsigned p, unsigned l) const;

  unsigned max_p() const;

 private:
  void ensure(unsigned p) const;

  mutable std::shared_mutex mutex_;
  mutable std::deque<std::vector<Integer>> rows_;
};

/// S2(p, k) from a process-wide memoized table; 0 when k > p.
const Integer& stirling2(unsigned p, unsigned k);

/// C(p, l) from a process-wide memoized table; 0 when l > p.
const Integer& binomial(unsigned p, unsigned l);

/// C(n, k) for arbitrary-precision n (direct multiplicative form, no table).
Integer binomial(const Integer& n, unsigned long k);

/// Falling factorial m(m-1)...(m-k+1); 1 when k == 0. Vanishes for
/// integer m with 0 <= m < k, since the factor (m - m) appears.
Integer falling_factorial(const Integer& m, unsigned long k);

/// Same product over exact rationals, e.g. (1/2)(−1/2) for m = 1/2, k = 2.
Rational falling_factorial(const Rational& m, unsigned long k);

}  // namespace multimom
