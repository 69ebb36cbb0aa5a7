#pragma once

#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "multimom/multi_index.hpp"
#include "multimom/params.hpp"
#include "multimom/rational.hpp"

namespace multimom {

/// Which expectation a moment engine or oracle computes.
enum class MomentKind { noncentral, central, factorial };

std::string to_string(MomentKind kind);

/// The discrete simplex {k in N_0^d : sum k <= m}, iterable in
/// lexicographic order (last coordinate fastest). Every lattice point is
/// visited exactly once; the point count is binomial(m + d, d).
class SupportRange {
 public:
  SupportRange(unsigned long trials, unsigned dim)
      : trials_(trials), dim_(dim) {}

  Integer cardinality() const;

  struct sentinel {};

  class iterator {
   public:
    using value_type = std::vector<unsigned>;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(unsigned long trials, unsigned dim)
        : trials_(trials), point_(dim, 0u) {}

    const std::vector<unsigned>& operator*() const { return point_; }
    const std::vector<unsigned>* operator->() const { return &point_; }

    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, sentinel) { return it.done_; }

   private:
    unsigned long trials_;
    unsigned long sum_ = 0;
    bool done_ = false;
    std::vector<unsigned> point_;
  };

  iterator begin() const { return iterator(trials_, dim_); }
  sentinel end() const { return {}; }

 private:
  unsigned long trials_;
  unsigned dim_;
};

/// Thrown when an exact enumeration would touch more lattice points than
/// the configured ceiling; callers should fall back to sampling.
class EnumerationLimitError : public std::runtime_error {
 public:
  EnumerationLimitError(Integer points, const Integer& limit)
      : std::runtime_error("support has " + points.get_str() +
                           " lattice points, over the enumeration limit of " +
                           limit.get_str()),
        points_(std::move(points)) {}

  const Integer& points() const { return points_; }

 private:
  Integer points_;
};

/// Largest support size oracle_moment will enumerate (10^7 points).
const Integer& enumeration_limit();

/// Definition-level moment: sum over the whole support of g(k) * pmf(k),
/// where g is the plain power product, the centered power product, or the
/// falling-factorial product according to `kind`. Exact; independent of
/// the closed-form engines except for the pmf itself.
/// Throws EnumerationLimitError when the support exceeds the limit.
Rational oracle_moment(const MultinomialParams& params, const MultiIndex& p,
                       MomentKind kind);

/// Outcome of one formula-vs-oracle comparison.
struct OracleReport {
  MultinomialParams params;
  MultiIndex p;
  MomentKind kind;
  Rational formula_value;
  Rational oracle_value;
  bool pass = false;  // formula_value == oracle_value, structurally
};

/// One-line JSON rendering:
/// {"m":3,"x":["1/4","1/4"],"p":[2,0],"mode":"central",
///  "formula":"15/8","oracle":"15/8","pass":true}
std::string to_json_line(const OracleReport& report);

bool all_pass(const std::vector<OracleReport>& reports);

/// The probability components every sweep draws from unless told otherwise:
/// {0, 1/6, 1/4, 1/3, 1/2}.
const std::vector<Rational>& default_grid();

/// Cross-checks the closed-form engines against oracle_moment over the
/// cartesian sweep of m in {0..max_m}, each dimension in dims, every
/// probability vector with components from `grid` summing to at most 1,
/// every p with total order <= max_order, and all three moment kinds.
/// Reports come back in that deterministic generation order.
std::vector<OracleReport> verify_sweep(
    unsigned max_m, const std::vector<unsigned>& dims, unsigned max_order,
    const std::vector<Rational>& grid = default_grid());

}  // namespace multimom
