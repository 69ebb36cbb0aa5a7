#include "multimom/oracle.hpp"

#include <utility>

#include <json.hpp>

#include "multimom/combinatorics.hpp"
#include "multimom/detail/odometer.hpp"
#include "multimom/numeric_moments.hpp"

namespace multimom {

std::string to_string(MomentKind kind) {
  switch (kind) {
    case MomentKind::noncentral: return "noncentral";
    case MomentKind::central: return "central";
    case MomentKind::factorial: return "factorial";
  }
  return "unknown";
}

Integer SupportRange::cardinality() const {
  return binomial(Integer(trials_) + dim_, dim_);
}

SupportRange::iterator& SupportRange::iterator::operator++() {
  // Next point in lexicographic order: bump the rightmost coordinate whose
  // prefix still has budget, zeroing everything to its right.
  unsigned long prefix = sum_;
  for (std::size_t j = point_.size(); j > 0; --j) {
    if (prefix + 1 <= trials_) {
      ++point_[j - 1];
      for (std::size_t t = j; t < point_.size(); ++t) point_[t] = 0;
      sum_ = prefix + 1;
      return *this;
    }
    prefix -= point_[j - 1];
  }
  done_ = true;
  return *this;
}

const Integer& enumeration_limit() {
  static const Integer limit(10000000);
  return limit;
}

namespace {

Rational observable(const std::vector<unsigned>& k, const MultiIndex& p,
                    MomentKind kind, const std::vector<Rational>& means) {
  switch (kind) {
    case MomentKind::noncentral: {
      Integer value(1);
      for (std::size_t i = 0; i < k.size(); ++i) {
        value *= ipow(Integer(k[i]), p[i]);
      }
      return Rational(std::move(value));
    }
    case MomentKind::central: {
      Rational value(1);
      for (std::size_t i = 0; i < k.size(); ++i) {
        value *= pow(Rational(Integer(k[i])) - means[i],
                     static_cast<unsigned long>(p[i]));
      }
      return value;
    }
    case MomentKind::factorial: {
      Integer value(1);
      for (std::size_t i = 0; i < k.size(); ++i) {
        value *= falling_factorial(Integer(k[i]), p[i]);
      }
      return Rational(std::move(value));
    }
  }
  throw std::logic_error("unreachable moment kind");
}

}  // namespace

Rational oracle_moment(const MultinomialParams& params, const MultiIndex& p,
                       MomentKind kind) {
  if (p.size() != params.dim()) {
    throw std::invalid_argument(
        "multi-index has length " + std::to_string(p.size()) +
        " but the distribution has dimension " + std::to_string(params.dim()));
  }
  Integer points = binomial(params.trials() + params.dim(), params.dim());
  if (points > enumeration_limit()) {
    throw EnumerationLimitError(std::move(points), enumeration_limit());
  }

  const auto means = mean(params);
  SupportRange support(params.trials().get_ui(), params.dim());
  Rational total(0);
  for (const auto& k : support) {
    Rational g = observable(k, p, kind, means);
    if (g.is_zero()) continue;
    total += g * pmf(params, MultiIndex(k));
  }
  return total;
}

std::string to_json_line(const OracleReport& report) {
  nlohmann::ordered_json doc;
  if (report.params.trials().fits_ulong_p()) {
    doc["m"] = report.params.trials().get_ui();
  } else {
    doc["m"] = report.params.trials().get_str();
  }
  doc["x"] = nlohmann::ordered_json::array();
  for (const Rational& x : report.params.probs()) doc["x"].push_back(x.str());
  doc["p"] = report.p.exponents();
  doc["mode"] = to_string(report.kind);
  doc["formula"] = report.formula_value.str();
  doc["oracle"] = report.oracle_value.str();
  doc["pass"] = report.pass;
  return doc.dump();
}

bool all_pass(const std::vector<OracleReport>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

const std::vector<Rational>& default_grid() {
  static const std::vector<Rational> grid{
      Rational(0), Rational(Integer(1), Integer(6)),
      Rational(Integer(1), Integer(4)), Rational(Integer(1), Integer(3)),
      Rational(Integer(1), Integer(2))};
  return grid;
}

namespace {

/// Every d-tuple over `grid` whose components sum to at most 1, in
/// grid-index lexicographic order.
std::vector<std::vector<Rational>> grid_vectors(
    unsigned d, const std::vector<Rational>& grid) {
  std::vector<std::vector<Rational>> out;
  std::vector<unsigned> bounds(d, static_cast<unsigned>(grid.size()) - 1);
  detail::for_each_box_point(
      std::span<const unsigned>(bounds), [&](const std::vector<unsigned>& pick) {
        Rational sum(0);
        for (unsigned g : pick) sum += grid[g];
        if (sum > Rational(1)) return;
        std::vector<Rational> x;
        x.reserve(d);
        for (unsigned g : pick) x.push_back(grid[g]);
        out.push_back(std::move(x));
      });
  return out;
}

}  // namespace

std::vector<OracleReport> verify_sweep(unsigned max_m,
                                       const std::vector<unsigned>& dims,
                                       unsigned max_order,
                                       const std::vector<Rational>& grid) {
  if (grid.empty()) throw std::invalid_argument("probability grid is empty");

  static constexpr MomentKind kKinds[] = {
      MomentKind::noncentral, MomentKind::central, MomentKind::factorial};

  std::vector<OracleReport> reports;
  for (unsigned m = 0; m <= max_m; ++m) {
    for (unsigned d : dims) {
      if (d == 0) throw std::invalid_argument("dimension must be positive");
      Integer points = binomial(Integer(m) + d, static_cast<unsigned long>(d));
      if (points > enumeration_limit()) {
        throw EnumerationLimitError(std::move(points), enumeration_limit());
      }

      // Exponent vectors of total order <= max_order share the lattice
      // shape of a support range.
      std::vector<MultiIndex> exponents;
      for (const auto& p : SupportRange(max_order, d)) {
        exponents.emplace_back(p);
      }

      for (const auto& x : grid_vectors(d, grid)) {
        MultinomialParams params{Integer(m), x};

        // The pmf table is shared by every p and mode of this instance.
        std::vector<std::pair<std::vector<unsigned>, Rational>> masses;
        for (const auto& k : SupportRange(m, d)) {
          masses.emplace_back(k, pmf(params, MultiIndex(k)));
        }
        const auto means = mean(params);

        for (const MultiIndex& p : exponents) {
          for (MomentKind kind : kKinds) {
            Rational oracle(0);
            for (const auto& [k, mass] : masses) {
              Rational g = observable(k, p, kind, means);
              if (!g.is_zero()) oracle += g * mass;
            }
            Rational formula = kind == MomentKind::noncentral
                                   ? noncentral_moment(params, p)
                               : kind == MomentKind::central
                                   ? central_moment(params, p)
                                   : factorial_moment(params, p);
            bool pass = formula == oracle;
            reports.push_back(OracleReport{params, p, kind, std::move(formula),
                                           std::move(oracle), pass});
          }
        }
      }
    }
  }
  return reports;
}

}  // namespace multimom
