#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "multimom/combinatorics.hpp"
#include "multimom/numeric_moments.hpp"
#include "multimom/oracle.hpp"

using namespace multimom;

namespace {

Rational r(long num, long den = 1) {
  return Rational(Integer(num), Integer(den));
}

}  // namespace

TEST_CASE("support range visits each lattice point exactly once") {
  for (unsigned m = 0; m <= 10; ++m) {
    for (unsigned d = 1; d <= 4; ++d) {
      SupportRange range(m, d);
      std::set<std::vector<unsigned>> seen;
      std::vector<unsigned> last;
      bool first = true;
      for (const auto& k : range) {
        unsigned sum = 0;
        for (unsigned v : k) sum += v;
        CHECK(sum <= m);
        CHECK(seen.insert(k).second);  // no repeats
        if (!first) CHECK(last < k);   // strictly increasing lexicographic
        last = k;
        first = false;
      }
      CAPTURE(m);
      CAPTURE(d);
      CHECK(range.cardinality() == Integer(seen.size()));
      CHECK(range.cardinality() == binomial(Integer(m) + d, d));
    }
  }
}

TEST_CASE("pmf sums to one over the support for the whole grid") {
  const auto& grid = default_grid();
  for (unsigned m = 0; m <= 8; ++m) {
    for (unsigned d = 1; d <= 3; ++d) {
      // Every d-tuple of grid components on the simplex.
      std::vector<std::vector<Rational>> xs;
      std::vector<Rational> current;
      auto extend = [&](auto&& self, unsigned depth) -> void {
        if (depth == d) {
          Rational sum(0);
          for (const auto& v : current) sum += v;
          if (sum <= r(1)) xs.push_back(current);
          return;
        }
        for (const Rational& g : grid) {
          current.push_back(g);
          self(self, depth + 1);
          current.pop_back();
        }
      };
      extend(extend, 0);

      for (const auto& x : xs) {
        MultinomialParams params{Integer(m), x};
        Rational total(0);
        for (const auto& k : SupportRange(m, d)) {
          total += pmf(params, MultiIndex(k));
        }
        CHECK(total == r(1));
      }
    }
  }
}

TEST_CASE("oracle worked examples") {
  MultinomialParams binom3(Integer(3), {r(1, 2)});
  CHECK(oracle_moment(binom3, MultiIndex{2}, MomentKind::noncentral) == r(3));

  MultinomialParams small(Integer(4), {r(1, 3), r(1, 5)});
  CHECK(oracle_moment(small, MultiIndex{1, 1}, MomentKind::central) ==
        central_moment(small, MultiIndex{1, 1}));
  CHECK(oracle_moment(small, MultiIndex{1, 0}, MomentKind::central) == r(0));

  MultinomialParams quarter(Integer(4), {r(1, 4), r(1, 4)});
  CHECK(oracle_moment(quarter, MultiIndex{1, 1}, MomentKind::factorial) ==
        r(3, 4));
}

TEST_CASE("oracle refuses oversized enumerations") {
  MultinomialParams huge(Integer(200000000), {r(1, 4), r(1, 4)});
  CHECK_THROWS_AS(oracle_moment(huge, MultiIndex{1, 1}, MomentKind::noncentral),
                  EnumerationLimitError);
  try {
    oracle_moment(huge, MultiIndex{1, 1}, MomentKind::noncentral);
  } catch (const EnumerationLimitError& e) {
    CHECK(e.points() > enumeration_limit());
  }
}

TEST_CASE("verify_sweep worked examples") {
  auto reports = verify_sweep(2, {1, 2}, 3);
  CHECK_FALSE(reports.empty());
  CHECK(all_pass(reports));

  // m = 0: everything of positive order vanishes on both sides.
  auto zero_reports = verify_sweep(0, {1}, 2);
  CHECK(all_pass(zero_reports));
  for (const auto& rep : zero_reports) {
    if (rep.p.order() > 0 && rep.kind != MomentKind::central) {
      CHECK(rep.formula_value == r(0));
    }
  }

  CHECK(verify_sweep(3, {}, 2).empty());
}

TEST_CASE("all_pass flags a failing report") {
  MultinomialParams ps(Integer(1), {r(1, 2)});
  OracleReport good{ps, MultiIndex{1}, MomentKind::noncentral, r(1, 2),
                    r(1, 2), true};
  OracleReport bad{ps, MultiIndex{1}, MomentKind::noncentral, r(1, 2),
                   r(1, 3), false};
  CHECK(all_pass({good}));
  CHECK_FALSE(all_pass({good, bad}));
}

TEST_CASE("report serializes to one JSON line") {
  MultinomialParams ps(Integer(3), {r(1, 4), r(1, 3)});
  OracleReport report{ps, MultiIndex{2, 0}, MomentKind::central, r(15, 8),
                      r(15, 8), true};
  CHECK(to_json_line(report) ==
        R"({"m":3,"x":["1/4","1/3"],"p":[2,0],"mode":"central",)"
        R"("formula":"15/8","oracle":"15/8","pass":true})");

  OracleReport failing{ps, MultiIndex{1, 1}, MomentKind::noncentral, r(1, 2),
                       r(1, 3), false};
  CHECK(to_json_line(failing) ==
        R"({"m":3,"x":["1/4","1/3"],"p":[1,1],"mode":"noncentral",)"
        R"("formula":"1/2","oracle":"1/3","pass":false})");
}

TEST_CASE("sweep reports cover every mode and stay in generation order") {
  auto reports = verify_sweep(1, {1}, 1);
  // m in {0,1}, five grid singletons, p in {(0),(1)}, three kinds.
  CHECK(reports.size() == 2 * 5 * 2 * 3);
  for (std::size_t i = 0; i + 2 < reports.size(); i += 3) {
    CHECK(reports[i].kind == MomentKind::noncentral);
    CHECK(reports[i + 1].kind == MomentKind::central);
    CHECK(reports[i + 2].kind == MomentKind::factorial);
  }
}
