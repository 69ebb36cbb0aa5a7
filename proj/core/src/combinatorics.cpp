#include "multimom/combinatorics.hpp"

#include <mutex>

namespace multimom {

namespace {

const Integer& zero_cell() {
  static const Integer zero(0);
  return zero;
}

}  // namespace

const Integer& StirlingTable::at(unsigned p, unsigned k) const {
  if (k > p) return zero_cell();
  {
    std::shared_lock lock(mutex_);
    if (p < rows_.size()) return rows_[p][k];
  }
  ensure(p);
  std::shared_lock lock(mutex_);
  return rows_[p][k];
}

unsigned StirlingTable::max_p() const {
  std::shared_lock lock(mutex_);
  return static_cast<unsigned>(rows_.size()) - 1;
}

void StirlingTable::ensure(unsigned p) const {
  std::unique_lock lock(mutex_);
  if (rows_.empty()) rows_.push_back({Integer(1)});  // S2(0, 0) = 1
  for (unsigned n = static_cast<unsigned>(rows_.size()); n <= p; ++n) {
    const auto& prev = rows_[n - 1];
    std::vector<Integer> row(n + 1);
    row[0] = 0;
    row[n] = 1;
    for (unsigned k = 1; k < n; ++k) {
      row[k] = Integer(k) * prev[k] + prev[k - 1];
    }
    rows_.push_back(std::move(row));
  }
}

const Integer& BinomialTable::at(unsigned p, unsigned l) const {
  if (l > p) return zero_cell();
  {
    std::shared_lock lock(mutex_);
    if (p < rows_.size()) return rows_[p][l];
  }
  ensure(p);
  std::shared_lock lock(mutex_);
  return rows_[p][l];
}

unsigned BinomialTable::max_p() const {
  std::shared_lock lock(mutex_);
  return static_cast<unsigned>(rows_.size()) - 1;
}

void BinomialTable::ensure(unsigned p) const {
  std::unique_lock lock(mutex_);
  if (rows_.empty()) rows_.push_back({Integer(1)});
  for (unsigned n = static_cast<unsigned>(rows_.size()); n <= p; ++n) {
    const auto& prev = rows_[n - 1];
    std::vector<Integer> row(n + 1);
    row[0] = 1;
    row[n] = 1;
    for (unsigned l = 1; l < n; ++l) {
      row[l] = prev[l - 1] + prev[l];
    }
    rows_.push_back(std::move(row));
  }
}

const Integer& stirling2(unsigned p, unsigned k) {
  static const StirlingTable table(16);
  return table.at(p, k);
}

const Integer& binomial(unsigned p, unsigned l) {
  static const BinomialTable table(16);
  return table.at(p, l);
}

Integer binomial(const Integer& n, unsigned long k) {
  Integer result;
  mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), k);
  return result;
}

Integer falling_factorial(const Integer& m, unsigned long k) {
  Integer result(1);
  for (unsigned long i = 0; i < k && result != 0; ++i) {
    result *= m - Integer(i);
  }
  return result;
}

Rational falling_factorial(const Rational& m, unsigned long k) {
  Rational result(1);
  for (unsigned long i = 0; i < k && !result.is_zero(); ++i) {
    result *= m - Rational(Integer(i));
  }
  return result;
}

}  // namespace multimom
