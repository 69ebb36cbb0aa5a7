#include "multimom/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace multimom {

Integer ipow(const Integer& base, unsigned long exp) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
  return result;
}

Rational::Rational(Integer num, Integer den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(std::move(num), std::move(den));
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return all_digits(s);
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  std::string_view num_part = text;
  std::string_view den_part;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
    if (!all_digits(den_part)) return std::nullopt;
  }
  if (!is_decimal_integer(num_part)) return std::nullopt;

  Integer num(std::string(num_part), 10);
  Integer den = den_part.empty() ? Integer(1) : Integer(std::string(den_part), 10);
  if (den == 0) return std::nullopt;
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::string Rational::decimal(unsigned digits) const {
  // Round |num|*10^digits / den half away from zero, then re-insert the point.
  Integer scale = ipow(Integer(10), digits);
  Integer scaled_num = abs(num()) * scale;
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(),
              den().get_mpz_t());
  if (r * 2 >= den()) q += 1;

  std::string body = q.get_str();
  std::string sign = (num() < 0 && q != 0) ? "-" : "";
  if (digits == 0) return sign + body;
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return sign + body;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pow(const Rational& base, unsigned long exp) {
  if (exp == 0) return Rational(1);
  // gcd(n, d) = 1 implies gcd(n^e, d^e) = 1, so the result is canonical.
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exp);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exp);
  return Rational(std::move(n), std::move(d));
}

Rational pow(const Rational& base, const Integer& exp) {
  if (exp < 0) throw std::invalid_argument("negative rational exponent");
  if (exp == 0) return Rational(1);
  if (base.is_zero()) return Rational(0);
  if (base == Rational(1)) return Rational(1);
  if (!exp.fits_ulong_p()) {
    throw std::overflow_error("rational power exponent too large: " +
                              exp.get_str());
  }
  return pow(base, exp.get_ui());
}

}  // namespace multimom
