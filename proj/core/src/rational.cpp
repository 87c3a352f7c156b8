#include "primform/rational.hpp"

#include <cctype>
#include <utility>

#include "primform/error.hpp"

namespace primform {

Rational::Rational(long num, long den) {
  if (den == 0) throw ContractViolation("Rational: zero denominator");
  value_ = mpq_class(mpz_class(num), mpz_class(den));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");

  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);

  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw ParseError("malformed rational '" + std::string(text) + "'");

  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0) throw ParseError("rational with zero denominator '" + std::string(text) + "'");
  mpq_class q(zn, zd);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::int64_t Rational::denominator_i64() const {
  if (!value_.get_den().fits_slong_p()) throw ContractViolation("denominator does not fit in 64 bits");
  return value_.get_den().get_si();
}

std::int64_t Rational::numerator_i64() const {
  if (!value_.get_num().fits_slong_p()) throw ContractViolation("numerator does not fit in 64 bits");
  return value_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ContractViolation("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

Rational factorial(unsigned n) {
  Rational out(1);
  for (unsigned i = 2; i <= n; ++i) out *= Rational(static_cast<long>(i));
  return out;
}

}  // namespace primform
