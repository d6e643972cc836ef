#include "hyperlab/numerics/rational.hpp"

#include <string>

#include "hyperlab/error.hpp"

namespace hyperlab {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, std::to_string(num) + "/0");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  if (value_.get_den() == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  const auto slash = s.find('/');
  mpz_class num, den(1);
  auto parse_int = [&](const std::string& part, mpz_class& out) {
    if (part.empty() || out.set_str(part, 10) != 0) {
      throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
    }
  };
  if (slash == std::string::npos) {
    parse_int(s, num);
  } else {
    parse_int(s.substr(0, slash), num);
    parse_int(s.substr(slash + 1), den);
  }
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, std::string(text));
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational rational(long num, long den) { return Rational(num, den); }

Rational abs(const Rational& x) { return Rational(mpq_class(::abs(x.value()))); }

Rational pow(const Rational& x, long k) {
  if (k < 0) return Rational(1) / pow(x, -k);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.value().get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), x.value().get_den_mpz_t(), static_cast<unsigned long>(k));
  return Rational(mpq_class(num, den));
}

}  // namespace hyperlab
