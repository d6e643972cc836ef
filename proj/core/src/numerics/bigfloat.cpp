#include "hyperlab/numerics/bigfloat.hpp"

#include <cmath>
#include <string>

#include "hyperlab/error.hpp"

namespace hyperlab {

namespace {

void check_precision(BigFloat::Precision precision) {
  if (precision < MPFR_PREC_MIN || precision > 1 << 20) {
    throw Error(ErrorCode::MixedPrecision, "unsupported precision " + std::to_string(precision));
  }
}

}  // namespace

BigFloat::BigFloat(Precision precision) {
  check_precision(precision);
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, Precision precision) : BigFloat(precision) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, Precision precision) : BigFloat(precision) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, Precision precision) : BigFloat(precision) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(std::string_view text, Precision precision) : BigFloat(precision) {
  std::string s(text);
  if (s.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
      throw Error(ErrorCode::ParseError, "not a rational: '" + s + "'");
    }
    q.canonicalize();
    mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
    return;
  }
  char* end = nullptr;
  if (mpfr_strtofr(value_, s.c_str(), &end, 10, MPFR_RNDN), end == s.c_str() || *end != '\0') {
    throw Error(ErrorCode::ParseError, "not a decimal number: '" + s + "'");
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  *value_ = *other.value_;
  other.value_->_mpfr_d = nullptr;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this == &other) return *this;
  if (value_->_mpfr_d == nullptr) {
    mpfr_init2(value_, other.precision());
  } else if (precision() != other.precision()) {
    mpfr_set_prec(value_, other.precision());
  }
  mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this == &other) return *this;
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
  *value_ = *other.value_;
  other.value_->_mpfr_d = nullptr;
  return *this;
}

BigFloat::~BigFloat() {
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
}

BigFloat BigFloat::pi(Precision precision) {
  BigFloat r(precision);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

long BigFloat::exponent() const noexcept {
  if (!mpfr_regular_p(value_)) return 0;
  return mpfr_get_exp(value_);
}

std::string BigFloat::to_string() const {
  // ceil(p * log10(2)) + 1 digits round-trip.
  const int digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
  return to_string(digits);
}

std::string BigFloat::to_string(int significant_digits) const {
  if (is_zero()) return "0";
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", significant_digits - 1, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

void BigFloat::require_same_precision(const BigFloat& other) const {
  if (precision() != other.precision()) {
    throw Error(ErrorCode::MixedPrecision, "operands have " + std::to_string(precision()) + " and " +
                                               std::to_string(other.precision()) + " bits");
  }
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  require_same_precision(rhs);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  require_same_precision(rhs);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  require_same_precision(rhs);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  require_same_precision(rhs);
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "BigFloat division by zero");
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

BigFloat round(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_round(r.get(), x.get());
  return r;
}

}  // namespace hyperlab
