#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace hyperlab {

/// Arbitrary-precision binary float with a fixed per-value precision.
///
/// Arithmetic between two BigFloats requires equal precision; anything else
/// raises ErrorCode::MixedPrecision. Results are rounded to nearest.
class BigFloat {
 public:
  using Precision = mpfr_prec_t;

  explicit BigFloat(Precision precision);
  BigFloat(long value, Precision precision);
  BigFloat(double value, Precision precision);
  BigFloat(const mpq_class& value, Precision precision);
  /// Parses a decimal or "p/q" rational string.
  BigFloat(std::string_view text, Precision precision);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat pi(Precision precision);

  Precision precision() const noexcept { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  long exponent() const noexcept;

  /// Scientific notation with enough digits to round-trip at this precision.
  std::string to_string() const;
  std::string to_string(int significant_digits) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

 private:
  void require_same_precision(const BigFloat& other) const;

  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
/// x * 2^e, exact.
BigFloat ldexp(const BigFloat& x, long e);
/// Nearest integer (ties away from zero), as a BigFloat of the same precision.
BigFloat round(const BigFloat& x);

}  // namespace hyperlab
