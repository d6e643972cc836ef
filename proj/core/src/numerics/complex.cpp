#include "hyperlab/numerics/complex.hpp"

#include "hyperlab/error.hpp"
#include "hyperlab/numerics/rational.hpp"

namespace hyperlab {

Complex::Complex(Precision precision) : re_(precision), im_(precision) {}

Complex::Complex(long re, Precision precision) : re_(re, precision), im_(precision) {}

Complex::Complex(double re, double im, Precision precision) : re_(re, precision), im_(im, precision) {}

Complex::Complex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  if (re_.precision() != im_.precision()) {
    throw Error(ErrorCode::MixedPrecision, "real and imaginary parts differ in precision");
  }
}

Complex::Complex(BigFloat re) : re_(std::move(re)), im_(re_.precision()) {}

Complex::Complex(const Rational& re, Precision precision) : re_(re.value(), precision), im_(precision) {}

Complex::Complex(const Rational& re, const Rational& im, Precision precision)
    : re_(re.value(), precision), im_(im.value(), precision) {}

Complex Complex::i(Precision precision) { return Complex(BigFloat(precision), BigFloat(1L, precision)); }

Complex Complex::pi(Precision precision) { return Complex(BigFloat::pi(precision)); }

Complex& Complex::operator+=(const Complex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  if (precision() != rhs.precision()) {
    throw Error(ErrorCode::MixedPrecision, "complex product of mixed precision");
  }
  const Precision p = precision();
  BigFloat re(p), im(p), t(p);
  mpfr_mul(re.get(), re_.get(), rhs.re_.get(), MPFR_RNDN);
  mpfr_mul(t.get(), im_.get(), rhs.im_.get(), MPFR_RNDN);
  mpfr_sub(re.get(), re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(im.get(), re_.get(), rhs.im_.get(), MPFR_RNDN);
  mpfr_mul(t.get(), im_.get(), rhs.re_.get(), MPFR_RNDN);
  mpfr_add(im.get(), im.get(), t.get(), MPFR_RNDN);
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "complex division by zero");
  if (rhs.im_.is_zero()) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  const BigFloat d = norm(rhs);
  *this *= conj(rhs);
  re_ /= d;
  im_ /= d;
  return *this;
}

std::string Complex::to_string() const {
  return "(" + re_.to_string() + ", " + im_.to_string() + ")";
}

BigFloat abs(const Complex& z) {
  BigFloat r(z.precision());
  mpfr_hypot(r.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
  return r;
}

BigFloat norm(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

Complex conj(const Complex& z) { return Complex(z.real(), -z.imag()); }

Complex exp(const Complex& z) {
  const auto p = z.precision();
  const BigFloat scale = exp(z.real());
  BigFloat s(p), c(p);
  mpfr_sin_cos(s.get(), c.get(), z.imag().get(), MPFR_RNDN);
  return Complex(scale * c, scale * s);
}

Complex sin(const Complex& z) {
  // sin(a + ib) = sin a cosh b + i cos a sinh b
  const auto p = z.precision();
  BigFloat s(p), c(p), sh(p), ch(p);
  mpfr_sin_cos(s.get(), c.get(), z.real().get(), MPFR_RNDN);
  mpfr_sinh_cosh(sh.get(), ch.get(), z.imag().get(), MPFR_RNDN);
  return Complex(s * ch, c * sh);
}

Complex cos(const Complex& z) {
  const auto p = z.precision();
  BigFloat s(p), c(p), sh(p), ch(p);
  mpfr_sin_cos(s.get(), c.get(), z.real().get(), MPFR_RNDN);
  mpfr_sinh_cosh(sh.get(), ch.get(), z.imag().get(), MPFR_RNDN);
  return Complex(c * ch, -(s * sh));
}

Complex pow(const Complex& z, long k) {
  if (k < 0) return Complex(1L, z.precision()) / pow(z, -k);
  Complex result(1L, z.precision());
  Complex base = z;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Complex with_precision(const Complex& z, Complex::Precision precision) {
  BigFloat re(precision), im(precision);
  mpfr_set(re.get(), z.real().get(), MPFR_RNDN);
  mpfr_set(im.get(), z.imag().get(), MPFR_RNDN);
  return Complex(std::move(re), std::move(im));
}

}  // namespace hyperlab
