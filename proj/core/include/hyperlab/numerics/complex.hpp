#pragma once

#include <string>

#include "hyperlab/numerics/bigfloat.hpp"

namespace hyperlab {

class Rational;

/// Complex number over two BigFloats sharing one precision.
class Complex {
 public:
  using Precision = BigFloat::Precision;

  explicit Complex(Precision precision);
  Complex(long re, Precision precision);
  Complex(double re, double im, Precision precision);
  Complex(BigFloat re, BigFloat im);
  explicit Complex(BigFloat re);
  Complex(const Rational& re, Precision precision);
  Complex(const Rational& re, const Rational& im, Precision precision);

  static Complex i(Precision precision);
  static Complex pi(Precision precision);

  Precision precision() const noexcept { return re_.precision(); }
  const BigFloat& real() const noexcept { return re_; }
  const BigFloat& imag() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const noexcept { return re_.is_finite() && im_.is_finite(); }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);

  friend Complex operator+(Complex lhs, const Complex& rhs) { return lhs += rhs; }
  friend Complex operator-(Complex lhs, const Complex& rhs) { return lhs -= rhs; }
  friend Complex operator*(Complex lhs, const Complex& rhs) { return lhs *= rhs; }
  friend Complex operator/(Complex lhs, const Complex& rhs) { return lhs /= rhs; }
  Complex operator-() const { return Complex(-re_, -im_); }

  /// Bitwise equality of both components.
  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  std::string to_string() const;

 private:
  BigFloat re_;
  BigFloat im_;
};

BigFloat abs(const Complex& z);
/// |z|^2 without the square root.
BigFloat norm(const Complex& z);
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex pow(const Complex& z, long k);
/// The same value rounded to another precision.
Complex with_precision(const Complex& z, Complex::Precision precision);

}  // namespace hyperlab
