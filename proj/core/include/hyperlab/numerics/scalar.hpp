#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hyperlab/numerics/complex.hpp"
#include "hyperlab/numerics/rational.hpp"

namespace hyperlab {

/// One field element: exact rational or fixed-precision complex float.
using Scalar = std::variant<Rational, Complex>;

struct EqPolicy {
  enum class Mode { Exact, Relative };

  Mode mode = Mode::Exact;
  double rel_tol = 0.0;
  double abs_floor = 0.0;

  static EqPolicy exact() { return {}; }
  static EqPolicy relative(double rel_tol, double abs_floor) { return {Mode::Relative, rel_tol, abs_floor}; }
};

/// Exact policy only accepts rationals, Relative only complex (BadPolicy otherwise).
bool scalar_eq(const Rational& a, const Rational& b, const EqPolicy& policy);
/// |a - b| <= max(abs_floor, rel_tol * max(|a|, |b|)).
bool scalar_eq(const Complex& a, const Complex& b, const EqPolicy& policy);
bool scalar_eq(const Scalar& a, const Scalar& b, const EqPolicy& policy);

/// True iff w = c v for one nonzero c, fixed at the first index where both
/// components exceed the policy floor. Throws LengthMismatch / AllZeroVectors.
template <class T>
bool proj_eq(const std::vector<T>& v, const std::vector<T>& w, const EqPolicy& policy);
bool proj_eq(const std::vector<Scalar>& v, const std::vector<Scalar>& w, const EqPolicy& policy);

// Helpers that let generic code build constants of the right kind and precision.

inline Rational from_int(long k, const Rational&) { return Rational(k); }
inline Complex from_int(long k, const Complex& like) { return Complex(k, like.precision()); }
inline Rational from_rational(const Rational& r, const Rational&) { return r; }
inline Complex from_rational(const Rational& r, const Complex& like) { return Complex(r, like.precision()); }

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Complex& x) { return x.is_zero(); }

/// Exact zero for rationals; |x| below 2^(-7p/8) for complex.
bool vanishes(const Rational& x);
bool vanishes(const Complex& x);
/// Exact zero for rationals; |x| <= 2^(-p/2) * scale for complex.
bool vanishes_relative(const Rational& x, const Rational& scale);
bool vanishes_relative(const Complex& x, const BigFloat& scale);

/// |x| as a double (for reports only).
double magnitude(const Rational& x);
double magnitude(const Complex& x);

inline std::string to_string(const Rational& x) { return x.to_string(); }
inline std::string to_string(const Complex& x) { return x.to_string(); }
std::string to_string(const Scalar& x);

/// Complex value of a scalar at the given precision (rationals are converted).
Complex to_complex(const Scalar& x, BigFloat::Precision precision);

}  // namespace hyperlab
