#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "hyperlab/numerics/scalar.hpp"

namespace hyperlab {

/// Which fundamental function [x] is in force, with the prefactor
/// e^{c0 x^2 + c1}. Unset constants mean zero.
struct BracketKind {
  enum class Type { Rational, Trigonometric, Elliptic };

  Type type = Type::Rational;
  std::optional<Complex> omega;   // trigonometric period
  std::optional<Complex> omega1;  // elliptic periods
  std::optional<Complex> omega2;
  std::optional<Complex> c0;
  std::optional<Complex> c1;

  static BracketKind rational() { return {}; }
  static BracketKind trigonometric(Complex omega);
  static BracketKind elliptic(Complex omega1, Complex omega2);
  BracketKind with_prefactor(Complex c0, Complex c1) const;

  bool has_prefactor() const;
};

std::string_view to_string(BracketKind::Type type) noexcept;

/// Evaluator for [x] over scalar T.
///
///   rational       [x] = e^{c0 x^2 + c1} x
///   trigonometric  [x] = e^{c0 x^2 + c1} sin(pi x / omega)
///   elliptic       [x] = e^{c0 x^2 + c1} sigma(x | Z omega1 + Z omega2)
///
/// sigma uses full periods: with q = exp(i pi omega2/omega1),
///   sigma(z) = (omega1/pi) exp(eta z^2/omega1) theta1(pi z/omega1, q) / theta1'(0),
///   eta = -(pi^2 / (6 omega1)) theta1'''(0) / theta1'(0).
/// Over Rational only the plain rational kind (no prefactor) is available.
template <class T>
class Bracket {
 public:
  Bracket(const BracketKind& kind, const T& like);
  ~Bracket();
  Bracket(const Bracket&);
  Bracket& operator=(const Bracket&);

  T operator()(const T& x) const;
  const BracketKind& kind() const noexcept { return kind_; }

 private:
  struct Impl;
  BracketKind kind_;
  std::unique_ptr<Impl> impl_;
};

/// (a)_n = a (a+1) ... (a+n-1).
template <class T>
T shifted_factorial(const T& a, long n);

/// [x]_k = [x][x+delta] ... [x+(k-1)delta].
template <class T>
T delta_shifted_factorial(const Bracket<T>& bracket, const T& x, const T& delta, long k);

/// [x+y]_k [x-y]_k.
template <class T>
T delta_shifted_factorial_pm(const Bracket<T>& bracket, const T& x, const T& y, const T& delta, long k);

}  // namespace hyperlab
