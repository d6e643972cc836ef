#include "hyperlab/series/bracket.hpp"

#include <string>
#include <vector>

#include "hyperlab/error.hpp"

namespace hyperlab {

BracketKind BracketKind::trigonometric(Complex omega) {
  BracketKind k;
  k.type = Type::Trigonometric;
  k.omega = std::move(omega);
  return k;
}

BracketKind BracketKind::elliptic(Complex omega1, Complex omega2) {
  BracketKind k;
  k.type = Type::Elliptic;
  k.omega1 = std::move(omega1);
  k.omega2 = std::move(omega2);
  return k;
}

BracketKind BracketKind::with_prefactor(Complex c0_value, Complex c1_value) const {
  BracketKind k = *this;
  k.c0 = std::move(c0_value);
  k.c1 = std::move(c1_value);
  return k;
}

bool BracketKind::has_prefactor() const { return (c0 && !c0->is_zero()) || (c1 && !c1->is_zero()); }

std::string_view to_string(BracketKind::Type type) noexcept {
  switch (type) {
    case BracketKind::Type::Rational: return "rational";
    case BracketKind::Type::Trigonometric: return "trigonometric";
    case BracketKind::Type::Elliptic: return "elliptic";
  }
  return "?";
}

// ---------------------------------------------------------------- Rational

template <>
struct Bracket<Rational>::Impl {};

template <>
Bracket<Rational>::Bracket(const BracketKind& kind, const Rational&) : kind_(kind) {
  if (kind.type != BracketKind::Type::Rational || kind.has_prefactor()) {
    throw Error(ErrorCode::UnsupportedScalar,
                std::string(to_string(kind.type)) + " bracket (or a nonzero prefactor) needs complex scalars");
  }
}

template <>
Rational Bracket<Rational>::operator()(const Rational& x) const {
  return x;
}

// ---------------------------------------------------------------- Complex

template <>
struct Bracket<Complex>::Impl {
  Complex::Precision precision;
  std::optional<Complex> c0;
  std::optional<Complex> c1;
  // trigonometric: pi / omega
  std::optional<Complex> pi_over_omega;
  // elliptic
  Complex omega1{64};
  Complex q{64};
  Complex q_quarter{64};
  Complex scale{64};  // (omega1/pi) / theta1'(0)
  Complex eta_over_omega1{64};
  Complex pi_over_omega1{64};

  explicit Impl(Complex::Precision p) : precision(p) {}

  Complex theta1(const Complex& v) const;
  Complex eval(const Complex& x, BracketKind::Type type) const;
};

Complex Bracket<Complex>::Impl::theta1(const Complex& v) const {
  // theta1(v) = 2 sum_n (-1)^n q^{(n+1/2)^2} sin((2n+1) v), with
  // q^{(n+1/2)^2} = q^{1/4} q^{n(n+1)} and sin via powers of e^{iv}.
  // Evaluate on one half-plane so that theta1(-v) = -theta1(v) bit for bit.
  const int sign = v.real().sign() != 0 ? v.real().sign() : v.imag().sign();
  if (sign < 0) return -theta1(-v);
  const auto p = precision;
  const Complex i = Complex::i(p);
  const Complex e = exp(i * v);
  const Complex e_inv = Complex(1L, p) / e;
  const Complex e2 = e * e;
  const Complex e2_inv = e_inv * e_inv;
  Complex ep = e, em = e_inv;
  Complex qn = Complex(1L, p);  // q^{n(n+1)}
  Complex qstep = q * q;        // q^{2(n+1)}
  Complex sum(p);
  const BigFloat tiny = ldexp(BigFloat(1L, p), -(p + 8));
  for (long n = 0;; ++n) {
    Complex term = qn * (ep - em);
    if (n % 2 == 1) term = -term;
    sum += term;
    if (abs(term) <= tiny * abs(sum)) break;
    if (n > 100000) throw Error(ErrorCode::InvalidLattice, "theta series failed to converge");
    qn *= qstep;
    qstep *= q * q;
    ep *= e2;
    em *= e2_inv;
  }
  // sum_n (-1)^n q^{n(n+1)} (E^{2n+1} - E^{-2n-1}) = 2i * sum (...) sin
  return q_quarter * sum / i;
}

Complex Bracket<Complex>::Impl::eval(const Complex& x, BracketKind::Type type) const {
  Complex base(precision);
  switch (type) {
    case BracketKind::Type::Rational:
      base = x;
      break;
    case BracketKind::Type::Trigonometric:
      base = sin(*pi_over_omega * x);
      break;
    case BracketKind::Type::Elliptic:
      base = scale * exp(eta_over_omega1 * x * x) * theta1(pi_over_omega1 * x);
      break;
  }
  if (c0 || c1) {
    Complex e(precision);
    if (c0) e += *c0 * x * x;
    if (c1) e += *c1;
    base *= exp(e);
  }
  return base;
}

template <>
Bracket<Complex>::Bracket(const BracketKind& kind, const Complex& like) : kind_(kind) {
  const auto p = like.precision();
  impl_ = std::make_unique<Impl>(p);
  if (kind.c0 && !kind.c0->is_zero()) impl_->c0 = with_precision(*kind.c0, p);
  if (kind.c1 && !kind.c1->is_zero()) impl_->c1 = with_precision(*kind.c1, p);
  const Complex pi = Complex::pi(p);

  if (kind.type == BracketKind::Type::Trigonometric) {
    if (!kind.omega || kind.omega->is_zero()) throw Error(ErrorCode::InvalidLattice, "trigonometric omega = 0");
    impl_->pi_over_omega = pi / with_precision(*kind.omega, p);
  } else if (kind.type == BracketKind::Type::Elliptic) {
    if (!kind.omega1 || !kind.omega2 || kind.omega1->is_zero()) {
      throw Error(ErrorCode::InvalidLattice, "elliptic bracket needs omega1 != 0 and omega2");
    }
    const Complex w1 = with_precision(*kind.omega1, p);
    const Complex tau = with_precision(*kind.omega2, p) / w1;
    if (tau.imag().sign() <= 0) throw Error(ErrorCode::InvalidLattice, "Im(omega2/omega1) must be positive");
    const Complex i = Complex::i(p);
    impl_->omega1 = w1;
    impl_->q = exp(i * pi * tau);
    impl_->q_quarter = exp(i * pi * tau / Complex(4L, p));

    // theta1'(0) and theta1'''(0) from the same series.
    Complex d1(p), d3(p);
    Complex qn(1L, p), qstep = impl_->q * impl_->q;
    const BigFloat tiny = ldexp(BigFloat(1L, p), -(p + 8));
    for (long n = 0;; ++n) {
      const Complex k(2 * n + 1, p);
      Complex t1 = qn * k;
      Complex t3 = t1 * k * k;
      if (n % 2 == 1) {
        t1 = -t1;
        t3 = -t3;
      }
      d1 += t1;
      d3 -= t3;
      if (abs(t3) <= tiny * abs(d3)) break;
      if (n > 100000) throw Error(ErrorCode::InvalidLattice, "theta derivative series failed to converge");
      qn *= qstep;
      qstep *= impl_->q * impl_->q;
    }
    const Complex two(2L, p);
    d1 *= two * impl_->q_quarter;
    d3 *= two * impl_->q_quarter;
    const Complex eta = -(pi * pi / (Complex(6L, p) * w1)) * d3 / d1;
    impl_->eta_over_omega1 = eta / w1;
    impl_->pi_over_omega1 = pi / w1;
    impl_->scale = w1 / pi / d1;
  }
}

template <>
Complex Bracket<Complex>::operator()(const Complex& x) const {
  return impl_->eval(x, kind_.type);
}

template <class T>
Bracket<T>::~Bracket() = default;

template <class T>
Bracket<T>::Bracket(const Bracket& other)
    : kind_(other.kind_), impl_(other.impl_ ? std::make_unique<Impl>(*other.impl_) : nullptr) {}

template <class T>
Bracket<T>& Bracket<T>::operator=(const Bracket& other) {
  if (this != &other) {
    kind_ = other.kind_;
    impl_ = other.impl_ ? std::make_unique<Impl>(*other.impl_) : nullptr;
  }
  return *this;
}

template class Bracket<Rational>;
template class Bracket<Complex>;

// ---------------------------------------------------------------- factorials

template <class T>
T shifted_factorial(const T& a, long n) {
  T out = from_int(1, a);
  for (long i = 0; i < n; ++i) out *= a + from_int(i, a);
  return out;
}

template <class T>
T delta_shifted_factorial(const Bracket<T>& bracket, const T& x, const T& delta, long k) {
  T out = from_int(1, x);
  T arg = x;
  for (long i = 0; i < k; ++i) {
    out *= bracket(arg);
    arg += delta;
  }
  return out;
}

template <class T>
T delta_shifted_factorial_pm(const Bracket<T>& bracket, const T& x, const T& y, const T& delta, long k) {
  return delta_shifted_factorial(bracket, x + y, delta, k) * delta_shifted_factorial(bracket, x - y, delta, k);
}

template Rational shifted_factorial(const Rational&, long);
template Complex shifted_factorial(const Complex&, long);
template Rational delta_shifted_factorial(const Bracket<Rational>&, const Rational&, const Rational&, long);
template Complex delta_shifted_factorial(const Bracket<Complex>&, const Complex&, const Complex&, long);
template Rational delta_shifted_factorial_pm(const Bracket<Rational>&, const Rational&, const Rational&,
                                             const Rational&, long);
template Complex delta_shifted_factorial_pm(const Bracket<Complex>&, const Complex&, const Complex&,
                                            const Complex&, long);

}  // namespace hyperlab
