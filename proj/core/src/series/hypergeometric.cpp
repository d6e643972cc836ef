#include "hyperlab/series/hypergeometric.hpp"

#include <algorithm>
#include <string>

#include "hyperlab/error.hpp"

namespace hyperlab {

std::optional<long> nonpositive_integer(const Rational& x) {
  if (!x.is_integer() || x.sign() > 0) return std::nullopt;
  return -x.numerator().get_si();
}

std::optional<long> nonpositive_integer(const Complex& x) {
  const auto p = x.precision();
  const BigFloat r = round(x.real());
  if (r.sign() > 0) return std::nullopt;
  const BigFloat tol = ldexp(std::max(BigFloat(1L, p), abs(r)), -(p - 24));
  if (abs(x.real() - r) > tol || abs(x.imag()) > tol) return std::nullopt;
  return -static_cast<long>(r.to_double());
}

namespace {

BigFloat scale_of(const Complex& x, long k) { return std::max(abs(x), BigFloat(std::max(k, 1L), x.precision())); }
Rational scale_of(const Rational&, long) { return Rational(1); }

template <class T>
long termination_index(const std::vector<T>& candidates, const std::string& what) {
  std::optional<long> n;
  for (const auto& c : candidates) {
    if (auto k = nonpositive_integer(c)) n = n ? std::min(*n, *k) : *k;
  }
  if (!n) throw Error(ErrorCode::NonTerminating, what + " has no terminating parameter");
  return *n;
}

}  // namespace

template <class T>
T eval_F(const GeneralizedF<T>& spec) {
  if (spec.upper.size() != spec.lower.size() + 1) {
    throw Error(ErrorCode::LengthMismatch, "r+1Fr needs |upper| = |lower| + 1");
  }
  const long n = termination_index(spec.upper, "hypergeometric series");
  const T& like = spec.z;
  T term = from_int(1, like);
  T sum = term;
  for (long k = 0; k < n; ++k) {
    const T kk = from_int(k, like);
    T num = spec.z;
    T den = from_int(k + 1, like);
    for (const auto& a : spec.upper) num *= a + kk;
    for (std::size_t i = 0; i < spec.lower.size(); ++i) {
      const T b = spec.lower[i] + kk;
      if (vanishes_relative(b, scale_of(spec.lower[i], k))) {
        throw Error(ErrorCode::PoleBeforeTermination, "lower parameter #" + std::to_string(i + 1) +
                                                          " hits zero at k=" + std::to_string(k + 1) +
                                                          " (termination at " + std::to_string(n) + ")");
      }
      den *= b;
    }
    term *= num / den;
    sum += term;
  }
  return sum;
}

template <class T>
T eval_V(const Bracket<T>& bracket, const T& delta, const T& a0, const std::vector<T>& a, const T& z) {
  if (is_zero(delta)) throw Error(ErrorCode::NonTerminating, "delta = 0");
  std::vector<T> ratios;
  for (const auto& ai : a) ratios.push_back(ai / delta);
  const long n = termination_index(ratios, "very-well-poised series");
  const T b0 = bracket(a0);
  if (vanishes(b0)) throw Error(ErrorCode::A0Zero, "[a0] = 0");

  T prod = from_int(1, a0);  // [a0]_k prod[a_i]_k / ([delta]_k prod[delta+a0-a_i]_k) z^k
  T sum = prod;
  for (long k = 0; k < n; ++k) {
    const T kd = from_int(k, a0) * delta;
    T num = bracket(a0 + kd) * z;
    T den = bracket(delta + kd);
    for (const auto& ai : a) num *= bracket(ai + kd);
    for (std::size_t i = 0; i < a.size(); ++i) den *= bracket(delta + a0 - a[i] + kd);
    if (vanishes(den)) {
      throw Error(ErrorCode::PoleBeforeTermination,
                  "denominator bracket vanishes at k=" + std::to_string(k + 1) + " (termination at " +
                      std::to_string(n) + ")");
    }
    prod *= num / den;
    const T weight = bracket(a0 + from_int(2 * (k + 1), a0) * delta) / b0;
    sum += weight * prod;
  }
  return sum;
}

template <class T>
T eval_V(const VeryWellPoisedV<T>& spec) {
  const Bracket<T> bracket(spec.bracket, spec.a0);
  return eval_V(bracket, spec.delta, spec.a0, spec.a, spec.z);
}

template <class T>
T eval_series(const SeriesSpec<T>& spec) {
  return std::visit([](const auto& s) {
    if constexpr (std::is_same_v<std::decay_t<decltype(s)>, GeneralizedF<T>>) {
      return eval_F(s);
    } else {
      return eval_V(s);
    }
  }, spec);
}

template <class T>
T vwp_term(const Bracket<T>& bracket, const T& delta, long k, const T& a0, const std::vector<T>& a) {
  const T b0 = bracket(a0);
  if (vanishes(b0)) throw Error(ErrorCode::A0Zero, "[a0] = 0");
  T num = bracket(a0 + from_int(2 * k, a0) * delta) * delta_shifted_factorial(bracket, a0, delta, k);
  T den = b0 * delta_shifted_factorial(bracket, delta, delta, k);
  for (const auto& ai : a) {
    num *= delta_shifted_factorial(bracket, ai, delta, k);
    den *= delta_shifted_factorial(bracket, delta + a0 - ai, delta, k);
  }
  if (vanishes(den)) {
    throw Error(ErrorCode::PoleBeforeTermination, "very-well-poised term k=" + std::to_string(k) + " has a pole");
  }
  return num / den;
}

template <class T>
T vwp_term(const BracketKind& kind, const T& delta, long k, const T& a0, const std::vector<T>& a) {
  return vwp_term(Bracket<T>(kind, a0), delta, k, a0, a);
}

#define HYPERLAB_INSTANTIATE(T)                                                                       \
  template T eval_F(const GeneralizedF<T>&);                                                          \
  template T eval_V(const VeryWellPoisedV<T>&);                                                       \
  template T eval_V(const Bracket<T>&, const T&, const T&, const std::vector<T>&, const T&);          \
  template T eval_series(const SeriesSpec<T>&);                                                       \
  template T vwp_term(const Bracket<T>&, const T&, long, const T&, const std::vector<T>&);            \
  template T vwp_term(const BracketKind&, const T&, long, const T&, const std::vector<T>&);

HYPERLAB_INSTANTIATE(Rational)
HYPERLAB_INSTANTIATE(Complex)

#undef HYPERLAB_INSTANTIATE

}  // namespace hyperlab
