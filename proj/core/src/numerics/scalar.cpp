#include "hyperlab/numerics/scalar.hpp"

#include <algorithm>

#include "hyperlab/error.hpp"

namespace hyperlab {

namespace {

BigFloat modulus(const Rational& x, BigFloat::Precision p) { return BigFloat(abs(x).value(), p); }
BigFloat modulus(const Complex& x, BigFloat::Precision) { return abs(x); }

BigFloat::Precision precision_of(const Rational&) { return 64; }
BigFloat::Precision precision_of(const Complex& x) { return x.precision(); }

void require_policy(const Rational&, const EqPolicy& policy) {
  if (policy.mode != EqPolicy::Mode::Exact) {
    throw Error(ErrorCode::BadPolicy, "relative comparison requested for exact rationals");
  }
}

void require_policy(const Complex&, const EqPolicy& policy) {
  if (policy.mode != EqPolicy::Mode::Relative) {
    throw Error(ErrorCode::BadPolicy, "exact comparison requested for complex floats");
  }
  if (policy.rel_tol < 0 || policy.abs_floor < 0) {
    throw Error(ErrorCode::BadPolicy, "negative tolerance");
  }
}

template <class T>
bool exceeds_floor(const T& x, const EqPolicy& policy) {
  if (policy.mode == EqPolicy::Mode::Exact) return !is_zero(x);
  const auto p = precision_of(x);
  return modulus(x, p) > BigFloat(policy.abs_floor, p);
}

}  // namespace

bool scalar_eq(const Rational& a, const Rational& b, const EqPolicy& policy) {
  require_policy(a, policy);
  return a == b;
}

bool scalar_eq(const Complex& a, const Complex& b, const EqPolicy& policy) {
  require_policy(a, policy);
  const auto p = a.precision();
  if (b.precision() != p) throw Error(ErrorCode::MixedPrecision, "scalar_eq on mixed precision");
  const BigFloat diff = abs(a - b);
  const BigFloat scale = std::max(abs(a), abs(b));
  const BigFloat bound = std::max(BigFloat(policy.abs_floor, p), BigFloat(policy.rel_tol, p) * scale);
  return diff <= bound;
}

bool scalar_eq(const Scalar& a, const Scalar& b, const EqPolicy& policy) {
  if (a.index() != b.index()) throw Error(ErrorCode::MixedScalarKinds, "scalar_eq on rational and complex");
  if (const auto* ra = std::get_if<Rational>(&a)) return scalar_eq(*ra, std::get<Rational>(b), policy);
  return scalar_eq(std::get<Complex>(a), std::get<Complex>(b), policy);
}

template <class T>
bool proj_eq(const std::vector<T>& v, const std::vector<T>& w, const EqPolicy& policy) {
  if (v.size() != w.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "proj_eq on lengths " + std::to_string(v.size()) + " and " + std::to_string(w.size()));
  }
  if (v.empty()) throw Error(ErrorCode::LengthMismatch, "proj_eq on empty vectors");
  require_policy(v.front(), policy);

  const bool v_zero = std::none_of(v.begin(), v.end(), [&](const T& x) { return exceeds_floor(x, policy); });
  const bool w_zero = std::none_of(w.begin(), w.end(), [&](const T& x) { return exceeds_floor(x, policy); });
  if (v_zero && w_zero) throw Error(ErrorCode::AllZeroVectors, "proj_eq on two zero vectors");
  if (v_zero || w_zero) return false;

  std::size_t pivot = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (exceeds_floor(v[i], policy) && exceeds_floor(w[i], policy)) {
      pivot = i;
      break;
    }
  }
  if (pivot == v.size()) return false;

  const T c = w[pivot] / v[pivot];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!scalar_eq(c * v[i], w[i], policy)) return false;
  }
  return true;
}

template bool proj_eq<Rational>(const std::vector<Rational>&, const std::vector<Rational>&, const EqPolicy&);
template bool proj_eq<Complex>(const std::vector<Complex>&, const std::vector<Complex>&, const EqPolicy&);

bool proj_eq(const std::vector<Scalar>& v, const std::vector<Scalar>& w, const EqPolicy& policy) {
  if (v.size() != w.size()) throw Error(ErrorCode::LengthMismatch, "proj_eq on different lengths");
  if (v.empty()) throw Error(ErrorCode::LengthMismatch, "proj_eq on empty vectors");
  const auto kind = v.front().index();
  auto same_kind = [kind](const Scalar& s) { return s.index() == kind; };
  if (!std::all_of(v.begin(), v.end(), same_kind) || !std::all_of(w.begin(), w.end(), same_kind)) {
    throw Error(ErrorCode::MixedScalarKinds, "proj_eq on mixed scalar kinds");
  }
  if (kind == 0) {
    std::vector<Rational> a, b;
    for (const auto& s : v) a.push_back(std::get<Rational>(s));
    for (const auto& s : w) b.push_back(std::get<Rational>(s));
    return proj_eq(a, b, policy);
  }
  std::vector<Complex> a, b;
  for (const auto& s : v) a.push_back(std::get<Complex>(s));
  for (const auto& s : w) b.push_back(std::get<Complex>(s));
  return proj_eq(a, b, policy);
}

bool vanishes(const Rational& x) { return x.is_zero(); }

bool vanishes(const Complex& x) {
  if (x.is_zero()) return true;
  const long p = x.precision();
  return abs(x) < ldexp(BigFloat(1L, p), -(7 * p) / 8);
}

bool vanishes_relative(const Rational& x, const Rational&) { return x.is_zero(); }

bool vanishes_relative(const Complex& x, const BigFloat& scale) {
  if (x.is_zero()) return true;
  return abs(x) <= ldexp(scale, -x.precision() / 2);
}

double magnitude(const Rational& x) { return abs(x).to_double(); }
double magnitude(const Complex& x) { return abs(x).to_double(); }

std::string to_string(const Scalar& x) {
  return std::visit([](const auto& v) { return v.to_string(); }, x);
}

Complex to_complex(const Scalar& x, BigFloat::Precision precision) {
  if (const auto* r = std::get_if<Rational>(&x)) return Complex(*r, precision);
  const auto& z = std::get<Complex>(x);
  if (z.precision() != precision) throw Error(ErrorCode::MixedPrecision, "complex scalar at another precision");
  return z;
}

}  // namespace hyperlab
