#include "hyperlab/detformulas/warnaar.hpp"

#include <string>

namespace hyperlab {

template <class T>
IdentityReport<T> warnaar_check(const Bracket<T>& br, const std::vector<T>& x, const std::vector<T>& a,
                                const std::vector<T>& b, const EqPolicy& policy) {
  if (x.empty()) throw Error(ErrorCode::LengthMismatch, "need at least one node");
  const std::size_t m = x.size() - 1;
  if (a.size() != m || b.size() != m) throw Error(ErrorCode::LengthMismatch, "a, b must have length m = |x| - 1");
  auto pm = [&](const T& u, const T& v) { return br(u + v) * br(u - v); };
  const T one = from_int(1, x.front());

  Matrix<T> mat(m + 1, m + 1, one);
  for (std::size_t i = 0; i <= m; ++i) {
    T entry = one;
    for (std::size_t j = 1; j <= m; ++j) {
      const T den = pm(b[j - 1], x[i]);
      if (vanishes(den)) {
        throw Error(ErrorCode::PoleInDenominator, "[b_" + std::to_string(j - 1) + " ± x_" + std::to_string(i) + "] = 0");
      }
      entry *= pm(a[j - 1], x[i]) / den;
      mat(i, j) = entry;
    }
  }
  const T lhs = det(mat);

  T num = one;
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = i + 1; j <= m; ++j) num *= pm(x[j], x[i]);
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = k; l < m; ++l) num *= pm(a[k], b[l]);
  }
  T den = one;
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t k = 0; k < m; ++k) den *= pm(b[k], x[i]);
  }
  const T rhs = num / den;
  return {"warnaar", lhs, rhs, scalar_eq(lhs, rhs, policy)};
}

template <class T>
T warnaar_shifted_rhs(const Bracket<T>& br, const T& a, const T& b, const T& delta, const std::vector<T>& x) {
  if (x.empty()) throw Error(ErrorCode::LengthMismatch, "need at least one node");
  const long m = static_cast<long>(x.size()) - 1;
  T num = from_int(1, a);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) num *= br(x[i] + x[j]) * br(x[i] - x[j]);
  }
  for (long k = 1; k <= m; ++k) {
    num *= delta_shifted_factorial(br, b - a, delta, k) *
           delta_shifted_factorial(br, a + b + from_int(k - 1, a) * delta, delta, k);
  }
  T den = from_int(1, a);
  for (const auto& xi : x) den *= delta_shifted_factorial_pm(br, b, xi, delta, m);
  if (vanishes(den)) throw Error(ErrorCode::PoleInDenominator, "[b ± x_i]_m = 0");
  return num / den;
}

template <class T>
IdentityReport<T> warnaar_shifted_check(const Bracket<T>& br, const T& a, const T& b, const T& delta,
                                        const std::vector<T>& x, const EqPolicy& policy) {
  if (x.empty()) throw Error(ErrorCode::LengthMismatch, "need at least one node");
  const std::size_t m = x.size() - 1;
  Matrix<T> mat(m + 1, m + 1, from_int(1, a));
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const long jj = static_cast<long>(j);
      const T den = delta_shifted_factorial_pm(br, b, x[i], delta, jj);
      if (vanishes(den)) throw Error(ErrorCode::PoleInDenominator, "[b ± x_" + std::to_string(i) + "]_j = 0");
      mat(i, j) = delta_shifted_factorial_pm(br, a, x[i], delta, jj) / den;
    }
  }
  const T lhs = det(mat);
  const T rhs = warnaar_shifted_rhs(br, a, b, delta, x);
  return {"warnaar-shifted", lhs, rhs, scalar_eq(lhs, rhs, policy)};
}

#define HYPERLAB_INSTANTIATE(T)                                                                          \
  template IdentityReport<T> warnaar_check(const Bracket<T>&, const std::vector<T>&, const std::vector<T>&, \
                                           const std::vector<T>&, const EqPolicy&);                      \
  template T warnaar_shifted_rhs(const Bracket<T>&, const T&, const T&, const T&, const std::vector<T>&);  \
  template IdentityReport<T> warnaar_shifted_check(const Bracket<T>&, const T&, const T&, const T&,         \
                                                   const std::vector<T>&, const EqPolicy&);

HYPERLAB_INSTANTIATE(Rational)
HYPERLAB_INSTANTIATE(Complex)

#undef HYPERLAB_INSTANTIATE

}  // namespace hyperlab
