#include "hyperlab/detformulas/abstract_factorized.hpp"

#include <string>

namespace hyperlab {

namespace {

std::string idx(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
}

template <class T>
T pm(const Bracket<T>& br, const T& u, const T& v) {
  return br(u + v) * br(u - v);
}

// Equality of two sums of products, tolerant to cancellation among the terms.
bool agree(const Rational& x, const Rational& y, const Rational&, const Rational&, const EqPolicy& policy) {
  return scalar_eq(x, y, policy);
}

bool agree(const Complex& x, const Complex& y, const Complex& t1, const Complex& t2, const EqPolicy& policy) {
  return scalar_eq(x, y, policy) || vanishes_relative(x - y, abs(t1) + abs(t2));
}

}  // namespace

template <class T>
FactorizedDetInput<T>::FactorizedDetInput(Matrix<T> a, Matrix<T> b, Matrix<T> p, Matrix<T> q, const EqPolicy& policy)
    : a_(std::move(a)), b_(std::move(b)), p_(std::move(p)), q_(std::move(q)) {
  const std::size_t n = a_.cols();
  if (a_.rows() != n + 1 || b_.rows() != n + 1 || b_.cols() != n || p_.rows() != n + 1 || p_.cols() != n + 1 ||
      q_.rows() != n || q_.cols() != n) {
    throw Error(ErrorCode::LengthMismatch, "expected a, b of shape (N+1)xN, p (N+1)x(N+1), q NxN");
  }
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (vanishes(b_(i, k))) {
        throw Error(ErrorCode::ZeroDenominatorEntry, "b_" + std::to_string(i) + "," + std::to_string(k) + " = 0");
      }
    }
  }
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      if (!agree(p_(i, j), -p_(j, i), p_(i, j), p_(j, i), policy)) {
        throw Error(ErrorCode::AntisymmetryViolated, "p_ij != -p_ji at i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
    }
  }
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k; l < n; ++l) {
          const T t1 = a_(i, k) * b_(j, l);
          const T t2 = a_(j, k) * b_(i, l);
          if (!agree(t1 - t2, p_(i, j) * q_(k, l), t1, t2, policy)) {
            throw Error(ErrorCode::FactorizationViolated, idx(i, j, k, l));
          }
        }
      }
    }
  }
}

template <class T>
FactorizedDetInput<T> factorized_from_krattenthaler(const KrattenthalerData<T>& d, const EqPolicy& policy) {
  if (d.x.empty()) throw Error(ErrorCode::LengthMismatch, "need at least one node");
  const std::size_t n = d.x.size() - 1;
  if (d.alpha.size() != n || d.beta.size() != n || d.gamma.size() != n || d.delta.size() != n) {
    throw Error(ErrorCode::LengthMismatch, "alpha, beta, gamma, delta must have length |x| - 1");
  }
  const T zero = from_int(0, d.x.front());
  Matrix<T> a(n + 1, n, zero), b(n + 1, n, zero), p(n + 1, n + 1, zero), q(n, n, zero);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      a(i, k) = d.alpha[k] * d.x[i] + d.beta[k];
      b(i, k) = d.gamma[k] * d.x[i] + d.delta[k];
    }
    for (std::size_t j = 0; j <= n; ++j) p(i, j) = d.x[i] - d.x[j];
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) q(k, l) = d.alpha[k] * d.delta[l] - d.beta[k] * d.gamma[l];
  }
  return FactorizedDetInput<T>(std::move(a), std::move(b), std::move(p), std::move(q), policy);
}

template <class T>
FactorizedDetInput<T> factorized_from_brackets(const Bracket<T>& br, const std::vector<T>& x, const std::vector<T>& av,
                                               const std::vector<T>& bv, const EqPolicy& policy) {
  if (x.empty()) throw Error(ErrorCode::LengthMismatch, "need at least one node");
  const std::size_t n = x.size() - 1;
  if (av.size() != n || bv.size() != n) throw Error(ErrorCode::LengthMismatch, "a, b must have length |x| - 1");
  const T zero = from_int(0, x.front());
  Matrix<T> a(n + 1, n, zero), b(n + 1, n, zero), p(n + 1, n + 1, zero), q(n, n, zero);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      a(i, k) = pm(br, av[k], x[i]);
      b(i, k) = pm(br, bv[k], x[i]);
    }
    for (std::size_t j = 0; j <= n; ++j) p(i, j) = pm(br, x[i], x[j]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) q(k, l) = pm(br, av[k], bv[l]);
  }
  return FactorizedDetInput<T>(std::move(a), std::move(b), std::move(p), std::move(q), policy);
}

template <class T>
T tau(const FactorizedDetInput<T>& in, long m, std::size_t row_shift, std::size_t col_shift) {
  const T one = from_int(1, in.a().proto());
  if (m < 0) return one;
  const std::size_t size = static_cast<std::size_t>(m) + 1;
  const std::size_t n = in.order();
  if (m + row_shift > n || (m > 0 && m - 1 + col_shift >= n)) {
    throw Error(ErrorCode::InsufficientData, "tau_" + std::to_string(m) + " needs more rows or columns than given");
  }
  Matrix<T> x(size, size, one);
  for (std::size_t i = 0; i < size; ++i) {
    T entry = one;
    for (std::size_t j = 1; j < size; ++j) {
      const std::size_t r = i + row_shift, c = j - 1 + col_shift;
      entry *= in.a()(r, c) / in.b()(r, c);
      x(i, j) = entry;
    }
  }
  return det(x);
}

template <class T>
IdentityReport<T> abstract_factorized_det(const FactorizedDetInput<T>& in, long m, const EqPolicy& policy) {
  if (m < 0 || static_cast<std::size_t>(m) > in.order()) {
    throw Error(ErrorCode::InsufficientData, "order m=" + std::to_string(m) + " outside 0..N");
  }
  const std::size_t mm = static_cast<std::size_t>(m);
  const T lhs = tau(in, m);
  T num = from_int(1, in.a().proto());
  for (std::size_t i = 0; i <= mm; ++i) {
    for (std::size_t j = i + 1; j <= mm; ++j) num *= in.p()(j, i);
  }
  for (std::size_t k = 0; k < mm; ++k) {
    for (std::size_t l = k; l < mm; ++l) num *= in.q()(k, l);
  }
  T den = from_int(1, num);
  for (std::size_t i = 0; i <= mm; ++i) {
    for (std::size_t k = 0; k < mm; ++k) den *= in.b()(i, k);
  }
  const T rhs = num / den;
  return {"abstract-factorized", lhs, rhs, scalar_eq(lhs, rhs, policy)};
}

template <class T>
IdentityReport<T> tau_bilinear_check(const FactorizedDetInput<T>& in, long m, const EqPolicy& policy) {
  if (m < 0) throw Error(ErrorCode::InsufficientData, "m must be non-negative");
  if (static_cast<std::size_t>(m) + 1 > in.order()) {
    throw Error(ErrorCode::InsufficientData, "tau bilinear identity at m=" + std::to_string(m) + " needs N >= m+1");
  }
  const std::size_t m1 = static_cast<std::size_t>(m) + 1;
  const T lhs = tau(in, m + 1) * tau(in, m - 1, 1, 1);
  const T r_top = in.a()(m1, 0) / in.b()(m1, 0);
  const T r_zero = in.a()(0, 0) / in.b()(0, 0);
  const T rhs = r_top * tau(in, m) * tau(in, m, 1, 1) - r_zero * tau(in, m, 0, 1) * tau(in, m, 1, 0);
  return {"tau-bilinear", lhs, rhs, scalar_eq(lhs, rhs, policy)};
}

#define HYPERLAB_INSTANTIATE(T)                                                                                 \
  template class FactorizedDetInput<T>;                                                                         \
  template FactorizedDetInput<T> factorized_from_krattenthaler(const KrattenthalerData<T>&, const EqPolicy&);   \
  template FactorizedDetInput<T> factorized_from_brackets(const Bracket<T>&, const std::vector<T>&,             \
                                                          const std::vector<T>&, const std::vector<T>&,         \
                                                          const EqPolicy&);                                     \
  template T tau(const FactorizedDetInput<T>&, long, std::size_t, std::size_t);                                \
  template IdentityReport<T> abstract_factorized_det(const FactorizedDetInput<T>&, long, const EqPolicy&);      \
  template IdentityReport<T> tau_bilinear_check(const FactorizedDetInput<T>&, long, const EqPolicy&);

HYPERLAB_INSTANTIATE(Rational)
HYPERLAB_INSTANTIATE(Complex)

#undef HYPERLAB_INSTANTIATE

}  // namespace hyperlab
