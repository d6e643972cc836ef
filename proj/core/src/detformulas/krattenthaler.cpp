#include "hyperlab/detformulas/krattenthaler.hpp"

#include <string>

#include "hyperlab/series/bracket.hpp"

namespace hyperlab {

namespace {

template <class T>
void require_sizes(const KrattenthalerData<T>& d) {
  if (d.x.empty()) throw Error(ErrorCode::LengthMismatch, "need at least one node");
  const std::size_t m = d.x.size() - 1;
  if (d.alpha.size() != m || d.beta.size() != m || d.gamma.size() != m || d.delta.size() != m) {
    throw Error(ErrorCode::LengthMismatch, "alpha, beta, gamma, delta must have length m = |x| - 1");
  }
}

template <class T>
T vandermonde(const std::vector<T>& x, bool ascending) {
  T out = from_int(1, x.front());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) out *= ascending ? x[j] - x[i] : x[i] - x[j];
  }
  return out;
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class T>
T power(const T& x, long k) {
  T out = from_int(1, x);
  for (long i = 0; i < k; ++i) out *= x;
  return out;
}

}  // namespace

template <class T>
T krattenthaler_lhs(const KrattenthalerData<T>& d) {
  require_sizes(d);
  const std::size_t m = d.x.size() - 1;
  const T one = from_int(1, d.x.front());
  Matrix<T> x(m + 1, m + 1, one);
  for (std::size_t i = 0; i <= m; ++i) {
    T entry = one;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t k = j - 1;
      const T den = d.gamma[k] * d.x[i] + d.delta[k];
      if (vanishes(den)) {
        throw Error(ErrorCode::ZeroDenominatorEntry,
                    "gamma_" + std::to_string(k) + " x_" + std::to_string(i) + " + delta_" + std::to_string(k) + " = 0");
      }
      entry *= (d.alpha[k] * d.x[i] + d.beta[k]) / den;
      x(i, j) = entry;
    }
  }
  return det(x);
}

template <class T>
T krattenthaler_rhs(const KrattenthalerData<T>& d) {
  require_sizes(d);
  const std::size_t m = d.x.size() - 1;
  T num = vandermonde(d.x, true);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = k; l < m; ++l) num *= d.alpha[k] * d.delta[l] - d.beta[k] * d.gamma[l];
  }
  T den = from_int(1, d.x.front());
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t k = 0; k < m; ++k) den *= d.gamma[k] * d.x[i] + d.delta[k];
  }
  if (vanishes(den)) throw Error(ErrorCode::ZeroDenominatorEntry, "gamma_k x_i + delta_k = 0");
  return num / den;
}

template <class T>
T shifted_ratio_det_lhs(const T& a, const T& b, const std::vector<T>& x) {
  if (x.empty()) throw Error(ErrorCode::LengthMismatch, "need at least one node");
  const std::size_t m = x.size() - 1;
  Matrix<T> mat(m + 1, m + 1, from_int(1, a));
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const T den = shifted_factorial(b + x[i], static_cast<long>(j));
      if (vanishes(den)) throw Error(ErrorCode::PoleInDenominator, "(b + x_" + std::to_string(i) + ")_j = 0");
      mat(i, j) = shifted_factorial(a + x[i], static_cast<long>(j)) / den;
    }
  }
  return det(mat);
}

template <class T>
T shifted_ratio_det_rhs(const T& a, const T& b, const std::vector<T>& x) {
  if (x.empty()) throw Error(ErrorCode::LengthMismatch, "need at least one node");
  const long m = static_cast<long>(x.size()) - 1;
  T num = vandermonde(x, true);
  for (long k = 1; k <= m; ++k) num *= shifted_factorial(b - a, k);
  T den = from_int(1, a);
  for (const auto& xi : x) den *= shifted_factorial(b + xi, m);
  if (vanishes(den)) throw Error(ErrorCode::PoleInDenominator, "(b + x_i)_m = 0");
  return num / den;
}

template <class T>
T q_pochhammer(const T& a, const T& q, long k) {
  const T one = from_int(1, a);
  T out = one;
  T t = a;
  for (long i = 0; i < k; ++i) {
    out *= one - t;
    t *= q;
  }
  return out;
}

template <class T>
IdentityReport<T> q_ratio_det_check(const QRatioParams<T>& prm, const EqPolicy& policy) {
  using Case = typename QRatioParams<T>::Case;
  using Form = typename QRatioParams<T>::Form;
  if (prm.nodes.empty()) throw Error(ErrorCode::LengthMismatch, "need at least one node");
  const auto& z = prm.nodes;
  const long m = static_cast<long>(z.size()) - 1;
  const T one = from_int(1, prm.a);
  const T& q = prm.q;
  const T& p = prm.form == Form::EqualBase ? prm.q : prm.p;
  const bool case_c = prm.which == Case::C;

  // Denominator prod over nodes, shared by both sides.
  auto node_den = [&](std::size_t i, long j) {
    T d = q_pochhammer(prm.b * z[i], q, j);
    if (case_c) d *= q_pochhammer(prm.b * prm.c / z[i], q, j);
    return d;
  };

  Matrix<T> mat(z.size(), z.size(), one);
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (long j = 1; j <= m; ++j) {
      const T den = node_den(i, j);
      if (vanishes(den)) throw Error(ErrorCode::PoleInDenominator, "node " + std::to_string(i));
      T num = q_pochhammer(prm.a * z[i], p, j);
      if (case_c) num *= q_pochhammer(prm.a * prm.c / z[i], p, j);
      mat(i, static_cast<std::size_t>(j)) = num / den;
    }
  }
  const T lhs = det(mat);

  T num = one;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      T f = prm.form == Form::General ? z[j] - z[i] : z[i] - z[j];
      if (case_c) f *= one - prm.c / (z[i] * z[j]);
      num *= f;
    }
  }
  if (prm.form == Form::General) {
    for (long k = 0; k < m; ++k) {
      for (long l = k; l < m; ++l) {
        T f = power(q, l) * prm.b - power(p, k) * prm.a;
        if (case_c) f *= one - power(p, k) * power(q, l) * prm.a * prm.b * prm.c;
        num *= f;
      }
    }
  } else {
    num *= power(prm.a, binomial(m + 1, 2)) * power(q, binomial(m + 1, 3));
    for (long k = 1; k <= m; ++k) {
      num *= q_pochhammer(prm.b / prm.a, q, k);
      if (case_c) num *= q_pochhammer(power(q, k - 1) * prm.a * prm.b * prm.c, q, k);
    }
  }
  T den = one;
  for (std::size_t i = 0; i < z.size(); ++i) den *= node_den(i, m);
  if (vanishes(den)) throw Error(ErrorCode::PoleInDenominator, "node denominator vanishes");
  const T rhs = num / den;
  const std::string name = std::string(case_c ? "q-ratio-c" : "q-ratio-b") +
                           (prm.form == Form::General ? "-general" : "-equal-base");
  return {name, lhs, rhs, scalar_eq(lhs, rhs, policy)};
}

#define HYPERLAB_INSTANTIATE(T)                                                        \
  template T krattenthaler_lhs(const KrattenthalerData<T>&);                           \
  template T krattenthaler_rhs(const KrattenthalerData<T>&);                           \
  template T shifted_ratio_det_lhs(const T&, const T&, const std::vector<T>&);         \
  template T shifted_ratio_det_rhs(const T&, const T&, const std::vector<T>&);         \
  template T q_pochhammer(const T&, const T&, long);                                   \
  template IdentityReport<T> q_ratio_det_check(const QRatioParams<T>&, const EqPolicy&);

HYPERLAB_INSTANTIATE(Rational)
HYPERLAB_INSTANTIATE(Complex)

#undef HYPERLAB_INSTANTIATE

}  // namespace hyperlab
