#include <string>

#include "detail.hpp"

namespace hyperlab {

std::string_view to_string(Route route) noexcept {
  switch (route) {
    case Route::BruteForce21: return "brute";
    case Route::Condensed22: return "condensed";
    case Route::HG31: return "hg-k";
    case Route::HG32: return "hg-s";
    case Route::VWP41: return "vwp-k";
    case Route::VWP42: return "vwp-ft";
  }
  return "?";
}

template <class T>
T evaluate_P(const InterpolationProblem<T>& prob, const PadeSolution<T>& sol, const T& x) {
  T out = from_int(0, x);
  for (std::size_t j = 0; j < sol.p.size(); ++j) out += sol.p[j] * prob.f(static_cast<long>(j), x);
  return out;
}

template <class T>
T evaluate_Q(const InterpolationProblem<T>& prob, const PadeSolution<T>& sol, const T& x) {
  T out = from_int(0, x);
  for (std::size_t j = 0; j < sol.q.size(); ++j) out += sol.q[j] * prob.g(static_cast<long>(j), x);
  return out;
}

template <class T>
T residual_R(const InterpolationProblem<T>& prob, const PadeSolution<T>& sol, const T& x, const T& lambda,
             const T& mu) {
  return mu * evaluate_P(prob, sol, x) - lambda * evaluate_Q(prob, sol, x);
}

namespace {

// Value of sum c_j b_j and whether it is zero relative to sum |c_j b_j|.
template <class T>
bool form_vanishes(const std::vector<T>& coeffs, const std::vector<T>& basis) {
  T value = from_int(0, basis.front());
  for (std::size_t j = 0; j < coeffs.size(); ++j) value += coeffs[j] * basis[j];
  if constexpr (std::is_same_v<T, Rational>) {
    return value.is_zero();
  } else {
    BigFloat scale(0L, value.precision());
    for (std::size_t j = 0; j < coeffs.size(); ++j) scale += abs(coeffs[j] * basis[j]);
    return vanishes_relative(value, scale);
  }
}

}  // namespace

template <class T>
PadeSolution<T> solve_bruteforce(const InterpolationProblem<T>& prob) {
  const long m = prob.m(), n = prob.n(), big_n = prob.order();
  const auto cols = static_cast<std::size_t>(big_n + 2);
  const Matrix<T> fv = prob.F(), gv = prob.G();
  Matrix<T> body(static_cast<std::size_t>(big_n + 1), cols, prob.proto());
  for (std::size_t k = 0; k < body.rows(); ++k) {
    for (long j = 0; j <= m; ++j) body(k, static_cast<std::size_t>(j)) = prob.mu()[k] * fv(k, static_cast<std::size_t>(j));
    for (long j = 0; j <= n; ++j) {
      body(k, static_cast<std::size_t>(m + 1 + j)) = prob.lambda()[k] * gv(k, static_cast<std::size_t>(j));
    }
  }
  const auto c = top_row_cofactors(body);
  std::vector<T> p(c.begin(), c.begin() + (m + 1));
  std::vector<T> q;
  for (auto it = c.begin() + (m + 1); it != c.end(); ++it) q.push_back(-*it);

  for (std::size_t k = 0; k < body.rows(); ++k) {
    std::vector<T> fk, gk;
    for (long j = 0; j <= m; ++j) fk.push_back(fv(k, static_cast<std::size_t>(j)));
    for (long j = 0; j <= n; ++j) gk.push_back(gv(k, static_cast<std::size_t>(j)));
    if (form_vanishes(p, fk) && form_vanishes(q, gk)) {
      throw Error(ErrorCode::DegenerateSolution, "(P(u_k), Q(u_k)) = (0, 0) at k=" + std::to_string(k));
    }
  }
  const T one = from_int(1, prob.proto());
  return detail::assemble(std::move(p), std::move(q), one, one, Route::BruteForce21);
}

template <class T>
PadeSolution<T> solve(const InterpolationProblem<T>& prob, Route route) {
  switch (route) {
    case Route::BruteForce21: return solve_bruteforce(prob);
    case Route::Condensed22: return solve_condensed(prob);
    case Route::HG31: return solve_hg_krattenthaler(prob);
    case Route::HG32: return solve_hg_saalschutz(prob);
    case Route::VWP41: return solve_vwp_krattenthaler(prob);
    case Route::VWP42: return solve_vwp_ft(prob);
  }
  throw Error(ErrorCode::WrongFamily, "unknown route");
}

namespace {

// Divides by the largest component so the floor of a policy is relative to it.
template <class T>
std::vector<T> normalized(std::vector<T> v) {
  if constexpr (std::is_same_v<T, Complex>) {
    std::size_t top = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (abs(v[i]) > abs(v[top])) top = i;
    }
    if (!v[top].is_zero()) {
      const T c = v[top];
      for (auto& x : v) x = x / c;
    }
  }
  return v;
}

}  // namespace

template <class T>
bool solutions_proj_eq(const PadeSolution<T>& x, const PadeSolution<T>& y, const EqPolicy& policy) {
  std::vector<T> v = x.p, w = y.p;
  v.insert(v.end(), x.q.begin(), x.q.end());
  w.insert(w.end(), y.q.begin(), y.q.end());
  return proj_eq(normalized(std::move(v)), normalized(std::move(w)), policy);
}

#define HYPERLAB_INSTANTIATE(T)                                                                            \
  template T evaluate_P(const InterpolationProblem<T>&, const PadeSolution<T>&, const T&);                 \
  template T evaluate_Q(const InterpolationProblem<T>&, const PadeSolution<T>&, const T&);                 \
  template T residual_R(const InterpolationProblem<T>&, const PadeSolution<T>&, const T&, const T&, const T&); \
  template PadeSolution<T> solve_bruteforce(const InterpolationProblem<T>&);                               \
  template PadeSolution<T> solve(const InterpolationProblem<T>&, Route);                                   \
  template bool solutions_proj_eq(const PadeSolution<T>&, const PadeSolution<T>&, const EqPolicy&);

HYPERLAB_INSTANTIATE(Rational)
HYPERLAB_INSTANTIATE(Complex)

#undef HYPERLAB_INSTANTIATE

}  // namespace hyperlab
