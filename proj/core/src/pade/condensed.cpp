#include <string>

#include "detail.hpp"

namespace hyperlab {

namespace {

using detail::SideView;

void check_index(long i, long j, long m, const char* name) {
  if (i < 0 || i >= m || j < 0 || j > m) {
    throw Error(ErrorCode::IndexOutOfBounds, std::string(name) + "_" + std::to_string(i) + "," + std::to_string(j) +
                                                 " outside 0 <= i < " + std::to_string(m) + ", 0 <= j <= " +
                                                 std::to_string(m));
  }
}

// Solves a x = b by Gaussian elimination; a is nonsingular.
template <class T>
std::vector<T> solve_linear(Matrix<T> a, std::vector<T> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    if constexpr (std::is_same_v<T, Rational>) {
      while (a(piv, c).is_zero()) ++piv;
    } else {
      for (std::size_t r = c + 1; r < n; ++r) {
        if (norm(a(r, c)) > norm(a(piv, c))) piv = r;
      }
    }
    if (piv != c) {
      for (std::size_t l = c; l < n; ++l) std::swap(a(c, l), a(piv, l));
      std::swap(b[c], b[piv]);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(a(r, c))) continue;
      const T f = a(r, c) / a(c, c);
      for (std::size_t l = c + 1; l < n; ++l) a(r, l) -= f * a(c, l);
      b[r] -= f * b[c];
    }
  }
  for (std::size_t c = n; c-- > 0;) {
    for (std::size_t l = c + 1; l < n; ++l) b[c] -= a(c, l) * b[l];
    b[c] /= a(c, c);
  }
  return b;
}

// Signed G-minors (-1)^k det G^{i..(i+k)^..i+n+1} / det G^{i+1..i+n+1}, k = 0..n+1.
// By Cramer these are the left null vector c of rows i..i+n+1 with c_0 = 1,
// so only the core determinant is formed.
template <class T>
std::vector<T> minor_ratios(const SideView<T>& v, const Matrix<T>& g, long i, T* core_out = nullptr) {
  const long n = v.n();
  const T core = detail::core_minor(g, i + 1, n + 1, v.q_side ? "F" : "G");
  const auto ui = static_cast<std::size_t>(i), size = static_cast<std::size_t>(n + 1);
  Matrix<T> a(size, size, g.proto());
  std::vector<T> b;
  for (std::size_t l = 0; l < size; ++l) {
    for (std::size_t k = 0; k < size; ++k) a(l, k) = g(ui + 1 + k, l);
    b.push_back(-g(ui, l));
  }
  std::vector<T> out{from_int(1, core)};
  for (auto& c : solve_linear(std::move(a), std::move(b))) out.push_back(std::move(c));
  if (core_out) *core_out = core;
  return out;
}

// mu_k / lambda_k on this side.
template <class T>
std::vector<T> weight_ratios(const SideView<T>& v) {
  std::vector<T> out;
  for (std::size_t k = 0; k < v.lambda().size(); ++k) out.push_back(v.mu()[k] / v.lambda()[k]);
  return out;
}

// sum_k (w_{i+k} / w_i) f_j(u_{i+k}) ratio_k with w = mu / lambda and fv = (f_j(u_k)).
template <class T>
T series_entry(const Matrix<T>& fv, const std::vector<T>& w, const std::vector<T>& ratios, long i, long j) {
  const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
  T sum = from_int(0, fv.proto());
  for (std::size_t k = 0; k < ratios.size(); ++k) sum += w[ui + k] * fv(ui + k, uj) * ratios[k];
  return sum / w[ui];
}

template <class T>
T u_series(const SideView<T>& v, long i, long j) {
  check_index(i, j, v.m(), v.q_side ? "V" : "U");
  detail::require_nonzero_weights(*v.prob);
  return series_entry(v.Fm(), weight_ratios(v), minor_ratios(v, v.Gm(), i), i, j);
}

template <class T>
T u_det(const SideView<T>& v, long i, long j) {
  check_index(i, j, v.m(), v.q_side ? "V" : "U");
  detail::require_nonzero_weights(*v.prob);
  const long n = v.n();
  const auto& lam = v.lambda();
  const auto& mu = v.mu();
  const auto& pts = v.prob->points();
  const Matrix<T> g = v.Gm();
  const auto size = static_cast<std::size_t>(n + 2);
  Matrix<T> x(size, size, v.prob->proto());
  for (std::size_t k = 0; k < size; ++k) {
    const std::size_t ik = static_cast<std::size_t>(i) + k;
    x(k, 0) = mu[ik] / lam[ik] * v.f(j, pts[ik]);
    for (std::size_t l = 0; l <= static_cast<std::size_t>(n); ++l) x(k, l + 1) = g(ik, l);
  }
  const auto ui = static_cast<std::size_t>(i);
  const T core = detail::core_minor(g, i + 1, n + 1, v.q_side ? "F" : "G");
  return lam[ui] / mu[ui] * det(x) / core;
}

// Raw cofactors of [f; U] and the prefactor, for one side.
template <class T>
std::pair<std::vector<T>, T> condensed_side(const SideView<T>& v) {
  const long m = v.m(), n = v.n();
  const Matrix<T> g = v.Gm();
  const Matrix<T> fv = v.Fm();
  const auto w = weight_ratios(v);
  std::vector<std::vector<T>> ratios;
  T last_core = from_int(1, v.prob->proto());
  for (long i = 0; i < m; ++i) ratios.push_back(minor_ratios(v, g, i, &last_core));
  auto raw = detail::body_cofactors<T>(m, v.prob->proto(), [&](long i, long j) {
    return series_entry(fv, w, ratios[static_cast<std::size_t>(i)], i, j);
  });
  const auto um = static_cast<std::size_t>(m);
  // rows m..m+n of G: the last window's core, computed above unless m = 0
  const T core = m > 0 ? last_core : detail::core_minor(g, m, n + 1, v.q_side ? "F" : "G");
  T pref = detail::product(v.mu(), 0, um, v.prob->proto()) *
           detail::product(v.lambda(), um, um + static_cast<std::size_t>(n) + 1, v.prob->proto()) * core;
  if (v.sign() < 0) pref = -pref;
  return {std::move(raw), std::move(pref)};
}

}  // namespace

template <class T>
T condensed_U_det(const InterpolationProblem<T>& prob, long i, long j) {
  return u_det(detail::view(prob, Side::P), i, j);
}

template <class T>
T condensed_V_det(const InterpolationProblem<T>& prob, long i, long j) {
  return u_det(detail::view(prob, Side::Q), i, j);
}

template <class T>
T condensed_U(const InterpolationProblem<T>& prob, long i, long j) {
  return u_series(detail::view(prob, Side::P), i, j);
}

template <class T>
T condensed_V(const InterpolationProblem<T>& prob, long i, long j) {
  return u_series(detail::view(prob, Side::Q), i, j);
}

template <class T>
PadeSolution<T> solve_condensed(const InterpolationProblem<T>& prob) {
  detail::require_nonzero_weights(prob);
  auto [raw_p, pp] = condensed_side(detail::view(prob, Side::P));
  auto [raw_q, pq] = condensed_side(detail::view(prob, Side::Q));
  return detail::assemble(std::move(raw_p), std::move(raw_q), std::move(pp), std::move(pq), Route::Condensed22);
}

#define HYPERLAB_INSTANTIATE(T)                                                  \
  template T condensed_U_det(const InterpolationProblem<T>&, long, long);        \
  template T condensed_V_det(const InterpolationProblem<T>&, long, long);        \
  template T condensed_U(const InterpolationProblem<T>&, long, long);            \
  template T condensed_V(const InterpolationProblem<T>&, long, long);            \
  template PadeSolution<T> solve_condensed(const InterpolationProblem<T>&);

HYPERLAB_INSTANTIATE(Rational)
HYPERLAB_INSTANTIATE(Complex)

#undef HYPERLAB_INSTANTIATE

}  // namespace hyperlab
