#include <string>

#include "detail.hpp"

namespace hyperlab {

namespace {

using detail::SideView;
using detail::VwpParams;

template <class T>
T bf(const Bracket<T>& br, const T& x, const T& dl, long k) {
  return delta_shifted_factorial(br, x, dl, k);
}

template <class T>
T bf_pm(const Bracket<T>& br, const T& x, const T& y, const T& dl, long k) {
  return delta_shifted_factorial_pm(br, x, y, dl, k);
}

template <class T>
T divide(const T& num, const T& den, ErrorCode code, const std::string& what) {
  if (vanishes(den)) throw Error(code, what + " has a vanishing denominator");
  return num / den;
}

// vwp_term with its pole errors reported as `code`.
template <class T>
T term(const Bracket<T>& br, const T& dl, long k, const T& a0, const std::vector<T>& a, ErrorCode code) {
  try {
    return vwp_term(br, dl, k, a0, a);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PoleBeforeTermination || e.code() == ErrorCode::A0Zero) throw Error(code, e.what());
    throw;
  }
}

void check_index(long i, long j, long m, const char* name) {
  if (i < 0 || i >= m || j < 0 || j > m) {
    throw Error(ErrorCode::IndexOutOfBounds, std::string(name) + "_" + std::to_string(i) + "," + std::to_string(j) +
                                                 " out of range");
  }
}

template <class T>
T times(long k, const T& x) {
  return from_int(k, x) * x;
}

template <class T>
std::vector<T> u_params(const VwpParams<T>& h, const T& ui, long n, long j) {
  const T& dl = h.delta;
  return {times(-n - 1, dl),        ui - h.d + dl, ui + h.d + times(n, dl), ui - h.a + dl,
          ui + h.a + times(j, dl), ui + h.b,      ui - h.b + times(1 - j, dl)};
}

template <class T>
T u_entry(const SideView<T>& v, const Bracket<T>& br, long i, long j) {
  check_index(i, j, v.m(), v.q_side ? "V" : "U");
  const auto h = detail::vwp_params(v);
  const T ui = v.point(i);
  const auto params = u_params(h, ui, v.n(), j);
  const auto& lam = v.lambda();
  const auto& mu = v.mu();
  const auto si = static_cast<std::size_t>(i);
  T sum = from_int(0, h.u);
  for (long k = 0; k <= v.n() + 1; ++k) {
    const auto sk = static_cast<std::size_t>(i + k);
    sum += term(br, h.delta, k, ui + ui, params, ErrorCode::PoleInConstant) * mu[sk] * lam[si] / (lam[sk] * mu[si]);
  }
  return v.f(j, ui) * sum;
}

template <class T>
T c_constant(const Bracket<T>& br, const T& c, const T& d, const T& dl, long n) {
  T out = from_int(detail::parity_sign(detail::binomial(n + 1, 2)), c);
  for (long k = 1; k <= n; ++k) out *= bf(br, d - c, dl, k) * bf(br, c + d + times(k - 1, dl), dl, k);
  return out;
}

template <class T>
std::pair<std::vector<T>, T> krattenthaler_side(const SideView<T>& v) {
  const auto h = detail::vwp_params(v);
  const Bracket<T> br(h.kind, h.u);
  const long m = v.m(), n = v.n();
  const T& dl = h.delta;
  auto raw = detail::body_cofactors<T>(m, h.u, [&](long i, long j) { return u_entry(v, br, i, j); });
  T num = c_constant(br, h.c, h.d, dl, n), den = from_int(1, h.u);
  const T um = v.point(m);
  for (long l = 1; l <= n; ++l) num *= bf(br, um + um + times(l, dl), dl, l) * bf(br, dl, dl, l);
  for (long l = 0; l <= n; ++l) den *= bf_pm(br, h.d, v.point(m + l), dl, n);
  T pref = divide(num, den, ErrorCode::PoleInConstant, "prod [d±u_{m+l}]_n");
  const auto sm = static_cast<std::size_t>(m);
  pref *= detail::product(v.mu(), 0, sm, h.u) * detail::product(v.lambda(), sm, sm + static_cast<std::size_t>(n) + 1, h.u);
  if (v.sign() < 0) pref = -pref;
  return {std::move(raw), std::move(pref)};
}

template <class T>
WeightSpec<T> e_weights(const SideView<T>& v, const T& delta) {
  const auto spec = detail::weight_view(v, delta);
  if (spec.family != WeightFamily::VwpE && spec.family != WeightFamily::VwpESimplified) {
    throw Error(ErrorCode::WrongFamily, "reduction needs vwp-e or vwp-e-simplified weights");
  }
  return spec;
}

template <class T>
Reduction<T, VeryWellPoisedV<T>> u_reduction(const SideView<T>& v, long i, long j) {
  check_index(i, j, v.m(), v.q_side ? "V" : "U");
  const auto h = detail::vwp_params(v);
  const auto w = e_weights(v, h.delta);
  const T& dl = h.delta;
  const T ui = v.point(i);
  const long n = v.n();
  std::vector<T> a;
  if (w.family == WeightFamily::VwpE) {
    a = u_params(h, ui, n, j);
  } else {
    a = {times(-n - 1, dl), ui + h.d + times(n, dl), ui + h.a + times(j, dl), ui - h.b + times(1 - j, dl),
         ui - h.c + dl};
  }
  for (const auto& e : w.e) a.push_back(ui + e);
  return {v.f(j, ui), VeryWellPoisedV<T>{h.kind, dl, ui + ui, std::move(a), w.w / w.z}};
}

template <class T>
std::vector<T> kernel_params(const VwpParams<T>& h, long big_n, long i) {
  const T& dl = h.delta;
  return {times(-big_n, dl), h.u - h.c + times(1 + i, dl), h.u + h.d + times(big_n - 1 - i, dl), h.u + h.c,
          h.u - h.d + dl};
}

template <class T>
KernelData<T> kernel(const SideView<T>& v) {
  const auto h = detail::vwp_params(v);
  const Bracket<T> br(h.kind, h.u);
  const long m = v.m(), n = v.n(), big_n = m + n;
  const auto size = static_cast<std::size_t>(big_n + 1);
  Matrix<T> l(size, size, h.u);
  for (long i = 0; i <= big_n; ++i) {
    const auto params = kernel_params(h, big_n, i);
    for (long j = 0; j <= big_n; ++j) {
      l(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          term(br, h.delta, j, h.u + h.u, params, ErrorCode::PoleInL);
    }
  }
  const Matrix<T> g = v.Gm();
  Matrix<T> lg = multiply(l, g);
  for (std::size_t i = 0; i < lg.rows(); ++i) {
    for (std::size_t j = 0; j < lg.cols() && static_cast<long>(i + j) < big_n; ++j) {
      bool zero = is_zero(lg(i, j));
      if constexpr (std::is_same_v<T, Complex>) {
        BigFloat scale(0L, h.u.precision());
        for (std::size_t k = 0; k < size; ++k) scale += abs(l(i, k) * g(k, j));
        zero = vanishes_relative(lg(i, j), scale);
      }
      if (!zero) {
        throw Error(ErrorCode::AntiTriangularityViolated,
                    "(LG)_" + std::to_string(i) + "," + std::to_string(j) + " != 0 with i+j < N");
      }
    }
  }
  const Indices rows = index_range(static_cast<std::size_t>(m), static_cast<std::size_t>(m + n + 1));
  const T det_m = minor_det(lg, rows, index_range(0, lg.cols()));
  const T det_l = det(l);
  if (negligible_det(l, det_l)) throw Error(ErrorCode::SingularCoreMinor, "det L vanishes");
  T k = det_m / det_l;
  return {std::move(l), std::move(lg), det_m, det_l, std::move(k)};
}

template <class T>
std::vector<T> phi_params(const VwpParams<T>& h, long big_n, long i, long j) {
  auto a = kernel_params(h, big_n, i);
  const T& dl = h.delta;
  for (auto x : {h.u + h.a + times(j, dl), h.u - h.b + times(1 - j, dl), h.u - h.a + dl, h.u + h.b}) a.push_back(x);
  return a;
}

template <class T>
T phi_entry(const SideView<T>& v, const Bracket<T>& br, long i, long j) {
  check_index(i, j, v.m(), v.q_side ? "Psi" : "Phi");
  const auto h = detail::vwp_params(v);
  const long big_n = v.m() + v.n();
  const auto params = phi_params(h, big_n, i, j);
  const auto& lam = v.lambda();
  const auto& mu = v.mu();
  T sum = from_int(0, h.u);
  for (long k = 0; k <= big_n; ++k) {
    const auto sk = static_cast<std::size_t>(k);
    sum += term(br, h.delta, k, h.u + h.u, params, ErrorCode::PoleInL) * mu[sk] / lam[sk];
  }
  const T pre = divide(bf_pm(br, h.a, h.u, h.delta, j), bf_pm(br, h.b, h.u, h.delta, j), ErrorCode::PoleInConstant,
                       "[b±u]_j");
  return pre * sum;
}

template <class T>
Reduction<T, VeryWellPoisedV<T>> phi_reduction(const SideView<T>& v, long i, long j) {
  check_index(i, j, v.m(), v.q_side ? "Psi" : "Phi");
  const auto h = detail::vwp_params(v);
  const auto w = e_weights(v, h.delta);
  const Bracket<T> br(h.kind, h.u);
  const T& dl = h.delta;
  const long big_n = v.m() + v.n();
  std::vector<T> a;
  if (w.family == WeightFamily::VwpE) {
    a = phi_params(h, big_n, i, j);
  } else {
    a = {times(-big_n, dl), h.u - h.c + times(1 + i, dl), h.u + h.d + times(big_n - 1 - i, dl),
         h.u + h.a + times(j, dl), h.u - h.b + times(1 - j, dl)};
  }
  for (const auto& e : w.e) a.push_back(h.u + e);
  const T pre = divide(bf_pm(br, h.a, h.u, dl, j), bf_pm(br, h.b, h.u, dl, j), ErrorCode::PoleInConstant, "[b±u]_j");
  return {pre, VeryWellPoisedV<T>{h.kind, dl, h.u + h.u, std::move(a), w.w / w.z}};
}

template <class T>
std::pair<std::vector<T>, T> ft_side(const SideView<T>& v) {
  const auto h = detail::vwp_params(v);
  const Bracket<T> br(h.kind, h.u);
  const auto kd = kernel(v);
  auto raw = detail::body_cofactors<T>(v.m(), h.u, [&](long i, long j) { return phi_entry(v, br, i, j); });
  T pref = kd.K * detail::product(v.lambda(), 0, v.lambda().size(), h.u);
  if (v.sign() < 0) pref = -pref;
  return {std::move(raw), std::move(pref)};
}

template <class T>
Bracket<T> bracket_of(const InterpolationProblem<T>& prob) {
  const auto h = detail::vwp_params(detail::view(prob, Side::P));
  return Bracket<T>(h.kind, h.u);
}

}  // namespace

template <class T>
T vwp_U(const InterpolationProblem<T>& prob, long i, long j) {
  detail::require_nonzero_weights(prob);
  return u_entry(detail::view(prob, Side::P), bracket_of(prob), i, j);
}

template <class T>
T vwp_V(const InterpolationProblem<T>& prob, long i, long j) {
  detail::require_nonzero_weights(prob);
  return u_entry(detail::view(prob, Side::Q), bracket_of(prob), i, j);
}

template <class T>
T vwp_C(const Bracket<T>& bracket, const T& c, const T& d, const T& delta, long n) {
  return c_constant(bracket, c, d, delta, n);
}

template <class T>
PadeSolution<T> solve_vwp_krattenthaler(const InterpolationProblem<T>& prob) {
  detail::require_nonzero_weights(prob);
  auto [raw_p, pp] = krattenthaler_side(detail::view(prob, Side::P));
  auto [raw_q, pq] = krattenthaler_side(detail::view(prob, Side::Q));
  return detail::assemble(std::move(raw_p), std::move(raw_q), std::move(pp), std::move(pq), Route::VWP41);
}

template <class T>
Reduction<T, VeryWellPoisedV<T>> vwp_U_reduction(const InterpolationProblem<T>& prob, long i, long j) {
  return u_reduction(detail::view(prob, Side::P), i, j);
}

template <class T>
Reduction<T, VeryWellPoisedV<T>> vwp_V_reduction(const InterpolationProblem<T>& prob, long i, long j) {
  return u_reduction(detail::view(prob, Side::Q), i, j);
}

template <class T>
KernelData<T> vwp_ft_kernel(const InterpolationProblem<T>& prob, Side side) {
  return kernel(detail::view(prob, side));
}

template <class T>
T vwp_det_M_closed(const Bracket<T>& br, const T& c, const T& d, const T& u, const T& dl, long big_n, long degree) {
  T out = from_int(detail::parity_sign(detail::binomial(degree + 1, 2)), u);
  for (long j = 0; j <= degree; ++j) {
    const T num = bf_pm(br, c, u, dl, j) * bf(br, c + d - times(big_n + 1 - 2 * j, dl), dl, big_n) *
                  bf(br, times(-big_n, dl), dl, big_n) * bf(br, u + u + dl, dl, big_n) * bf(br, d - c, dl, big_n);
    const T den = bf_pm(br, d, u, dl, j) * bf(br, u + d + times(j, dl), dl, big_n) *
                  bf(br, u - c + times(1 - j, dl), dl, big_n) * bf(br, u + c - times(big_n - j, dl), dl, big_n) *
                  bf(br, d - u - times(big_n + 1 - j, dl), dl, big_n);
    out *= divide(num, den, ErrorCode::PoleInConstant, "det M");
  }
  return out;
}

template <class T>
T vwp_det_L_closed(const Bracket<T>& br, const T& c, const T& d, const T& u, const T& dl, long big_n) {
  T num = from_int(1, u), den = from_int(1, u);
  for (long j = 1; j <= big_n; ++j) {
    num *= bf(br, dl, dl, j) * bf(br, c + d + times(big_n - 1 - 2 * j, dl), dl, j) *
           bf(br, c - d - times(big_n - 1, dl), dl, j) * bf(br, u + u + times(j, dl), dl, j);
  }
  for (long i = 0; i <= big_n; ++i) {
    den *= bf(br, u + c - times(i, dl), dl, big_n) * bf(br, u - d - times(big_n - 2 - i, dl), dl, big_n);
  }
  T out = divide(num, den, ErrorCode::PoleInL, "det L");
  const std::vector<T> params{times(-big_n, dl), u + c, u - d + dl};
  for (long j = 0; j <= big_n; ++j) out *= term(br, dl, j, u + u, params, ErrorCode::PoleInL);
  return out;
}

template <class T>
T vwp_Phi(const InterpolationProblem<T>& prob, long i, long j) {
  detail::require_nonzero_weights(prob);
  return phi_entry(detail::view(prob, Side::P), bracket_of(prob), i, j);
}

template <class T>
T vwp_Psi(const InterpolationProblem<T>& prob, long i, long j) {
  detail::require_nonzero_weights(prob);
  return phi_entry(detail::view(prob, Side::Q), bracket_of(prob), i, j);
}

template <class T>
Reduction<T, VeryWellPoisedV<T>> vwp_Phi_reduction(const InterpolationProblem<T>& prob, long i, long j) {
  return phi_reduction(detail::view(prob, Side::P), i, j);
}

template <class T>
Reduction<T, VeryWellPoisedV<T>> vwp_Psi_reduction(const InterpolationProblem<T>& prob, long i, long j) {
  return phi_reduction(detail::view(prob, Side::Q), i, j);
}

template <class T>
PadeSolution<T> solve_vwp_ft(const InterpolationProblem<T>& prob) {
  detail::require_nonzero_weights(prob);
  auto [raw_p, pp] = ft_side(detail::view(prob, Side::P));
  auto [raw_q, pq] = ft_side(detail::view(prob, Side::Q));
  return detail::assemble(std::move(raw_p), std::move(raw_q), std::move(pp), std::move(pq), Route::VWP42);
}

#define HYPERLAB_INSTANTIATE(T)                                                                                 \
  template T vwp_U(const InterpolationProblem<T>&, long, long);                                                 \
  template T vwp_V(const InterpolationProblem<T>&, long, long);                                                 \
  template T vwp_C(const Bracket<T>&, const T&, const T&, const T&, long);                                      \
  template PadeSolution<T> solve_vwp_krattenthaler(const InterpolationProblem<T>&);                             \
  template Reduction<T, VeryWellPoisedV<T>> vwp_U_reduction(const InterpolationProblem<T>&, long, long);        \
  template Reduction<T, VeryWellPoisedV<T>> vwp_V_reduction(const InterpolationProblem<T>&, long, long);        \
  template KernelData<T> vwp_ft_kernel(const InterpolationProblem<T>&, Side);                                   \
  template T vwp_det_M_closed(const Bracket<T>&, const T&, const T&, const T&, const T&, long, long);            \
  template T vwp_det_L_closed(const Bracket<T>&, const T&, const T&, const T&, const T&, long);                 \
  template T vwp_Phi(const InterpolationProblem<T>&, long, long);                                               \
  template T vwp_Psi(const InterpolationProblem<T>&, long, long);                                               \
  template Reduction<T, VeryWellPoisedV<T>> vwp_Phi_reduction(const InterpolationProblem<T>&, long, long);      \
  template Reduction<T, VeryWellPoisedV<T>> vwp_Psi_reduction(const InterpolationProblem<T>&, long, long);      \
  template PadeSolution<T> solve_vwp_ft(const InterpolationProblem<T>&);

HYPERLAB_INSTANTIATE(Rational)
HYPERLAB_INSTANTIATE(Complex)

#undef HYPERLAB_INSTANTIATE

}  // namespace hyperlab
