#include <string>

#include "detail.hpp"

namespace hyperlab {

namespace {

using detail::SideView;

template <class T>
T poch(const T& a, long k) {
  return shifted_factorial(a, k);
}

template <class T>
T divide(const T& num, const T& den, ErrorCode code, const std::string& what) {
  if (vanishes(den)) throw Error(code, what + " has a vanishing denominator");
  return num / den;
}

template <class T>
T factorial(long k, const T& like) {
  return poch(from_int(1, like), k);
}

void check_index(long i, long j, long m, const char* name) {
  if (i < 0 || i >= m || j < 0 || j > m) {
    throw Error(ErrorCode::IndexOutOfBounds, std::string(name) + "_" + std::to_string(i) + "," + std::to_string(j) +
                                                 " out of range");
  }
}

template <class T>
T u_entry(const SideView<T>& v, long i, long j) {
  check_index(i, j, v.m(), v.q_side ? "V" : "U");
  const auto h = detail::hg_params(v);
  const long n = v.n();
  const T ui = v.point(i), uij = v.point(i + j), uin = v.point(i + n);
  const auto& lam = v.lambda();
  const auto& mu = v.mu();
  const auto si = static_cast<std::size_t>(i);
  T sum = from_int(0, h.u);
  const T nn = from_int(-n - 1, h.u);
  for (long k = 0; k <= n + 1; ++k) {
    const auto sk = static_cast<std::size_t>(i + k);
    const T num = poch(nn, k) * poch(h.d + uin, k) * poch(h.a + uij, k) * poch(h.b + ui, k) * mu[sk] * lam[si];
    const T den = factorial(k, h.u) * poch(h.d + ui, k) * poch(h.a + ui, k) * poch(h.b + uij, k) * lam[sk] * mu[si];
    sum += divide(num, den, ErrorCode::PoleInConstant, "U term k=" + std::to_string(k));
  }
  return divide(poch(h.a + ui, j), poch(h.b + ui, j), ErrorCode::PoleInConstant, "(b+u_i)_j") * sum;
}

template <class T>
std::pair<std::vector<T>, T> krattenthaler_side(const SideView<T>& v) {
  const auto h = detail::hg_params(v);
  const long m = v.m(), n = v.n();
  auto raw = detail::body_cofactors<T>(m, h.u, [&](long i, long j) { return u_entry(v, i, j); });
  T num = from_int(1, h.u), den = from_int(1, h.u);
  for (long l = 1; l <= n; ++l) num *= factorial(l, h.u) * poch(h.d - h.c, l);
  for (long l = 0; l <= n; ++l) den *= poch(h.d + v.point(m + l), n);
  T pref = divide(num, den, ErrorCode::PoleInConstant, "prod (d+u_{m+i})_n");
  const auto um = static_cast<std::size_t>(m);
  pref *= detail::product(v.mu(), 0, um, h.u) * detail::product(v.lambda(), um, um + static_cast<std::size_t>(n) + 1, h.u);
  if (v.sign() < 0) pref = -pref;
  return {std::move(raw), std::move(pref)};
}

template <class T>
std::vector<T> shifted(const std::vector<T>& xs, long i) {
  std::vector<T> out;
  for (const auto& x : xs) out.push_back(x + from_int(i, x));
  return out;
}

template <class T>
void append(std::vector<T>& to, const std::vector<T>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

template <class T>
WeightSpec<T> st_weights(const SideView<T>& v) {
  const auto spec = detail::weight_view(v, v.prob->proto());
  if (spec.family != WeightFamily::PlainST && spec.family != WeightFamily::SimplifiedST) {
    throw Error(ErrorCode::WrongFamily, "reduction needs plain-st or simplified-st weights");
  }
  return spec;
}

template <class T>
Reduction<T, GeneralizedF<T>> u_reduction(const SideView<T>& v, long i, long j) {
  check_index(i, j, v.m(), v.q_side ? "V" : "U");
  const auto h = detail::hg_params(v);
  const auto w = st_weights(v);
  const long n = v.n();
  const T ui = v.point(i), uij = v.point(i + j), uin = v.point(i + n);
  GeneralizedF<T> f{{from_int(-n - 1, h.u), h.d + uin, h.a + uij}, {}, w.w / w.z};
  if (w.family == WeightFamily::PlainST) {
    f.upper.push_back(h.b + ui);
    f.lower = {h.d + ui, h.a + ui, h.b + uij};
  } else {
    f.lower = {h.c + ui, h.b + uij};
  }
  append(f.upper, shifted(w.t, i));
  append(f.lower, shifted(w.s, i));
  return {divide(poch(h.a + ui, j), poch(h.b + ui, j), ErrorCode::PoleInConstant, "(b+u_i)_j"), std::move(f)};
}

// Saalschutz kernel row i, column j.
template <class T>
T kernel_entry(const detail::HgParams<T>& h, long big_n, long i, long j) {
  const T num = poch(from_int(-big_n, h.u), j) * poch(h.d + h.u + from_int(big_n - 1 - i, h.u), j) * poch(h.c + h.u, j);
  const T den = factorial(j, h.u) * poch(h.c + h.u - from_int(i, h.u), j) * poch(h.d + h.u, j);
  return divide(num, den, ErrorCode::PoleInL, "L_" + std::to_string(i) + "," + std::to_string(j));
}

template <class T>
KernelData<T> kernel(const SideView<T>& v) {
  const auto h = detail::hg_params(v);
  const long m = v.m(), n = v.n(), big_n = m + n;
  const auto size = static_cast<std::size_t>(big_n + 1);
  Matrix<T> l(size, size, h.u);
  for (long i = 0; i <= big_n; ++i) {
    for (long j = 0; j <= big_n; ++j) l(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = kernel_entry(h, big_n, i, j);
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
T phi_entry(const SideView<T>& v, long i, long j) {
  check_index(i, j, v.m(), v.q_side ? "Psi" : "Phi");
  const auto h = detail::hg_params(v);
  const long big_n = v.m() + v.n();
  const auto& lam = v.lambda();
  const auto& mu = v.mu();
  const T shift_i = from_int(i, h.u), shift_j = from_int(j, h.u);
  T sum = from_int(0, h.u);
  for (long k = 0; k <= big_n; ++k) {
    const auto sk = static_cast<std::size_t>(k);
    const T num = poch(from_int(-big_n, h.u), k) * poch(h.d + h.u + from_int(big_n - 1 - i, h.u), k) *
                  poch(h.c + h.u, k) * poch(h.a + h.u + shift_j, k) * poch(h.b + h.u, k) * mu[sk];
    const T den = factorial(k, h.u) * poch(h.c + h.u - shift_i, k) * poch(h.d + h.u, k) *
                  poch(h.b + h.u + shift_j, k) * poch(h.a + h.u, k) * lam[sk];
    sum += divide(num, den, ErrorCode::PoleInL, "Phi term k=" + std::to_string(k));
  }
  return divide(poch(h.a + h.u, j), poch(h.b + h.u, j), ErrorCode::PoleInConstant, "(b+u)_j") * sum;
}

template <class T>
Reduction<T, GeneralizedF<T>> phi_reduction(const SideView<T>& v, long i, long j) {
  check_index(i, j, v.m(), v.q_side ? "Psi" : "Phi");
  const auto h = detail::hg_params(v);
  const auto w = st_weights(v);
  const long big_n = v.m() + v.n();
  const T shift_i = from_int(i, h.u), shift_j = from_int(j, h.u);
  GeneralizedF<T> f{{from_int(-big_n, h.u), h.d + h.u + from_int(big_n - 1 - i, h.u)}, {h.c + h.u - shift_i},
                    w.w / w.z};
  if (w.family == WeightFamily::PlainST) {
    append(f.upper, std::vector<T>{h.c + h.u, h.a + h.u + shift_j, h.b + h.u});
    append(f.lower, std::vector<T>{h.d + h.u, h.b + h.u + shift_j, h.a + h.u});
  } else {
    f.upper.push_back(h.a + h.u + shift_j);
    f.lower.push_back(h.b + h.u + shift_j);
  }
  append(f.upper, w.t);
  append(f.lower, w.s);
  return {divide(poch(h.a + h.u, j), poch(h.b + h.u, j), ErrorCode::PoleInConstant, "(b+u)_j"), std::move(f)};
}

template <class T>
std::pair<std::vector<T>, T> saalschutz_side(const SideView<T>& v) {
  const auto kd = kernel(v);
  auto raw = detail::body_cofactors<T>(v.m(), v.prob->proto(), [&](long i, long j) { return phi_entry(v, i, j); });
  T pref = kd.K * detail::product(v.lambda(), 0, v.lambda().size(), v.prob->proto());
  if (v.sign() < 0) pref = -pref;
  return {std::move(raw), std::move(pref)};
}

}  // namespace

template <class T>
T hg_U(const InterpolationProblem<T>& prob, long i, long j) {
  detail::require_nonzero_weights(prob);
  return u_entry(detail::view(prob, Side::P), i, j);
}

template <class T>
T hg_V(const InterpolationProblem<T>& prob, long i, long j) {
  detail::require_nonzero_weights(prob);
  return u_entry(detail::view(prob, Side::Q), i, j);
}

template <class T>
PadeSolution<T> solve_hg_krattenthaler(const InterpolationProblem<T>& prob) {
  detail::require_nonzero_weights(prob);
  auto [raw_p, pp] = krattenthaler_side(detail::view(prob, Side::P));
  auto [raw_q, pq] = krattenthaler_side(detail::view(prob, Side::Q));
  return detail::assemble(std::move(raw_p), std::move(raw_q), std::move(pp), std::move(pq), Route::HG31);
}

template <class T>
Reduction<T, GeneralizedF<T>> hg_U_reduction(const InterpolationProblem<T>& prob, long i, long j) {
  return u_reduction(detail::view(prob, Side::P), i, j);
}

template <class T>
Reduction<T, GeneralizedF<T>> hg_V_reduction(const InterpolationProblem<T>& prob, long i, long j) {
  return u_reduction(detail::view(prob, Side::Q), i, j);
}

template <class T>
KernelData<T> hg_saalschutz_kernel(const InterpolationProblem<T>& prob, Side side) {
  return kernel(detail::view(prob, side));
}

template <class T>
T hg_det_M_closed(const T& c, const T& d, const T& u, long big_n, long degree) {
  T out = from_int(detail::parity_sign(detail::binomial(degree + 1, 2)), u);
  const T nn = from_int(-big_n, u);
  for (long j = 0; j <= degree; ++j) {
    const T num = poch(d - c, big_n) * poch(nn, big_n) * poch(c + u, j);
    const T den = poch(c + u - from_int(big_n - j, u), big_n) * poch(d + u + from_int(j, u), big_n) * poch(d + u, j);
    out *= divide(num, den, ErrorCode::PoleInConstant, "det M");
  }
  return out;
}

template <class T>
T hg_det_L_closed(const T& c, const T& d, const T& u, long big_n) {
  T out = from_int(detail::parity_sign(detail::binomial(big_n + 1, 2)), u);
  const T nn = from_int(-big_n, u);
  for (long j = 0; j <= big_n; ++j) {
    const T num = poch(c - d - from_int(big_n - 1, u), j) * poch(nn, j) * poch(c + u, j);
    const T den = poch(c + u - from_int(j, u), big_n) * poch(d + u, j);
    out *= divide(num, den, ErrorCode::PoleInL, "det L");
  }
  return out;
}

template <class T>
T hg_Phi(const InterpolationProblem<T>& prob, long i, long j) {
  detail::require_nonzero_weights(prob);
  return phi_entry(detail::view(prob, Side::P), i, j);
}

template <class T>
T hg_Psi(const InterpolationProblem<T>& prob, long i, long j) {
  detail::require_nonzero_weights(prob);
  return phi_entry(detail::view(prob, Side::Q), i, j);
}

template <class T>
Reduction<T, GeneralizedF<T>> hg_Phi_reduction(const InterpolationProblem<T>& prob, long i, long j) {
  return phi_reduction(detail::view(prob, Side::P), i, j);
}

template <class T>
Reduction<T, GeneralizedF<T>> hg_Psi_reduction(const InterpolationProblem<T>& prob, long i, long j) {
  return phi_reduction(detail::view(prob, Side::Q), i, j);
}

template <class T>
PadeSolution<T> solve_hg_saalschutz(const InterpolationProblem<T>& prob) {
  detail::require_nonzero_weights(prob);
  auto [raw_p, pp] = saalschutz_side(detail::view(prob, Side::P));
  auto [raw_q, pq] = saalschutz_side(detail::view(prob, Side::Q));
  return detail::assemble(std::move(raw_p), std::move(raw_q), std::move(pp), std::move(pq), Route::HG32);
}

#define HYPERLAB_INSTANTIATE(T)                                                                               \
  template T hg_U(const InterpolationProblem<T>&, long, long);                                                \
  template T hg_V(const InterpolationProblem<T>&, long, long);                                                \
  template PadeSolution<T> solve_hg_krattenthaler(const InterpolationProblem<T>&);                            \
  template Reduction<T, GeneralizedF<T>> hg_U_reduction(const InterpolationProblem<T>&, long, long);          \
  template Reduction<T, GeneralizedF<T>> hg_V_reduction(const InterpolationProblem<T>&, long, long);          \
  template KernelData<T> hg_saalschutz_kernel(const InterpolationProblem<T>&, Side);                          \
  template T hg_det_M_closed(const T&, const T&, const T&, long, long);                                       \
  template T hg_det_L_closed(const T&, const T&, const T&, long);                                             \
  template T hg_Phi(const InterpolationProblem<T>&, long, long);                                              \
  template T hg_Psi(const InterpolationProblem<T>&, long, long);                                              \
  template Reduction<T, GeneralizedF<T>> hg_Phi_reduction(const InterpolationProblem<T>&, long, long);        \
  template Reduction<T, GeneralizedF<T>> hg_Psi_reduction(const InterpolationProblem<T>&, long, long);        \
  template PadeSolution<T> solve_hg_saalschutz(const InterpolationProblem<T>&);

HYPERLAB_INSTANTIATE(Rational)
HYPERLAB_INSTANTIATE(Complex)

#undef HYPERLAB_INSTANTIATE

}  // namespace hyperlab
