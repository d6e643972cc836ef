#pragma once

#include <string>
#include <vector>

#include "hyperlab/linalg/determinant.hpp"
#include "hyperlab/pade/solve.hpp"

namespace hyperlab::detail {

/// One side of the problem with the roles named as for P. The Q side swaps
/// (m, n), (f, g), (lambda, mu), (a, b) <-> (c, d), (s, z) <-> (t, w) and
/// e -> delta - e.
template <class T>
struct SideView {
  const InterpolationProblem<T>* prob;
  bool q_side;

  long m() const { return q_side ? prob->n() : prob->m(); }
  long n() const { return q_side ? prob->m() : prob->n(); }
  T f(long j, const T& x) const { return q_side ? prob->g(j, x) : prob->f(j, x); }
  T g(long j, const T& x) const { return q_side ? prob->f(j, x) : prob->g(j, x); }
  const std::vector<T>& lambda() const { return q_side ? prob->mu() : prob->lambda(); }
  const std::vector<T>& mu() const { return q_side ? prob->lambda() : prob->mu(); }
  const Matrix<T>& Fm() const { return q_side ? prob->G() : prob->F(); }
  const Matrix<T>& Gm() const { return q_side ? prob->F() : prob->G(); }
  T point(long k) const { return prob->progression_point(k); }
  /// (-1)^{mn+m+n} on the Q side, 1 on the P side.
  long sign() const {
    if (!q_side) return 1;
    const long s = prob->m() * prob->n() + prob->m() + prob->n();
    return s % 2 == 0 ? 1 : -1;
  }
};

template <class T>
SideView<T> view(const InterpolationProblem<T>& prob, Side side) {
  return {&prob, side == Side::Q};
}

template <class T>
struct HgParams {
  T a, b, c, d, u;
};

template <class T>
struct VwpParams {
  BracketKind kind;
  T a, b, c, d, u, delta;
};

/// Throws WrongFamily unless the problem is a rational-HG problem on its progression.
template <class T>
HgParams<T> hg_params(const SideView<T>& v) {
  const auto* fam = std::get_if<RationalHgFamily<T>>(&v.prob->family());
  if (!fam) throw Error(ErrorCode::WrongFamily, "route needs a rational hypergeometric problem");
  if (!v.prob->on_progression()) throw Error(ErrorCode::WrongFamily, "points are not u + k");
  if (v.q_side) return {fam->c, fam->d, fam->a, fam->b, fam->u};
  return {fam->a, fam->b, fam->c, fam->d, fam->u};
}

template <class T>
VwpParams<T> vwp_params(const SideView<T>& v) {
  const auto* fam = std::get_if<VwpFamily<T>>(&v.prob->family());
  if (!fam) throw Error(ErrorCode::WrongFamily, "route needs a very-well-poised problem");
  if (!v.prob->on_progression()) throw Error(ErrorCode::WrongFamily, "points are not u + k delta");
  if (v.q_side) return {fam->kind, fam->c, fam->d, fam->a, fam->b, fam->u, fam->delta};
  return {fam->kind, fam->a, fam->b, fam->c, fam->d, fam->u, fam->delta};
}

/// The weight generator seen from this side.
template <class T>
WeightSpec<T> weight_view(const SideView<T>& v, const T& delta) {
  const auto& spec = v.prob->weight_spec();
  if (!spec) throw Error(ErrorCode::WrongFamily, "weights were not generated by a family");
  if (!v.q_side) return *spec;
  WeightSpec<T> out{spec->family, spec->t, spec->s, {}, spec->w, spec->z};
  for (const auto& e : spec->e) out.e.push_back(delta - e);
  return out;
}

template <class T>
void require_nonzero_weights(const InterpolationProblem<T>& prob) {
  for (std::size_t k = 0; k < prob.lambda().size(); ++k) {
    if (vanishes(prob.lambda()[k]) || vanishes(prob.mu()[k])) {
      throw Error(ErrorCode::ZeroWeight, "route divides by lambda_" + std::to_string(k) + ", mu_" + std::to_string(k));
    }
  }
}

template <class T>
T product(const std::vector<T>& xs, std::size_t begin, std::size_t end, const T& like) {
  T out = from_int(1, like);
  for (std::size_t i = begin; i < end; ++i) out *= xs[i];
  return out;
}

template <class T>
std::vector<T> scaled(const std::vector<T>& xs, const T& c) {
  std::vector<T> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(c * x);
  return out;
}

template <class T>
PadeSolution<T> assemble(std::vector<T> raw_p, std::vector<T> raw_q, T p_pref, T q_pref, Route route) {
  auto p = scaled(raw_p, p_pref);
  auto q = scaled(raw_q, q_pref);
  return {std::move(p), std::move(q), std::move(raw_p), std::move(raw_q), std::move(p_pref), std::move(q_pref), route};
}

/// det of rows `rows` (all columns) of x; SingularCoreMinor if it vanishes.
template <class T>
T core_minor(const Matrix<T>& x, long first, long size, const char* label) {
  const Indices rows = index_range(static_cast<std::size_t>(first), static_cast<std::size_t>(first + size));
  const Matrix<T> sub = submatrix(x, rows, index_range(0, x.cols()));
  T d = det(sub);
  if (negligible_det(sub, d)) {
    throw Error(ErrorCode::SingularCoreMinor, std::string("det ") + label + " rows " + std::to_string(first) + ".." +
                                                  std::to_string(first + size - 1) + " vanishes");
  }
  return d;
}

/// Raw cofactors of the m x (m+1) body built from entry(i, j).
template <class T, class Entry>
std::vector<T> body_cofactors(long m, const T& like, Entry entry) {
  Matrix<T> body(static_cast<std::size_t>(m), static_cast<std::size_t>(m + 1), like);
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j <= m; ++j) body(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = entry(i, j);
  }
  return top_row_cofactors(body);
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace hyperlab::detail
