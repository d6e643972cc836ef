#include "hyperlab/pade/problem.hpp"

#include <memory>
#include <string>

#include "hyperlab/linalg/determinant.hpp"

namespace hyperlab {

std::string_view to_string(WeightFamily family) noexcept {
  switch (family) {
    case WeightFamily::PlainST: return "plain-st";
    case WeightFamily::SimplifiedST: return "simplified-st";
    case WeightFamily::VwpE: return "vwp-e";
    case WeightFamily::VwpESimplified: return "vwp-e-simplified";
  }
  return "?";
}

namespace {

template <class T>
bool same_point(const T& x, const T& y) {
  return vanishes(x - y);
}

template <class T>
T progression(const ProblemFamily<T>& family, long k) {
  if (const auto* hg = std::get_if<RationalHgFamily<T>>(&family)) return hg->u + from_int(k, hg->u);
  if (const auto* vw = std::get_if<VwpFamily<T>>(&family)) return vw->u + from_int(k, vw->u) * vw->delta;
  throw Error(ErrorCode::WrongFamily, "problem has no parametrized family");
}

}  // namespace

template <class T>
InterpolationProblem<T>::InterpolationProblem(long m, long n, Basis f, Basis g, std::vector<T> points,
                                              std::vector<T> lambda, std::vector<T> mu, ProblemFamily<T> family,
                                              std::optional<WeightSpec<T>> weight_spec)
    : m_(m),
      n_(n),
      f_(std::move(f)),
      g_(std::move(g)),
      points_(std::move(points)),
      lambda_(std::move(lambda)),
      mu_(std::move(mu)),
      family_(std::move(family)),
      weight_spec_(std::move(weight_spec)) {
  if (m_ < 0 || n_ < 0) throw Error(ErrorCode::LengthMismatch, "degrees must be nonnegative");
  const auto count = static_cast<std::size_t>(m_ + n_ + 1);
  if (points_.size() != count || lambda_.size() != count || mu_.size() != count) {
    throw Error(ErrorCode::LengthMismatch, "need N+1 = " + std::to_string(count) + " points and weight pairs");
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (same_point(points_[i], points_[j])) {
        throw Error(ErrorCode::DuplicatePoints, "u_" + std::to_string(i) + " = u_" + std::to_string(j));
      }
    }
    if (is_zero(lambda_[i]) && is_zero(mu_[i])) {
      throw Error(ErrorCode::ZeroWeight, "lambda_" + std::to_string(i) + " = mu_" + std::to_string(i) + " = 0");
    }
  }
  fv_ = basis_values(f_, m_);
  gv_ = basis_values(g_, n_);
}

template <class T>
bool InterpolationProblem<T>::on_progression() const {
  if (std::holds_alternative<std::monostate>(family_)) return false;
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (!(points_[k] == progression_point(static_cast<long>(k)))) return false;
  }
  return true;
}

template <class T>
T InterpolationProblem<T>::progression_point(long k) const {
  return progression(family_, k);
}

template <class T>
Matrix<T> InterpolationProblem<T>::basis_values(const Basis& b, long degree) const {
  Matrix<T> out(points_.size(), static_cast<std::size_t>(degree + 1), proto());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = b(static_cast<long>(j), points_[i]);
  }
  return out;
}

template <class T>
InterpolationProblem<T> InterpolationProblem<T>::with_weights(std::vector<T> lambda, std::vector<T> mu) const {
  return InterpolationProblem(m_, n_, f_, g_, points_, std::move(lambda), std::move(mu), family_);
}

template <class T>
std::pair<std::vector<T>, std::vector<T>> generate_weights(const ProblemFamily<T>& family, long count,
                                                           const WeightSpec<T>& spec) {
  using F = WeightFamily;
  std::vector<T> lambda, mu;
  lambda.reserve(static_cast<std::size_t>(count));
  mu.reserve(static_cast<std::size_t>(count));

  const bool bracket_family = spec.family == F::VwpE || spec.family == F::VwpESimplified;
  const auto* hg = std::get_if<RationalHgFamily<T>>(&family);
  const auto* vw = std::get_if<VwpFamily<T>>(&family);
  if (bracket_family && !vw) throw Error(ErrorCode::WrongFamily, "bracket weights need a very-well-poised problem");
  if (spec.family == F::SimplifiedST && !hg) {
    throw Error(ErrorCode::WrongFamily, "simplified-st weights need a rational hypergeometric problem");
  }
  if (spec.family == F::PlainST && vw) throw Error(ErrorCode::WrongFamily, "plain-st weights on a bracket problem");
  if (!bracket_family && spec.s.size() != spec.t.size()) {
    throw Error(ErrorCode::LengthMismatch, "s and t must have the same length");
  }

  if (bracket_family) {
    const Bracket<T> br(vw->kind, vw->u);
    const T& u = vw->u;
    const T& dl = vw->delta;
    for (long k = 0; k < count; ++k) {
      T l = pow(spec.z, k), m = pow(spec.w, k);
      for (const auto& e : spec.e) {
        l *= delta_shifted_factorial(br, u - e + dl, dl, k);
        m *= delta_shifted_factorial(br, u + e, dl, k);
      }
      if (spec.family == F::VwpESimplified) {
        l *= delta_shifted_factorial(br, u - vw->a + dl, dl, k) * delta_shifted_factorial(br, u + vw->b, dl, k) *
             delta_shifted_factorial(br, u + vw->c, dl, k) * delta_shifted_factorial(br, u - vw->d + dl, dl, k);
        m *= delta_shifted_factorial(br, u + vw->a, dl, k) * delta_shifted_factorial(br, u - vw->b + dl, dl, k) *
             delta_shifted_factorial(br, u - vw->c + dl, dl, k) * delta_shifted_factorial(br, u + vw->d, dl, k);
      }
      lambda.push_back(std::move(l));
      mu.push_back(std::move(m));
    }
  } else {
    for (long k = 0; k < count; ++k) {
      T l = pow(spec.z, k), m = pow(spec.w, k);
      for (std::size_t r = 0; r < spec.s.size(); ++r) {
        l *= shifted_factorial(spec.s[r], k);
        m *= shifted_factorial(spec.t[r], k);
      }
      if (spec.family == F::SimplifiedST) {
        l *= shifted_factorial(hg->b + hg->u, k) * shifted_factorial(hg->c + hg->u, k);
        m *= shifted_factorial(hg->a + hg->u, k) * shifted_factorial(hg->d + hg->u, k);
      }
      lambda.push_back(std::move(l));
      mu.push_back(std::move(m));
    }
  }
  for (long k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    if (vanishes(lambda[idx]) || vanishes(mu[idx])) {
      throw Error(ErrorCode::ZeroWeight, std::string(to_string(spec.family)) + " weight vanishes at k=" +
                                             std::to_string(k));
    }
  }
  return {std::move(lambda), std::move(mu)};
}

namespace {

template <class T>
std::vector<T> hg_points(const T& u, long count) {
  std::vector<T> pts;
  for (long k = 0; k < count; ++k) pts.push_back(u + from_int(k, u));
  return pts;
}

template <class T>
InterpolationProblem<T> make_hg(const T& a, const T& b, const T& c, const T& d, const T& u, long m, long n,
                                std::vector<T> lambda, std::vector<T> mu, std::optional<WeightSpec<T>> spec) {
  if (m < 0 || n < 0) throw Error(ErrorCode::LengthMismatch, "degrees must be nonnegative");
  const auto pts = hg_points(u, m + n + 1);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (vanishes(shifted_factorial(b + pts[k], m))) {
      throw Error(ErrorCode::PoleAtNode, "(b + u_" + std::to_string(k) + ")_" + std::to_string(m) + " = 0");
    }
    if (vanishes(shifted_factorial(d + pts[k], n))) {
      throw Error(ErrorCode::PoleAtNode, "(d + u_" + std::to_string(k) + ")_" + std::to_string(n) + " = 0");
    }
  }
  auto f = [a, b](long j, const T& x) { return shifted_factorial(a + x, j) / shifted_factorial(b + x, j); };
  auto g = [c, d](long j, const T& x) { return shifted_factorial(c + x, j) / shifted_factorial(d + x, j); };
  return InterpolationProblem<T>(m, n, f, g, pts, std::move(lambda), std::move(mu),
                                 RationalHgFamily<T>{a, b, c, d, u}, std::move(spec));
}

template <class T>
InterpolationProblem<T> make_vwp(const BracketKind& kind, const T& a, const T& b, const T& c, const T& d, const T& u,
                                 const T& delta, long m, long n, std::vector<T> lambda, std::vector<T> mu,
                                 std::optional<WeightSpec<T>> spec) {
  if (m < 0 || n < 0) throw Error(ErrorCode::LengthMismatch, "degrees must be nonnegative");
  if (vanishes(delta)) throw Error(ErrorCode::DuplicatePoints, "delta = 0 makes all points coincide");
  auto br = std::make_shared<const Bracket<T>>(kind, u);
  std::vector<T> pts;
  for (long k = 0; k <= m + n; ++k) pts.push_back(u + from_int(k, u) * delta);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (vanishes(delta_shifted_factorial_pm(*br, b, pts[k], delta, m))) {
      throw Error(ErrorCode::PoleAtNode, "[b ± u_" + std::to_string(k) + "]_" + std::to_string(m) + " = 0");
    }
    if (vanishes(delta_shifted_factorial_pm(*br, d, pts[k], delta, n))) {
      throw Error(ErrorCode::PoleAtNode, "[d ± u_" + std::to_string(k) + "]_" + std::to_string(n) + " = 0");
    }
  }
  auto f = [br, a, b, delta](long j, const T& x) {
    return delta_shifted_factorial_pm(*br, a, x, delta, j) / delta_shifted_factorial_pm(*br, b, x, delta, j);
  };
  auto g = [br, c, d, delta](long j, const T& x) {
    return delta_shifted_factorial_pm(*br, c, x, delta, j) / delta_shifted_factorial_pm(*br, d, x, delta, j);
  };
  return InterpolationProblem<T>(m, n, f, g, std::move(pts), std::move(lambda), std::move(mu),
                                 VwpFamily<T>{kind, a, b, c, d, u, delta}, std::move(spec));
}

}  // namespace

template <class T>
InterpolationProblem<T> build_rational_hg_problem(const T& a, const T& b, const T& c, const T& d, const T& u, long m,
                                                  long n, const WeightSpec<T>& weights) {
  auto [lambda, mu] = generate_weights(ProblemFamily<T>(RationalHgFamily<T>{a, b, c, d, u}), m + n + 1, weights);
  return make_hg<T>(a, b, c, d, u, m, n, std::move(lambda), std::move(mu), weights);
}

template <class T>
InterpolationProblem<T> build_rational_hg_problem(const T& a, const T& b, const T& c, const T& d, const T& u, long m,
                                                  long n, std::vector<T> lambda, std::vector<T> mu) {
  return make_hg<T>(a, b, c, d, u, m, n, std::move(lambda), std::move(mu), std::nullopt);
}

template <class T>
InterpolationProblem<T> build_vwp_problem(const BracketKind& kind, const T& a, const T& b, const T& c, const T& d,
                                          const T& u, const T& delta, long m, long n, const WeightSpec<T>& weights) {
  if (vanishes(delta)) throw Error(ErrorCode::DuplicatePoints, "delta = 0 makes all points coincide");
  auto [lambda, mu] =
      generate_weights(ProblemFamily<T>(VwpFamily<T>{kind, a, b, c, d, u, delta}), m + n + 1, weights);
  return make_vwp<T>(kind, a, b, c, d, u, delta, m, n, std::move(lambda), std::move(mu), weights);
}

template <class T>
InterpolationProblem<T> build_vwp_problem(const BracketKind& kind, const T& a, const T& b, const T& c, const T& d,
                                          const T& u, const T& delta, long m, long n, std::vector<T> lambda,
                                          std::vector<T> mu) {
  return make_vwp<T>(kind, a, b, c, d, u, delta, m, n, std::move(lambda), std::move(mu), std::nullopt);
}

template <class T>
std::vector<GenericityFailure> genericity_failures(const InterpolationProblem<T>& prob) {
  std::vector<GenericityFailure> out;
  const long big_n = prob.order();
  auto scan = [&](const Matrix<T>& x, char which, long size) {
    const Indices cols = index_range(0, static_cast<std::size_t>(size));
    for (long first = 0; first + size <= big_n + 1; ++first) {
      const Indices rows = index_range(static_cast<std::size_t>(first), static_cast<std::size_t>(first + size));
      const Matrix<T> sub = submatrix(x, rows, cols);
      if (negligible_det(sub, det(sub))) out.push_back({which, first, size});
    }
  };
  scan(prob.F(), 'F', prob.m() + 1);
  scan(prob.G(), 'G', prob.n() + 1);
  return out;
}

template <class T>
void require_generic(const InterpolationProblem<T>& prob) {
  const auto failures = genericity_failures(prob);
  if (failures.empty()) return;
  const auto& f = failures.front();
  throw Error(ErrorCode::SingularCoreMinor, std::string("det ") + f.which + " rows " + std::to_string(f.first) + ".." +
                                                std::to_string(f.first + f.size - 1) + " vanishes");
}

#define HYPERLAB_INSTANTIATE(T)                                                                                      \
  template class InterpolationProblem<T>;                                                                            \
  template std::pair<std::vector<T>, std::vector<T>> generate_weights(const ProblemFamily<T>&, long,                 \
                                                                      const WeightSpec<T>&);                         \
  template InterpolationProblem<T> build_rational_hg_problem(const T&, const T&, const T&, const T&, const T&, long, \
                                                             long, const WeightSpec<T>&);                            \
  template InterpolationProblem<T> build_rational_hg_problem(const T&, const T&, const T&, const T&, const T&, long, \
                                                             long, std::vector<T>, std::vector<T>);                  \
  template InterpolationProblem<T> build_vwp_problem(const BracketKind&, const T&, const T&, const T&, const T&,     \
                                                     const T&, const T&, long, long, const WeightSpec<T>&);          \
  template InterpolationProblem<T> build_vwp_problem(const BracketKind&, const T&, const T&, const T&, const T&,     \
                                                     const T&, const T&, long, long, std::vector<T>,                 \
                                                     std::vector<T>);                                                \
  template std::vector<GenericityFailure> genericity_failures(const InterpolationProblem<T>&);                       \
  template void require_generic(const InterpolationProblem<T>&);

HYPERLAB_INSTANTIATE(Rational)
HYPERLAB_INSTANTIATE(Complex)

#undef HYPERLAB_INSTANTIATE

}  // namespace hyperlab
