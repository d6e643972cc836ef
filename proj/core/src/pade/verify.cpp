#include <algorithm>

#include "detail.hpp"
#include "hyperlab/numerics/random.hpp"

namespace hyperlab {

namespace {

Rational offset(Rng& rng, const Rational&) { return rng.rational(); }
Complex offset(Rng& rng, const Complex& like) { return rng.complex(like.precision(), 20); }

}  // namespace

template <class T>
VerificationReport<T> verify_solution(const InterpolationProblem<T>& prob, const PadeSolution<T>& sol,
                                      const EqPolicy& policy, std::uint64_t seed) {
  VerificationReport<T> report;
  report.passed = true;
  const auto& pts = prob.points();
  std::vector<double> scales;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const T mp = prob.mu()[k] * evaluate_P(prob, sol, pts[k]);
    const T lq = prob.lambda()[k] * evaluate_Q(prob, sol, pts[k]);
    T r = mp - lq;
    report.max_residual = std::max(report.max_residual, magnitude(r));
    scales.push_back(magnitude(mp) + magnitude(lq));
    report.max_scale = std::max(report.max_scale, scales.back());
    if (policy.mode == EqPolicy::Mode::Exact && !is_zero(r)) report.passed = false;
    report.residuals.push_back(std::move(r));
  }
  if (policy.mode == EqPolicy::Mode::Relative) {
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const double bound = std::max(policy.abs_floor * report.max_scale, policy.rel_tol * scales[k]);
      if (magnitude(report.residuals[k]) > bound) report.passed = false;
    }
  }

  Rng rng(seed, 0x0ff);
  for (int attempt = 0; attempt < 64 && report.off_node.size() < 3; ++attempt) {
    const T x = pts.front() + offset(rng, prob.proto());
    const bool near_node = std::any_of(pts.begin(), pts.end(), [&](const T& p) { return vanishes(x - p); });
    if (near_node) continue;
    try {
      report.off_node.push_back({x, evaluate_P(prob, sol, x), evaluate_Q(prob, sol, x)});
    } catch (const Error&) {
      // pole of a basis function; draw again
    }
  }
  return report;
}

#define HYPERLAB_INSTANTIATE(T)                                                                                 \
  template VerificationReport<T> verify_solution(const InterpolationProblem<T>&, const PadeSolution<T>&,        \
                                                 const EqPolicy&, std::uint64_t);

HYPERLAB_INSTANTIATE(Rational)
HYPERLAB_INSTANTIATE(Complex)

#undef HYPERLAB_INSTANTIATE

}  // namespace hyperlab
