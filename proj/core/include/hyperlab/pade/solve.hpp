#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperlab/pade/problem.hpp"
#include "hyperlab/series/hypergeometric.hpp"

namespace hyperlab {

enum class Route { BruteForce21, Condensed22, HG31, HG32, VWP41, VWP42 };

std::string_view to_string(Route route) noexcept;

/// P(x) = sum p_j f_j(x), Q(x) = sum q_j g_j(x). The routes build p, q as
/// prefactor * raw, where raw are the top-row cofactors of the route's
/// determinant; with the prefactors applied every route returns the same
/// vectors as the brute-force route.
template <class T>
struct PadeSolution {
  std::vector<T> p;
  std::vector<T> q;
  std::vector<T> raw_p;
  std::vector<T> raw_q;
  T p_prefactor;
  T q_prefactor;
  Route route;
};

template <class T>
T evaluate_P(const InterpolationProblem<T>& prob, const PadeSolution<T>& sol, const T& x);
template <class T>
T evaluate_Q(const InterpolationProblem<T>& prob, const PadeSolution<T>& sol, const T& x);

/// mu P(x) - lambda Q(x).
template <class T>
T residual_R(const InterpolationProblem<T>& prob, const PadeSolution<T>& sol, const T& x, const T& lambda,
             const T& mu);

/// Cofactor expansion of the (N+2)-order determinant with rows
/// [mu_k f_j(u_k) | lambda_k g_j(u_k)]. Throws DegenerateSolution when
/// (P(u_k), Q(u_k)) = (0, 0) at some node.
template <class T>
PadeSolution<T> solve_bruteforce(const InterpolationProblem<T>& prob);

// Condensed route. U is defined for 0 <= i < m, 0 <= j <= m; V for i < n, j <= n.

/// As a ratio of an (n+2)-order determinant and a G-window minor.
template <class T>
T condensed_U_det(const InterpolationProblem<T>& prob, long i, long j);
template <class T>
T condensed_V_det(const InterpolationProblem<T>& prob, long i, long j);

/// As the first-column expansion: n+2 terms with ratios of G minors.
template <class T>
T condensed_U(const InterpolationProblem<T>& prob, long i, long j);
template <class T>
T condensed_V(const InterpolationProblem<T>& prob, long i, long j);

/// Throws SingularCoreMinor, ZeroWeight.
template <class T>
PadeSolution<T> solve_condensed(const InterpolationProblem<T>& prob);

// Rational hypergeometric family, Krattenthaler-evaluated minors.

template <class T>
T hg_U(const InterpolationProblem<T>& prob, long i, long j);
template <class T>
T hg_V(const InterpolationProblem<T>& prob, long i, long j);

/// Throws WrongFamily, PoleInConstant, ZeroWeight.
template <class T>
PadeSolution<T> solve_hg_krattenthaler(const InterpolationProblem<T>& prob);

/// A closed-form sum written as prefactor * series.
template <class T, class S>
struct Reduction {
  T prefactor;
  S series;
};

/// U_ij, V_ij as r+4Fr+3 (plain weights) or r+3Fr+2 (simplified weights).
/// Throws WrongFamily when the weights were not generated by an ST family.
template <class T>
Reduction<T, GeneralizedF<T>> hg_U_reduction(const InterpolationProblem<T>& prob, long i, long j);
template <class T>
Reduction<T, GeneralizedF<T>> hg_V_reduction(const InterpolationProblem<T>& prob, long i, long j);

// Rational hypergeometric family, Saalschutz route.

/// L, LG and K = det M / det L for one side. For P: L built from (c, d),
/// G the g-values, M the rows m..m+n of LG. For Q: (a, b), F and rows n..n+m.
template <class T>
struct KernelData {
  Matrix<T> L;
  Matrix<T> LG;
  T det_M;
  T det_L;
  T K;
};

enum class Side { P, Q };

/// Throws PoleInL, AntiTriangularityViolated, SingularCoreMinor (det L = 0).
template <class T>
KernelData<T> hg_saalschutz_kernel(const InterpolationProblem<T>& prob, Side side);

/// Closed forms of det M and det L. degree is n for the P side; pass (a, b)
/// and m for the Q side.
template <class T>
T hg_det_M_closed(const T& c, const T& d, const T& u, long big_n, long degree);
template <class T>
T hg_det_L_closed(const T& c, const T& d, const T& u, long big_n);

template <class T>
T hg_Phi(const InterpolationProblem<T>& prob, long i, long j);
template <class T>
T hg_Psi(const InterpolationProblem<T>& prob, long i, long j);

template <class T>
Reduction<T, GeneralizedF<T>> hg_Phi_reduction(const InterpolationProblem<T>& prob, long i, long j);
template <class T>
Reduction<T, GeneralizedF<T>> hg_Psi_reduction(const InterpolationProblem<T>& prob, long i, long j);

/// Throws WrongFamily, PoleInL, AntiTriangularityViolated, ZeroWeight.
template <class T>
PadeSolution<T> solve_hg_saalschutz(const InterpolationProblem<T>& prob);

// Very-well-poised family.

template <class T>
T vwp_U(const InterpolationProblem<T>& prob, long i, long j);
template <class T>
T vwp_V(const InterpolationProblem<T>& prob, long i, long j);

/// C_n(c, d) = (-1)^binom(n+1, 2) prod_{k=1}^n [d-c]_k [c+d+(k-1)delta]_k.
template <class T>
T vwp_C(const Bracket<T>& bracket, const T& c, const T& d, const T& delta, long n);

/// Throws WrongFamily, PoleInConstant, ZeroWeight.
template <class T>
PadeSolution<T> solve_vwp_krattenthaler(const InterpolationProblem<T>& prob);

/// U_ij, V_ij as very-well-poised series (r+12Vr+11 under VwpE weights,
/// r+10Vr+9 under VwpESimplified).
template <class T>
Reduction<T, VeryWellPoisedV<T>> vwp_U_reduction(const InterpolationProblem<T>& prob, long i, long j);
template <class T>
Reduction<T, VeryWellPoisedV<T>> vwp_V_reduction(const InterpolationProblem<T>& prob, long i, long j);

/// As hg_saalschutz_kernel with the Frenkel-Turaev kernel
/// L_ij = V^(j)[2u; -N delta, u-c+(1+i)delta, u+d+(N-1-i)delta, u+c, u-d+delta].
template <class T>
KernelData<T> vwp_ft_kernel(const InterpolationProblem<T>& prob, Side side);

template <class T>
T vwp_det_M_closed(const Bracket<T>& bracket, const T& c, const T& d, const T& u, const T& delta, long big_n,
                   long degree);
template <class T>
T vwp_det_L_closed(const Bracket<T>& bracket, const T& c, const T& d, const T& u, const T& delta, long big_n);

template <class T>
T vwp_Phi(const InterpolationProblem<T>& prob, long i, long j);
template <class T>
T vwp_Psi(const InterpolationProblem<T>& prob, long i, long j);

/// Phi_ij, Psi_ij as r+14Vr+13 under VwpE weights.
template <class T>
Reduction<T, VeryWellPoisedV<T>> vwp_Phi_reduction(const InterpolationProblem<T>& prob, long i, long j);
template <class T>
Reduction<T, VeryWellPoisedV<T>> vwp_Psi_reduction(const InterpolationProblem<T>& prob, long i, long j);

template <class T>
PadeSolution<T> solve_vwp_ft(const InterpolationProblem<T>& prob);

/// Dispatch by route.
template <class T>
PadeSolution<T> solve(const InterpolationProblem<T>& prob, Route route);

// Verification.

template <class T>
struct OffNodeValue {
  T x;
  T P;
  T Q;
};

template <class T>
struct VerificationReport {
  std::vector<T> residuals;  // mu_k P(u_k) - lambda_k Q(u_k)
  double max_residual = 0.0;
  double max_scale = 0.0;  // max |mu_k P(u_k)| + |lambda_k Q(u_k)|
  bool passed = false;
  std::vector<OffNodeValue<T>> off_node;
};

/// Exact policy: every residual is 0. Relative: |r_k| <= max(abs_floor * S,
/// rel_tol * s_k) with s_k = |mu_k P(u_k)| + |lambda_k Q(u_k)|, S = max s_k. Also evaluates P and Q at
/// three off-node points drawn from seed.
template <class T>
VerificationReport<T> verify_solution(const InterpolationProblem<T>& prob, const PadeSolution<T>& sol,
                                      const EqPolicy& policy, std::uint64_t seed = 0);

/// Both coefficient vectors (p then q) agree projectively. Complex vectors are
/// first scaled to have largest component 1, so the floor is relative to it.
template <class T>
bool solutions_proj_eq(const PadeSolution<T>& x, const PadeSolution<T>& y, const EqPolicy& policy);

}  // namespace hyperlab
