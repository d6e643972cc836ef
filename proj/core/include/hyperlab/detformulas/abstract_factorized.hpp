#pragma once

#include <vector>

#include "hyperlab/detformulas/krattenthaler.hpp"
#include "hyperlab/identity_report.hpp"
#include "hyperlab/linalg/determinant.hpp"
#include "hyperlab/series/bracket.hpp"

namespace hyperlab {

/// a_ik, b_ik (0 <= i <= N, 0 <= k < N), p_ij (0 <= i,j <= N) and q_kl
/// (0 <= k <= l < N) subject to a_ik b_jl - a_jk b_il = p_ij q_kl.
template <class T>
class FactorizedDetInput {
 public:
  /// Validates b != 0, antisymmetry of p and the factorization condition;
  /// throws ZeroDenominatorEntry, AntisymmetryViolated or FactorizationViolated.
  FactorizedDetInput(Matrix<T> a, Matrix<T> b, Matrix<T> p, Matrix<T> q, const EqPolicy& policy);

  std::size_t order() const noexcept { return a_.rows() - 1; }  // N
  const Matrix<T>& a() const noexcept { return a_; }
  const Matrix<T>& b() const noexcept { return b_; }
  const Matrix<T>& p() const noexcept { return p_; }
  const Matrix<T>& q() const noexcept { return q_; }

 private:
  Matrix<T> a_;
  Matrix<T> b_;
  Matrix<T> p_;
  Matrix<T> q_;
};

/// a_ik = alpha_k x_i + beta_k, b_ik = gamma_k x_i + delta_k,
/// p_ij = x_i - x_j, q_kl = alpha_k delta_l - beta_k gamma_l.
template <class T>
FactorizedDetInput<T> factorized_from_krattenthaler(const KrattenthalerData<T>& data, const EqPolicy& policy);

/// a_ik = [a_k ± x_i], b_ik = [b_k ± x_i], p_ij = [x_i ± x_j], q_kl = [a_k ± b_l].
template <class T>
FactorizedDetInput<T> factorized_from_brackets(const Bracket<T>& bracket, const std::vector<T>& x,
                                               const std::vector<T>& a, const std::vector<T>& b,
                                               const EqPolicy& policy);

/// det( prod_{k<j} a_{i+row,k+col} / b_{i+row,k+col} )_{i,j=0..m}; m = -1 gives 1.
template <class T>
T tau(const FactorizedDetInput<T>& input, long m, std::size_t row_shift = 0, std::size_t col_shift = 0);

/// det X_m against prod_{i<j<=m} p_ji prod_{k<=l<m} q_kl / prod_{i<=m} prod_{k<m} b_ik.
template <class T>
IdentityReport<T> abstract_factorized_det(const FactorizedDetInput<T>& input, long m, const EqPolicy& policy);

/// tau_{m+1} T_R T_C(tau_{m-1})
///   = (a_{m+1,0}/b_{m+1,0}) tau_m T_R T_C(tau_m) - (a_00/b_00) T_C(tau_m) T_R(tau_m),
/// with tau_{-1} = 1. Needs m + 1 <= N (InsufficientData otherwise).
template <class T>
IdentityReport<T> tau_bilinear_check(const FactorizedDetInput<T>& input, long m, const EqPolicy& policy);

}  // namespace hyperlab
