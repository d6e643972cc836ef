#pragma once

#include <vector>

#include "hyperlab/identity_report.hpp"
#include "hyperlab/linalg/determinant.hpp"

namespace hyperlab {

/// Parameters alpha_k, beta_k, gamma_k, delta_k (k < m) for nodes x_0..x_m.
template <class T>
struct KrattenthalerData {
  std::vector<T> x;
  std::vector<T> alpha;
  std::vector<T> beta;
  std::vector<T> gamma;
  std::vector<T> delta;
};

/// det( prod_{k<j} (alpha_k x_i + beta_k) / (gamma_k x_i + delta_k) )_{i,j=0..m}.
template <class T>
T krattenthaler_lhs(const KrattenthalerData<T>& data);

/// prod_{i<j} (x_j - x_i) prod_{k<=l<m} (alpha_k delta_l - beta_k gamma_l)
///   / prod_i prod_{k<m} (gamma_k x_i + delta_k).
template <class T>
T krattenthaler_rhs(const KrattenthalerData<T>& data);

/// det( (a + x_i)_j / (b + x_i)_j )_{i,j=0..m}.
template <class T>
T shifted_ratio_det_lhs(const T& a, const T& b, const std::vector<T>& x);

/// prod_{i<j} (x_j - x_i) prod_{k=1}^m (b-a)_k / prod_i (b + x_i)_m.
template <class T>
T shifted_ratio_det_rhs(const T& a, const T& b, const std::vector<T>& x);

/// (a; q)_k = (1-a)(1-aq)...(1-aq^{k-1}).
template <class T>
T q_pochhammer(const T& a, const T& q, long k);

/// Data for the two q-specializations.
///   case B:  entries (a x_i; p)_j / (b x_i; q)_j
///   case C:  entries (a z_i; p)_j (ac/z_i; p)_j / ((b z_i; q)_j (bc/z_i; q)_j)
/// The equal-base form takes p = q and uses the compact product.
template <class T>
struct QRatioParams {
  enum class Case { B, C };
  enum class Form { General, EqualBase };

  Case which = Case::B;
  Form form = Form::General;
  T a;
  T b;
  T c;  // case C only
  T p;  // general form only
  T q;
  std::vector<T> nodes;
};

template <class T>
IdentityReport<T> q_ratio_det_check(const QRatioParams<T>& params, const EqPolicy& policy);

}  // namespace hyperlab
