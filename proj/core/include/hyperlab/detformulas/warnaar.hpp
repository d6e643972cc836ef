#pragma once

#include <vector>

#include "hyperlab/identity_report.hpp"
#include "hyperlab/linalg/determinant.hpp"
#include "hyperlab/series/bracket.hpp"

namespace hyperlab {

/// det( prod_{k<j} [a_k ± x_i] / [b_k ± x_i] ) against
/// prod_{i<j} [x_j ± x_i] prod_{k<=l<m} [a_k ± b_l] / prod_i prod_k [b_k ± x_i].
template <class T>
IdentityReport<T> warnaar_check(const Bracket<T>& bracket, const std::vector<T>& x, const std::vector<T>& a,
                                const std::vector<T>& b, const EqPolicy& policy);

/// det( [a ± x_i]_j / [b ± x_i]_j ) against
/// prod_{i<j} [x_i ± x_j] prod_{k=1}^m [b-a]_k [a+b+(k-1)delta]_k / prod_i [b ± x_i]_m.
template <class T>
IdentityReport<T> warnaar_shifted_check(const Bracket<T>& bracket, const T& a, const T& b, const T& delta,
                                        const std::vector<T>& x, const EqPolicy& policy);

/// The closed form of warnaar_shifted_check alone.
template <class T>
T warnaar_shifted_rhs(const Bracket<T>& bracket, const T& a, const T& b, const T& delta, const std::vector<T>& x);

}  // namespace hyperlab
