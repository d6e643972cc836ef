#pragma once

#include <cstddef>
#include <string_view>

#include "hyperlab/linalg/determinant.hpp"

namespace hyperlab {

// 0-based throughout. For an n x n matrix X split as n = r + s, the "core"
// columns are r..n-1; 1-based formulas map as i -> i-1.
//
//   fixed core   y_ij = det X[i, r..n-1 ; j, r..n-1]
//   moving core  y_ij = det X[i..i+s   ; j, r..n-1]
//   renormalized y_ij / det X[i+1..i+s ; r..n-1]

enum class CondensationIdentity { DodgsonA1, MovingCoreA2, RenormalizedA18, Jacobi, LewisCarroll };

std::string_view to_string(CondensationIdentity id) noexcept;

template <class T>
struct CondensationReport {
  T lhs;
  T rhs;
  CondensationIdentity identity;
  bool holds;
};

template <class T>
Matrix<T> condense_fixed_core(const Matrix<T>& x, std::size_t r);

template <class T>
Matrix<T> condense_moving_core(const Matrix<T>& x, std::size_t r);

/// Throws SingularCoreMinor naming the window whose divisor vanishes.
template <class T>
Matrix<T> condense_moving_core_renormalized(const Matrix<T>& x, std::size_t r);

/// det Y = det X * (det core)^(r-1).
template <class T>
CondensationReport<T> dodgson_check(const Matrix<T>& x, std::size_t r, const EqPolicy& policy);

/// det Y = det X * prod_{i=1}^{r-1} det X[i..i+s-1 ; r..n-1].
template <class T>
CondensationReport<T> moving_core_check(const Matrix<T>& x, std::size_t r, const EqPolicy& policy);

/// det X = det Y~ * det X[r..n-1 ; r..n-1].
template <class T>
CondensationReport<T> renormalized_check(const Matrix<T>& x, std::size_t r, const EqPolicy& policy);

/// Jacobi form: rows/cols {0,2..n-1} vs {1,2..n-1} (the r = 2 extreme).
/// Lewis-Carroll form: leading/trailing (n-1)-minors against the inner block.
enum class BilinearForm { Jacobi, LewisCarroll };

template <class T>
CondensationReport<T> jacobi_check(const Matrix<T>& x, const EqPolicy& policy,
                                   BilinearForm form = BilinearForm::LewisCarroll);

}  // namespace hyperlab
