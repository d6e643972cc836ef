#pragma once

#include <cstddef>
#include <vector>

#include "hyperlab/linalg/matrix.hpp"

namespace hyperlab {

/// Fraction-free Bareiss elimination on row-scaled integer rows. Exact.
Rational det(const Matrix<Rational>& x);
/// LU with max-modulus partial pivoting; ties go to the lowest row index.
Complex det(const Matrix<Complex>& x);

/// det(submatrix(x, rows, cols)); empty index lists give 1.
template <class T>
T minor_det(const Matrix<T>& x, const Indices& rows, const Indices& cols);

/// Whether d = det(x) is zero: exactly for rationals, relative to the
/// Hadamard bound prod_i |row_i| for complex.
bool negligible_det(const Matrix<Rational>& x, const Rational& d);
bool negligible_det(const Matrix<Complex>& x, const Complex& d);

/// For an r x (r+1) matrix B, the top-row cofactors of [y; B], i.e.
/// c_j = (-1)^j det(B without column j). These are the coefficients of the
/// linear form det[y_0 .. y_r; B] in the y_j.
template <class T>
std::vector<T> top_row_cofactors(const Matrix<T>& body);

/// Counters for the determinant kernels on the calling thread.
struct DetStats {
  std::size_t calls = 0;
  std::size_t max_order = 0;
};

DetStats det_stats();
void reset_det_stats();

}  // namespace hyperlab
