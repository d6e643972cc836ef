#include "hyperlab/linalg/determinant.hpp"

#include <algorithm>
#include <string>

namespace hyperlab {

namespace {

thread_local DetStats tls_stats;

void record(std::size_t order) {
  ++tls_stats.calls;
  tls_stats.max_order = std::max(tls_stats.max_order, order);
}

void require_square(std::size_t rows, std::size_t cols) {
  if (rows != cols) {
    throw Error(ErrorCode::NotSquare, std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  }
}

}  // namespace

DetStats det_stats() { return tls_stats; }
void reset_det_stats() { tls_stats = {}; }

Indices index_range(std::size_t begin, std::size_t end) {
  Indices out;
  for (std::size_t i = begin; i < end; ++i) out.push_back(i);
  return out;
}

Indices omit(const Indices& idx, std::size_t k) {
  if (k >= idx.size()) throw Error(ErrorCode::IndexOutOfBounds, "omitted position out of range");
  Indices out = idx;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

template <class T>
Matrix<T> submatrix(const Matrix<T>& x, const Indices& rows, const Indices& cols) {
  for (auto i : rows) {
    if (i >= x.rows()) throw Error(ErrorCode::IndexOutOfBounds, "row index " + std::to_string(i));
  }
  for (auto j : cols) {
    if (j >= x.cols()) throw Error(ErrorCode::IndexOutOfBounds, "column index " + std::to_string(j));
  }
  Matrix<T> y(rows.size(), cols.size(), x.proto());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) y(a, b) = x(rows[a], cols[b]);
  }
  return y;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::LengthMismatch, "matrix product shape mismatch");
  const T zero = from_int(0, a.proto());
  Matrix<T> c(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T s = zero;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  }
  return c;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.cols(), a.rows(), a.proto());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

Rational det(const Matrix<Rational>& x) {
  require_square(x.rows(), x.cols());
  const std::size_t n = x.rows();
  record(n);
  if (n == 0) return Rational(1);

  // Clear denominators row by row; det(x) = det(a) / prod(scale).
  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x(i, j).value().get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = x(i, j).value();
      a[i * n + j] = q.get_num() * (l / q.get_den());
    }
    scale *= l;
  }

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p * n + k] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    const mpz_class& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i * n + j] * pivot;
        t -= a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  mpq_class result(a[n * n - 1] * sign, scale);
  result.canonicalize();
  return Rational(result);
}

Complex det(const Matrix<Complex>& x) {
  require_square(x.rows(), x.cols());
  const std::size_t n = x.rows();
  record(n);
  const Complex one = from_int(1, x.proto());
  if (n == 0) return one;

  std::vector<Complex> a = x.entries();
  Complex result = one;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    BigFloat best = norm(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      BigFloat v = norm(a[i * n + k]);
      if (v > best) {
        best = std::move(v);
        p = i;
      }
    }
    if (best.is_zero()) return from_int(0, x.proto());
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      result = -result;
    }
    const Complex pivot = a[k * n + k];
    result *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i * n + k].is_zero()) continue;
      const Complex factor = a[i * n + k] / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= factor * a[k * n + j];
    }
  }
  return result;
}

bool negligible_det(const Matrix<Rational>&, const Rational& d) { return d.is_zero(); }

bool negligible_det(const Matrix<Complex>& x, const Complex& d) {
  if (d.is_zero()) return true;
  const auto p = d.precision();
  BigFloat bound(1L, p);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    BigFloat row(0L, p);
    for (std::size_t j = 0; j < x.cols(); ++j) row += norm(x(i, j));
    bound *= sqrt(row);
  }
  return vanishes_relative(d, bound);
}

template <class T>
T minor_det(const Matrix<T>& x, const Indices& rows, const Indices& cols) {
  if (rows.size() != cols.size()) {
    throw Error(ErrorCode::NotSquare, "minor with " + std::to_string(rows.size()) + " rows and " +
                                          std::to_string(cols.size()) + " columns");
  }
  return det(submatrix(x, rows, cols));
}

template <class T>
std::vector<T> top_row_cofactors(const Matrix<T>& body) {
  if (body.cols() != body.rows() + 1) {
    throw Error(ErrorCode::NotSquare, "cofactor body must be r x (r+1)");
  }
  const Indices rows = index_range(0, body.rows());
  const Indices cols = index_range(0, body.cols());
  std::vector<T> out;
  out.reserve(body.cols());
  for (std::size_t j = 0; j < body.cols(); ++j) {
    T c = minor_det(body, rows, omit(cols, j));
    if (j % 2 == 1) c = -c;
    out.push_back(std::move(c));
  }
  return out;
}

#define HYPERLAB_INSTANTIATE(T)                                                   \
  template Matrix<T> submatrix(const Matrix<T>&, const Indices&, const Indices&); \
  template Matrix<T> multiply(const Matrix<T>&, const Matrix<T>&);                \
  template Matrix<T> transpose(const Matrix<T>&);                                 \
  template T minor_det(const Matrix<T>&, const Indices&, const Indices&);         \
  template std::vector<T> top_row_cofactors(const Matrix<T>&);

HYPERLAB_INSTANTIATE(Rational)
HYPERLAB_INSTANTIATE(Complex)

#undef HYPERLAB_INSTANTIATE

}  // namespace hyperlab
