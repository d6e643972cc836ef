#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

namespace {

std::complex<double> log_product(std::complex<double> z, std::complex<double> w1, std::complex<double> w2, int M) {
  std::complex<double> sum = std::log(z);
  for (int a = -M; a <= M; ++a) {
    for (int b = -M; b <= M; ++b) {
      if (a == 0 && b == 0) continue;
      const std::complex<double> w = double(a) * w1 + double(b) * w2;
      const std::complex<double> t = z / w;
      sum += std::log(1.0 - t) + t + t * t / 2.0;
    }
  }
  return sum;
}

template <std::size_t N>
std::array<std::complex<double>, N> solve(std::array<std::array<std::complex<double>, N>, N> a,
                                          std::array<std::complex<double>, N> b) {
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < N; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = c + 1; r < N; ++r) {
      const auto f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < N; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::array<std::complex<double>, N> x{};
  for (std::size_t c = N; c-- > 0;) {
    auto s = b[c];
    for (std::size_t k = c + 1; k < N; ++k) s -= a[c][k] * x[k];
    x[c] = s / a[c][c];
  }
  return x;
}

}  // namespace

std::complex<double> sigma_lattice(std::complex<double> z, std::complex<double> w1, std::complex<double> w2) {
  constexpr std::size_t K = 5;
  const int Ms[K] = {20, 25, 30, 35, 40};
  std::array<std::array<std::complex<double>, K>, K> a{};
  std::array<std::complex<double>, K> b{};
  for (std::size_t r = 0; r < K; ++r) {
    const double M = Ms[r];
    a[r][0] = 1.0;
    for (std::size_t p = 1; p < K; ++p) a[r][p] = std::pow(M, -double(p + 1));
    b[r] = std::exp(log_product(z, w1, w2, Ms[r]));
  }
  return solve(a, b)[0];
}

PadeOracle pade_nullspace(long m, long n, const std::function<Rational(long, const Rational&)>& f,
                          const std::function<Rational(long, const Rational&)>& g,
                          const std::vector<Rational>& points, const std::vector<Rational>& lambda,
                          const std::vector<Rational>& mu) {
  const std::size_t rows = points.size(), cols = static_cast<std::size_t>(m + n + 2);
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, Rational(0)));
  for (std::size_t k = 0; k < rows; ++k) {
    for (long j = 0; j <= m; ++j) a[k][j] = mu[k] * f(j, points[k]);
    for (long j = 0; j <= n; ++j) a[k][m + 1 + j] = -(lambda[k] * g(j, points[k]));
  }
  // Reduced row echelon form.
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && hyperlab::is_zero(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    const Rational inv = Rational(1) / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || hyperlab::is_zero(a[i][c])) continue;
      const Rational factor = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] -= factor * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  if (pivots.size() + 1 != cols) throw std::runtime_error("null space is not one-dimensional");
  std::size_t free = 0;
  while (free < pivots.size() && pivots[free] == free) ++free;
  std::vector<Rational> v(cols, Rational(0));
  v[free] = Rational(1);
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
  PadeOracle out;
  out.p.assign(v.begin(), v.begin() + m + 1);
  out.q.assign(v.begin() + m + 1, v.end());
  return out;
}

}  // namespace oracle
