#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperlab/linalg/matrix.hpp"
#include "hyperlab/series/bracket.hpp"

namespace hyperlab {

/// f_j = (a+x)_j/(b+x)_j, g_j = (c+x)_j/(d+x)_j on u_k = u + k.
template <class T>
struct RationalHgFamily {
  T a;
  T b;
  T c;
  T d;
  T u;
};

/// f_j = [a±x]_j/[b±x]_j, g_j = [c±x]_j/[d±x]_j on u_k = u + k delta.
template <class T>
struct VwpFamily {
  BracketKind kind;
  T a;
  T b;
  T c;
  T d;
  T u;
  T delta;
};

template <class T>
using ProblemFamily = std::variant<std::monostate, RationalHgFamily<T>, VwpFamily<T>>;

/// Generators for (lambda_k, mu_k). The simplified families take a, b, c, d
/// and u from the problem they are attached to.
///
///   PlainST         lambda_k = prod (s)_k z^k             mu_k = prod (t)_k w^k
///   SimplifiedST    lambda_k = (b+u)_k (c+u)_k prod (s)_k z^k
///                   mu_k     = (a+u)_k (d+u)_k prod (t)_k w^k
///   VwpE            lambda_k = prod [u-e+delta]_k z^k     mu_k = prod [u+e]_k w^k
///   VwpESimplified  lambda_k gains [u-a+delta]_k [u+b]_k [u+c]_k [u-d+delta]_k,
///                   mu_k gains [u+a]_k [u-b+delta]_k [u-c+delta]_k [u+d]_k
enum class WeightFamily { PlainST, SimplifiedST, VwpE, VwpESimplified };

std::string_view to_string(WeightFamily family) noexcept;

template <class T>
struct WeightSpec {
  using Family = WeightFamily;

  Family family = Family::PlainST;
  std::vector<T> s;
  std::vector<T> t;
  std::vector<T> e;
  T z;
  T w;
};

template <class T>
class InterpolationProblem {
 public:
  using Basis = std::function<T(long j, const T& x)>;

  /// Throws LengthMismatch, DuplicatePoints, ZeroWeight (for a pair with
  /// lambda_k = mu_k = 0).
  InterpolationProblem(long m, long n, Basis f, Basis g, std::vector<T> points, std::vector<T> lambda,
                       std::vector<T> mu, ProblemFamily<T> family = {},
                       std::optional<WeightSpec<T>> weight_spec = std::nullopt);

  long m() const noexcept { return m_; }
  long n() const noexcept { return n_; }
  long order() const noexcept { return m_ + n_; }

  T f(long j, const T& x) const { return f_(j, x); }
  T g(long j, const T& x) const { return g_(j, x); }
  const std::vector<T>& points() const noexcept { return points_; }
  const std::vector<T>& lambda() const noexcept { return lambda_; }
  const std::vector<T>& mu() const noexcept { return mu_; }
  const ProblemFamily<T>& family() const noexcept { return family_; }
  const std::optional<WeightSpec<T>>& weight_spec() const noexcept { return weight_spec_; }
  const T& proto() const noexcept { return points_.front(); }

  /// True when the points are exactly the family's progression u + k delta.
  bool on_progression() const;
  /// u + k (or u + k delta) for any integer k; requires a family.
  T progression_point(long k) const;

  /// (f_j(u_i)) for 0 <= i <= N, 0 <= j <= m, and likewise G with n.
  const Matrix<T>& F() const { return *fv_; }
  const Matrix<T>& G() const { return *gv_; }

  /// Same problem with other weights (the weight spec is dropped).
  InterpolationProblem with_weights(std::vector<T> lambda, std::vector<T> mu) const;

 private:
  long m_;
  long n_;
  Basis f_;
  Basis g_;
  std::vector<T> points_;
  std::vector<T> lambda_;
  std::vector<T> mu_;
  ProblemFamily<T> family_;
  std::optional<WeightSpec<T>> weight_spec_;
  std::optional<Matrix<T>> fv_;  // filled by the constructor
  std::optional<Matrix<T>> gv_;

  Matrix<T> basis_values(const Basis& b, long degree) const;
};

/// Weights from a generator, for a family-backed problem. Throws ZeroWeight,
/// WrongFamily (bracket family on a rational-HG problem and vice versa).
template <class T>
std::pair<std::vector<T>, std::vector<T>> generate_weights(const ProblemFamily<T>& family, long count,
                                                           const WeightSpec<T>& spec);

/// Throws PoleAtNode, ZeroWeight.
template <class T>
InterpolationProblem<T> build_rational_hg_problem(const T& a, const T& b, const T& c, const T& d, const T& u, long m,
                                                  long n, const WeightSpec<T>& weights);
template <class T>
InterpolationProblem<T> build_rational_hg_problem(const T& a, const T& b, const T& c, const T& d, const T& u, long m,
                                                  long n, std::vector<T> lambda, std::vector<T> mu);

/// Throws DuplicatePoints (delta = 0), PoleAtNode, ZeroWeight.
template <class T>
InterpolationProblem<T> build_vwp_problem(const BracketKind& kind, const T& a, const T& b, const T& c, const T& d,
                                          const T& u, const T& delta, long m, long n, const WeightSpec<T>& weights);
template <class T>
InterpolationProblem<T> build_vwp_problem(const BracketKind& kind, const T& a, const T& b, const T& c, const T& d,
                                          const T& u, const T& delta, long m, long n, std::vector<T> lambda,
                                          std::vector<T> mu);

/// A genericity minor: rows first..first+size-1 of F (which = 'F') or G.
struct GenericityFailure {
  char which;
  long first;
  long size;
};

/// Every consecutive-row maximal minor of F and G; empty when all are nonzero.
template <class T>
std::vector<GenericityFailure> genericity_failures(const InterpolationProblem<T>& prob);

/// Throws SingularCoreMinor naming the first failing minor.
template <class T>
void require_generic(const InterpolationProblem<T>& prob);

}  // namespace hyperlab
