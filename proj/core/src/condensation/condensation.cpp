#include "hyperlab/condensation/condensation.hpp"

#include <string>

namespace hyperlab {

namespace {

template <class T>
void require_split(const Matrix<T>& x, std::size_t r) {
  if (!x.square()) throw Error(ErrorCode::NotSquare, "condensation needs a square matrix");
  if (r == 0 || r >= x.rows()) {
    throw Error(ErrorCode::BadSplit, "split r=" + std::to_string(r) + " of n=" + std::to_string(x.rows()));
  }
}

Indices with_front(std::size_t first, const Indices& rest) {
  Indices out{first};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

template <class T>
T power(const T& x, std::size_t k) {
  T out = from_int(1, x);
  for (std::size_t i = 0; i < k; ++i) out *= x;
  return out;
}

}  // namespace

std::string_view to_string(CondensationIdentity id) noexcept {
  switch (id) {
    case CondensationIdentity::DodgsonA1: return "DodgsonA1";
    case CondensationIdentity::MovingCoreA2: return "MovingCoreA2";
    case CondensationIdentity::RenormalizedA18: return "RenormalizedA18";
    case CondensationIdentity::Jacobi: return "Jacobi";
    case CondensationIdentity::LewisCarroll: return "LewisCarroll";
  }
  return "?";
}

template <class T>
Matrix<T> condense_fixed_core(const Matrix<T>& x, std::size_t r) {
  require_split(x, r);
  const Indices core = index_range(r, x.rows());
  Matrix<T> y(r, r, x.proto());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) y(i, j) = minor_det(x, with_front(i, core), with_front(j, core));
  }
  return y;
}

template <class T>
Matrix<T> condense_moving_core(const Matrix<T>& x, std::size_t r) {
  require_split(x, r);
  const std::size_t s = x.rows() - r;
  const Indices core = index_range(r, x.rows());
  Matrix<T> y(r, r, x.proto());
  for (std::size_t i = 0; i < r; ++i) {
    const Indices rows = index_range(i, i + s + 1);
    for (std::size_t j = 0; j < r; ++j) y(i, j) = minor_det(x, rows, with_front(j, core));
  }
  return y;
}

template <class T>
Matrix<T> condense_moving_core_renormalized(const Matrix<T>& x, std::size_t r) {
  Matrix<T> y = condense_moving_core(x, r);
  const std::size_t s = x.rows() - r;
  const Indices core = index_range(r, x.rows());
  for (std::size_t i = 0; i < r; ++i) {
    const T divisor = minor_det(x, index_range(i + 1, i + s + 1), core);
    if (vanishes(divisor)) {
      throw Error(ErrorCode::SingularCoreMinor, "window i=" + std::to_string(i) + " (rows " +
                                                    std::to_string(i + 1) + ".." + std::to_string(i + s) +
                                                    ") has a vanishing core minor");
    }
    for (std::size_t j = 0; j < r; ++j) y(i, j) /= divisor;
  }
  return y;
}

template <class T>
CondensationReport<T> dodgson_check(const Matrix<T>& x, std::size_t r, const EqPolicy& policy) {
  const T lhs = det(condense_fixed_core(x, r));
  const Indices core = index_range(r, x.rows());
  const T rhs = det(x) * power(minor_det(x, core, core), r - 1);
  return {lhs, rhs, CondensationIdentity::DodgsonA1, scalar_eq(lhs, rhs, policy)};
}

template <class T>
CondensationReport<T> moving_core_check(const Matrix<T>& x, std::size_t r, const EqPolicy& policy) {
  const T lhs = det(condense_moving_core(x, r));
  const std::size_t s = x.rows() - r;
  const Indices core = index_range(r, x.rows());
  T rhs = det(x);
  for (std::size_t i = 1; i < r; ++i) rhs *= minor_det(x, index_range(i, i + s), core);
  return {lhs, rhs, CondensationIdentity::MovingCoreA2, scalar_eq(lhs, rhs, policy)};
}

template <class T>
CondensationReport<T> renormalized_check(const Matrix<T>& x, std::size_t r, const EqPolicy& policy) {
  const Indices core = index_range(r, x.rows());
  const T lhs = det(x);
  const T rhs = det(condense_moving_core_renormalized(x, r)) * minor_det(x, core, core);
  return {lhs, rhs, CondensationIdentity::RenormalizedA18, scalar_eq(lhs, rhs, policy)};
}

template <class T>
CondensationReport<T> jacobi_check(const Matrix<T>& x, const EqPolicy& policy, BilinearForm form) {
  if (!x.square()) throw Error(ErrorCode::NotSquare, "jacobi_check needs a square matrix");
  const std::size_t n = x.rows();
  if (n < 3) throw Error(ErrorCode::TooSmall, "jacobi_check needs n >= 3, got " + std::to_string(n));
  const Indices all = index_range(0, n);
  if (form == BilinearForm::Jacobi) {
    const Indices tail = index_range(2, n);
    const Indices a = with_front(0, tail);
    const Indices b = with_front(1, tail);
    const T lhs = minor_det(x, a, a) * minor_det(x, b, b) - minor_det(x, a, b) * minor_det(x, b, a);
    const T rhs = det(x) * minor_det(x, tail, tail);
    return {lhs, rhs, CondensationIdentity::Jacobi, scalar_eq(lhs, rhs, policy)};
  }
  const Indices head = index_range(0, n - 1);
  const Indices tail = index_range(1, n);
  const Indices inner = index_range(1, n - 1);
  const T lhs =
      minor_det(x, head, head) * minor_det(x, tail, tail) - minor_det(x, head, tail) * minor_det(x, tail, head);
  const T rhs = minor_det(x, all, all) * minor_det(x, inner, inner);
  return {lhs, rhs, CondensationIdentity::LewisCarroll, scalar_eq(lhs, rhs, policy)};
}

#define HYPERLAB_INSTANTIATE(T)                                                                        \
  template Matrix<T> condense_fixed_core(const Matrix<T>&, std::size_t);                               \
  template Matrix<T> condense_moving_core(const Matrix<T>&, std::size_t);                              \
  template Matrix<T> condense_moving_core_renormalized(const Matrix<T>&, std::size_t);                 \
  template CondensationReport<T> dodgson_check(const Matrix<T>&, std::size_t, const EqPolicy&);        \
  template CondensationReport<T> moving_core_check(const Matrix<T>&, std::size_t, const EqPolicy&);    \
  template CondensationReport<T> renormalized_check(const Matrix<T>&, std::size_t, const EqPolicy&);   \
  template CondensationReport<T> jacobi_check(const Matrix<T>&, const EqPolicy&, BilinearForm);

HYPERLAB_INSTANTIATE(Rational)
HYPERLAB_INSTANTIATE(Complex)

#undef HYPERLAB_INSTANTIATE

}  // namespace hyperlab
