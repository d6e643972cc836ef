#include "hyperlab/series/identities.hpp"

#include "hyperlab/error.hpp"

namespace hyperlab {

template <class T>
IdentityReport<T> saalschutz_check(long N, const SaalschutzParams<T>& p, const EqPolicy& policy) {
  if (N < 0) throw Error(ErrorCode::NonTerminating, "N must be nonnegative");
  const T& like = p.c;
  const T n = from_int(N, like);
  const T i = from_int(p.i, like);
  const T j = from_int(p.j, like);
  const T one = from_int(1, like);

  GeneralizedF<T> f{{-n, p.d + p.u + n - one - i, p.c + p.u + j}, {p.c + p.u - i, p.d + p.u + j}, one};
  const T lhs = eval_F(f);

  const T den = shifted_factorial(p.c + p.u - i, N) * shifted_factorial(p.d + p.u + j, N);
  if (vanishes(den)) throw Error(ErrorCode::PoleBeforeTermination, "Saalschutz right-hand side has a pole");
  const T rhs = shifted_factorial(p.d - p.c, N) * shifted_factorial(-i - j, N) / den;
  return {"saalschutz", lhs, rhs, scalar_eq(lhs, rhs, policy)};
}

template <class T>
IdentityReport<T> frenkel_turaev_check(const BracketKind& kind, const T& delta, const T& a0, const T& a1,
                                       const T& a2, const T& a3, const std::optional<T>& a4, long N,
                                       const EqPolicy& policy) {
  if (N < 0) throw Error(ErrorCode::NonTerminating, "N must be nonnegative");
  const T a5 = -(from_int(N, delta) * delta);
  const T balanced_a4 = from_int(2, a0) * a0 + delta - a1 - a2 - a3 - a5;
  if (a4 && !vanishes(*a4 - balanced_a4)) {
    throw Error(ErrorCode::BalancingViolated, "a1 + ... + a5 != 2 a0 + delta");
  }
  const T b4 = a4 ? *a4 : balanced_a4;
  const Bracket<T> br(kind, a0);

  const T lhs = eval_V(br, delta, a0, {a1, a2, a3, b4, a5}, from_int(1, a0));

  const T da0 = delta + a0;
  auto fac = [&](const T& x) { return delta_shifted_factorial(br, x, delta, N); };
  const T num = fac(da0) * fac(da0 - a1 - a2) * fac(da0 - a1 - a3) * fac(da0 - a2 - a3);
  const T den = fac(da0 - a1) * fac(da0 - a2) * fac(da0 - a3) * fac(da0 - a1 - a2 - a3);
  if (vanishes(den)) throw Error(ErrorCode::PoleBeforeTermination, "Frenkel-Turaev right-hand side has a pole");
  const T rhs = num / den;
  return {"frenkel-turaev", lhs, rhs, scalar_eq(lhs, rhs, policy)};
}

template <class T>
std::array<T, 3> riemann_terms(const Bracket<T>& br, const T& x, const T& alpha, const T& beta, const T& gamma) {
  auto pm = [&](const T& a, const T& b) { return br(a + b) * br(a - b); };
  return {pm(x, alpha) * pm(beta, gamma), pm(x, beta) * pm(gamma, alpha), pm(x, gamma) * pm(alpha, beta)};
}

template <class T>
T riemann_residual(const Bracket<T>& bracket, const T& x, const T& alpha, const T& beta, const T& gamma) {
  const auto t = riemann_terms(bracket, x, alpha, beta, gamma);
  return t[0] + t[1] + t[2];
}

template <class T>
T riemann_residual(const BracketKind& kind, const T& x, const T& alpha, const T& beta, const T& gamma) {
  return riemann_residual(Bracket<T>(kind, x), x, alpha, beta, gamma);
}

#define HYPERLAB_INSTANTIATE(T)                                                                            \
  template IdentityReport<T> saalschutz_check(long, const SaalschutzParams<T>&, const EqPolicy&);          \
  template IdentityReport<T> frenkel_turaev_check(const BracketKind&, const T&, const T&, const T&,         \
                                                  const T&, const T&, const std::optional<T>&, long,       \
                                                  const EqPolicy&);                                        \
  template std::array<T, 3> riemann_terms(const Bracket<T>&, const T&, const T&, const T&, const T&);      \
  template T riemann_residual(const Bracket<T>&, const T&, const T&, const T&, const T&);                  \
  template T riemann_residual(const BracketKind&, const T&, const T&, const T&, const T&);

HYPERLAB_INSTANTIATE(Rational)
HYPERLAB_INSTANTIATE(Complex)

#undef HYPERLAB_INSTANTIATE

}  // namespace hyperlab
