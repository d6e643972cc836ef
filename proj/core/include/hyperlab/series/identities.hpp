#pragma once

#include <array>
#include <optional>

#include "hyperlab/identity_report.hpp"
#include "hyperlab/series/hypergeometric.hpp"

namespace hyperlab {

template <class T>
struct SaalschutzParams {
  T c;
  T d;
  T u;
  long i = 0;
  long j = 0;
};

/// 3F2[-N, d+u+N-1-i, c+u+j; c+u-i, d+u+j; 1]
///   = (d-c)_N (-i-j)_N / ((c+u-i)_N (d+u+j)_N).
template <class T>
IdentityReport<T> saalschutz_check(long N, const SaalschutzParams<T>& params, const EqPolicy& policy);

/// 10V9[a0; a1..a5] with a5 = -N delta against the four-ratio product.
/// When a4 is omitted it is solved from a1+..+a5 = 2 a0 + delta; when given,
/// the balancing condition is checked (BalancingViolated).
template <class T>
IdentityReport<T> frenkel_turaev_check(const BracketKind& kind, const T& delta, const T& a0, const T& a1,
                                       const T& a2, const T& a3, const std::optional<T>& a4, long N,
                                       const EqPolicy& policy);

/// The three products [x±alpha][beta±gamma], [x±beta][gamma±alpha], [x±gamma][alpha±beta].
template <class T>
std::array<T, 3> riemann_terms(const Bracket<T>& bracket, const T& x, const T& alpha, const T& beta,
                               const T& gamma);

/// Sum of riemann_terms; vanishes identically.
template <class T>
T riemann_residual(const Bracket<T>& bracket, const T& x, const T& alpha, const T& beta, const T& gamma);

template <class T>
T riemann_residual(const BracketKind& kind, const T& x, const T& alpha, const T& beta, const T& gamma);

}  // namespace hyperlab
