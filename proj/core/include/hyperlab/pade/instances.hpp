#pragma once

#include "hyperlab/numerics/random.hpp"
#include "hyperlab/pade/problem.hpp"

namespace hyperlab {

/// Random exact problem: rational-HG bases on random distinct points with
/// random nonzero explicit weights. Redraws until brute force is
/// well-defined and the genericity minors are nonzero.
InterpolationProblem<Rational> random_explicit_problem(Rng& rng, long m, long n);

/// Random rational-HG problem on u + k with weights from `family`
/// (PlainST or SimplifiedST, one s and one t). Redraws on poles, zero
/// weights and singular genericity minors.
InterpolationProblem<Rational> random_hg_problem(Rng& rng, long m, long n, WeightFamily family);

/// Fixed-period brackets used by the randomized suites: omega = 1 for the
/// trigonometric kind, (omega1, omega2) = (1, 3/10 + 11i/10) for the elliptic one.
BracketKind standard_bracket(BracketKind::Type type, BigFloat::Precision precision);

/// Random very-well-poised problem (VwpE or VwpESimplified weights, one e).
/// Rational scalars use delta = 1 and need the rational bracket.
template <class T>
InterpolationProblem<T> random_vwp_problem(Rng& rng, const BracketKind& kind, long m, long n, WeightFamily family,
                                           const T& like);

/// Parameters drawn for the complex suites: real and imaginary parts in
/// (-1, 1) with a rational grid.
Complex random_parameter(Rng& rng, BigFloat::Precision precision);

}  // namespace hyperlab
