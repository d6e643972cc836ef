#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hyperlab/series/bracket.hpp"

namespace hyperlab {

/// Terminating r+1Fr[upper; lower; z].
template <class T>
struct GeneralizedF {
  std::vector<T> upper;  // alpha_0 .. alpha_r
  std::vector<T> lower;  // beta_1 .. beta_r
  T z;
};

/// Terminating r+5Vr+4[a0; a_1..a_r | z] over the given bracket.
template <class T>
struct VeryWellPoisedV {
  BracketKind bracket;
  T delta;
  T a0;
  std::vector<T> a;
  T z;
};

template <class T>
using SeriesSpec = std::variant<GeneralizedF<T>, VeryWellPoisedV<T>>;

/// n if x is (numerically) the nonpositive integer -n.
std::optional<long> nonpositive_integer(const Rational& x);
std::optional<long> nonpositive_integer(const Complex& x);

/// Throws NonTerminating, PoleBeforeTermination (with k and the parameter).
template <class T>
T eval_F(const GeneralizedF<T>& spec);

/// Throws NonTerminating, PoleBeforeTermination, A0Zero.
template <class T>
T eval_V(const VeryWellPoisedV<T>& spec);

/// Same sum with a prebuilt bracket evaluator.
template <class T>
T eval_V(const Bracket<T>& bracket, const T& delta, const T& a0, const std::vector<T>& a, const T& z);

template <class T>
T eval_series(const SeriesSpec<T>& spec);

/// The k-th very-well-poised term V^(k)[a0; a_1..a_r] (z = 1).
template <class T>
T vwp_term(const Bracket<T>& bracket, const T& delta, long k, const T& a0, const std::vector<T>& a);

template <class T>
T vwp_term(const BracketKind& kind, const T& delta, long k, const T& a0, const std::vector<T>& a);

}  // namespace hyperlab
