#include "hyperlab/pade/instances.hpp"

#include "hyperlab/pade/solve.hpp"

namespace hyperlab {

namespace {

constexpr int kMaxAttempts = 200;

bool degenerate(const Error& e) { return classify(e.code()) == ErrorClass::Degenerate; }

template <class T, class Draw>
InterpolationProblem<T> redraw(Draw draw) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    try {
      auto prob = draw();
      require_generic(prob);
      solve_bruteforce(prob);
      return prob;
    } catch (const Error& e) {
      if (!degenerate(e)) throw;
    }
  }
  throw Error(ErrorCode::DegenerateSolution, "no valid instance after " + std::to_string(kMaxAttempts) + " draws");
}

Rational draw(Rng& rng, const Rational&) { return rng.rational(); }
Complex draw(Rng& rng, const Complex& like) { return random_parameter(rng, like.precision()); }

}  // namespace

Complex random_parameter(Rng& rng, BigFloat::Precision precision) { return rng.complex(precision, 100); }

InterpolationProblem<Rational> random_explicit_problem(Rng& rng, long m, long n) {
  return redraw<Rational>([&] {
    const long count = m + n + 1;
    std::vector<Rational> lambda, mu, points;
    for (long k = 0; k < count; ++k) {
      lambda.push_back(rng.nonzero_rational());
      mu.push_back(rng.nonzero_rational());
      points.push_back(rng.rational());
    }
    const Rational a = rng.rational(), b = rng.rational(), c = rng.rational(), d = rng.rational();
    auto base = build_rational_hg_problem(a, b, c, d, points.front(), m, n, lambda, mu);
    auto f = [base](long j, const Rational& x) { return base.f(j, x); };
    auto g = [base](long j, const Rational& x) { return base.g(j, x); };
    for (const auto& x : points) {
      for (long j = 0; j <= m; ++j) f(j, x);
      for (long j = 0; j <= n; ++j) g(j, x);
    }
    return InterpolationProblem<Rational>(m, n, f, g, points, lambda, mu, base.family());
  });
}

InterpolationProblem<Rational> random_hg_problem(Rng& rng, long m, long n, WeightFamily family) {
  return redraw<Rational>([&] {
    WeightSpec<Rational> spec{family, {rng.rational()}, {rng.rational()}, {}, rng.nonzero_rational(),
                              rng.nonzero_rational()};
    return build_rational_hg_problem(rng.rational(), rng.rational(), rng.rational(), rng.rational(), rng.rational(),
                                     m, n, spec);
  });
}

BracketKind standard_bracket(BracketKind::Type type, BigFloat::Precision precision) {
  switch (type) {
    case BracketKind::Type::Rational: return BracketKind::rational();
    case BracketKind::Type::Trigonometric: return BracketKind::trigonometric(Complex(1L, precision));
    case BracketKind::Type::Elliptic:
      return BracketKind::elliptic(Complex(1L, precision), Complex(rational(3, 10), rational(11, 10), precision));
  }
  return BracketKind::rational();
}

template <class T>
InterpolationProblem<T> random_vwp_problem(Rng& rng, const BracketKind& kind, long m, long n, WeightFamily family,
                                           const T& like) {
  return redraw<T>([&] {
    T delta = from_int(1, like);
    if constexpr (std::is_same_v<T, Complex>) {
      delta = Complex(rational(1, 5), Rational(0), like.precision()) + rng.complex(like.precision(), 400);
    }
    const T one = from_int(1, like);
    WeightSpec<T> spec{family, {}, {}, {draw(rng, like)}, one + draw(rng, like), one + draw(rng, like)};
    return build_vwp_problem(kind, draw(rng, like), draw(rng, like), draw(rng, like), draw(rng, like),
                             draw(rng, like), delta, m, n, spec);
  });
}

template InterpolationProblem<Rational> random_vwp_problem(Rng&, const BracketKind&, long, long, WeightFamily,
                                                           const Rational&);
template InterpolationProblem<Complex> random_vwp_problem(Rng&, const BracketKind&, long, long, WeightFamily,
                                                          const Complex&);

}  // namespace hyperlab
