#include <doctest.h>

#include <cmath>

#include "hyperlab/error.hpp"
#include "hyperlab/numerics/random.hpp"
#include "hyperlab/numerics/scalar.hpp"

using namespace hyperlab;

namespace {

Complex c(double re, double im = 0.0) { return Complex(re, im, 256); }

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("rational construction normalizes") {
  CHECK(rational(2, 4).to_string() == "1/2");
  CHECK(rational(3, -6).to_string() == "-1/2");
  CHECK(rational(0, 7).to_string() == "0/1");
  CHECK(Rational("-10/4") == rational(-5, 2));
  CHECK(code_of([] { rational(1, 0); }) == ErrorCode::ZeroDenominator);
  CHECK(code_of([] { Rational(1) / Rational(0); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("rational field axioms on random draws") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const Rational a = rng.rational(), b = rng.rational(), x = rng.nonzero_rational();
    const Rational big(mpq_class(mpz_class(static_cast<long>(rng.next() >> 1)), 97));
    CHECK((a + b) + big == a + (b + big));
    CHECK(a * (b + big) == a * b + a * big);
    CHECK(x * (Rational(1) / x) == Rational(1));
  }
}

TEST_CASE("scalar_eq policies") {
  CHECK(scalar_eq(rational(1, 2), rational(2, 4), EqPolicy::exact()));
  CHECK(scalar_eq(c(1.0), c(1.0 + 1e-15), EqPolicy::relative(1e-9, 0)));
  CHECK_FALSE(scalar_eq(c(1.0), c(1.01), EqPolicy::relative(1e-9, 0)));
  CHECK(scalar_eq(c(0.0), c(1e-50), EqPolicy::relative(1e-9, 1e-40)));
  CHECK(code_of([] { scalar_eq(Scalar(Rational(1)), Scalar(c(1.0)), EqPolicy::exact()); }) ==
        ErrorCode::MixedScalarKinds);
  CHECK(code_of([] { scalar_eq(Rational(1), Rational(1), EqPolicy::relative(1e-9, 0)); }) == ErrorCode::BadPolicy);
}

TEST_CASE("complex precision is never mixed") {
  CHECK(code_of([] { Complex(1L, 128) + Complex(1L, 256); }) == ErrorCode::MixedPrecision);
  const Complex z = Complex(rational(1, 3), rational(-2, 7), 256) * Complex(3L, 256);
  CHECK(z.precision() == 256);
  CHECK(scalar_eq(z, Complex(Rational(1), rational(-6, 7), 256), EqPolicy::relative(1e-70, 0)));
}

TEST_CASE("complex rounding stays within the per-operation bound") {
  // Dyadic operands are exact at 256 bits, so the only error is the operation's.
  Rng rng(3);
  const double ulp = std::ldexp(1.0, 1 - 256);
  auto dyadic = [&] { return Rational(mpq_class(mpz_class(static_cast<long>(rng.next() >> 2)), mpz_class(1) << 61)); };
  for (int t = 0; t < 100; ++t) {
    const Rational ar = dyadic(), ai = -dyadic(), br = dyadic(), bi = dyadic();
    const Complex a(ar, ai, 256), b(br, bi, 256);
    const Complex sum_exact(ar + br, ai + bi, 512), prod_exact(ar * br - ai * bi, ar * bi + ai * br, 512);
    const Complex sum = a + b, prod = a * b;
    auto rel_err = [](const Complex& approx, const Complex& exact) {
      BigFloat re(512), im(512);
      mpfr_set(re.get(), approx.real().get(), MPFR_RNDN);
      mpfr_set(im.get(), approx.imag().get(), MPFR_RNDN);
      const Complex wide(re, im);
      return (abs(wide - exact) / abs(exact)).to_double();
    };
    CHECK(rel_err(sum, sum_exact) <= ulp);
    CHECK(rel_err(prod, prod_exact) <= ulp);
  }
}

TEST_CASE("proj_eq") {
  using V = std::vector<Rational>;
  const auto exact = EqPolicy::exact();
  CHECK(proj_eq(V{1, 2, 3}, V{2, 4, 6}, exact));
  CHECK(proj_eq(V{1, 0, 3}, V{2, 0, 6}, exact));
  CHECK_FALSE(proj_eq(V{1, 2}, V{2, 5}, exact));
  CHECK_FALSE(proj_eq(V{1, 0}, V{0, 1}, exact));
  CHECK(code_of([&] { proj_eq(V{1, 2}, V{1}, exact); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([&] { proj_eq(V{0, 0}, V{0, 0}, exact); }) == ErrorCode::AllZeroVectors);

  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    V v{rng.rational(), rng.nonzero_rational(), rng.rational()};
    const Rational k1 = rng.nonzero_rational(), k2 = rng.nonzero_rational();
    V w, x;
    for (const auto& e : v) {
      w.push_back(k1 * e);
      x.push_back(k2 * k1 * e);
    }
    CHECK(proj_eq(v, v, exact));
    CHECK(proj_eq(w, v, exact));
    CHECK(proj_eq(v, x, exact));
    CHECK(proj_eq(w, x, exact));
  }
}

TEST_CASE("random generator is reproducible and in range") {
  Rng a(42), b(42);
  for (int t = 0; t < 500; ++t) {
    const Rational x = a.rational();
    CHECK(x == b.rational());
    CHECK(abs(x.numerator()) <= 99);
    CHECK(x.denominator() <= 20);
  }
  CHECK(Rng(42).fork(3).next() == Rng(42).fork(3).next());
  CHECK(Rng(42).fork(3).next() != Rng(42).fork(4).next());
}
