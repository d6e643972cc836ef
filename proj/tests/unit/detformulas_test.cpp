#include <doctest.h>

#include "hyperlab/detformulas/abstract_factorized.hpp"
#include "hyperlab/detformulas/krattenthaler.hpp"
#include "hyperlab/detformulas/warnaar.hpp"
#include "hyperlab/error.hpp"
#include "hyperlab/pade/instances.hpp"
#include "oracles.hpp"

using namespace hyperlab;

namespace {

constexpr BigFloat::Precision kP = 256;
const EqPolicy kExact = EqPolicy::exact();
const EqPolicy kTol = EqPolicy::relative(1e-20, 1e-40);

Complex cx(double re, double im = 0.0) { return Complex(re, im, kP); }

template <class T>
std::vector<T> draws(Rng& rng, long n, const T& like) {
  std::vector<T> out;
  for (long i = 0; i < n; ++i) out.push_back(oracle::draw(rng, like));
  return out;
}

template <class T, class Entry>
T direct_det(long size, const T& like, Entry entry) {
  std::vector<std::vector<T>> a(size);
  for (long i = 0; i < size; ++i) {
    for (long j = 0; j < size; ++j) a[i].push_back(entry(i, j));
  }
  return oracle::laplace_det(a, like);
}

template <class T>
T qpoch(const T& a, const T& q, long k) {
  T out = from_int(1, a), qi = from_int(1, a);
  for (long i = 0; i < k; ++i) {
    out *= from_int(1, a) - a * qi;
    qi *= q;
  }
  return out;
}

template <class T>
KrattenthalerData<T> kdata(Rng& rng, long m, const T& like) {
  return {draws(rng, m + 1, like), draws(rng, m, like), draws(rng, m, like), draws(rng, m, like),
          draws(rng, m, like)};
}

}  // namespace

TEST_CASE("Krattenthaler determinant") {
  Rng rng(1);
  const auto d0 = kdata(rng, 0, Rational(0));
  CHECK(krattenthaler_lhs(d0) == Rational(1));
  CHECK(krattenthaler_rhs(d0) == Rational(1));

  const auto d1 = kdata(rng, 1, Rational(0));
  const Rational al = d1.alpha[0], be = d1.beta[0], ga = d1.gamma[0], de = d1.delta[0];
  const Rational x0 = d1.x[0], x1 = d1.x[1];
  const Rational hand = (al * de - be * ga) * (x1 - x0) / ((ga * x0 + de) * (ga * x1 + de));
  CHECK(krattenthaler_lhs(d1) == hand);
  CHECK(krattenthaler_rhs(d1) == hand);

  for (int t = 0; t < 5; ++t) {
    const auto d = kdata(rng, 4, Rational(0));
    const Rational direct = direct_det(5, Rational(0), [&](long i, long j) {
      Rational e(1);
      for (long k = 0; k < j; ++k) e *= (d.alpha[k] * d.x[i] + d.beta[k]) / (d.gamma[k] * d.x[i] + d.delta[k]);
      return e;
    });
    CHECK(krattenthaler_lhs(d) == direct);
    CHECK(krattenthaler_rhs(d) == direct);
  }

  auto bad = kdata(rng, 2, Rational(0));
  bad.delta[1] = -bad.gamma[1] * bad.x[2];
  CHECK_THROWS_AS(krattenthaler_lhs(bad), Error);
  CHECK_THROWS_AS(krattenthaler_rhs(bad), Error);
}

TEST_CASE("shifted ratio determinant") {
  Rng rng(2);
  const Rational a = rng.rational(), b = rng.rational() + rational(1, 991);
  CHECK(shifted_ratio_det_rhs(a, b, {rng.rational()}) == Rational(1));
  CHECK(shifted_ratio_det_rhs(a, b, {Rational(0), Rational(1)}) == (b - a) / (b * (b + Rational(1))));
  const auto x = draws(rng, 4, Rational(0));
  const Rational direct = direct_det(4, Rational(0), [&](long i, long j) {
    return oracle::rising(a + x[i], j) / oracle::rising(b + x[i], j);
  });
  CHECK(shifted_ratio_det_lhs(a, b, x) == direct);
  CHECK(shifted_ratio_det_rhs(a, b, x) == direct);
  CHECK_THROWS_AS(shifted_ratio_det_rhs(a, -x[1] - Rational(2), x), Error);
}

TEST_CASE("q-ratio determinants") {
  Rng rng(3);
  using P = QRatioParams<Complex>;
  auto in_disk = [&] { return rng.complex(kP, 120); };
  for (auto which : {P::Case::B, P::Case::C}) {
    for (auto form : {P::Form::General, P::Form::EqualBase}) {
      CAPTURE(static_cast<int>(which));
      CAPTURE(static_cast<int>(form));
      P p{which, form, in_disk(), in_disk(), in_disk(), in_disk(), in_disk(), draws(rng, 4, cx(0))};
      if (form == P::Form::EqualBase) p.p = p.q;
      const Complex direct = direct_det(4, cx(0), [&](long i, long j) {
        const Complex& z = p.nodes[i];
        if (which == P::Case::B) return qpoch(p.a * z, p.p, j) / qpoch(p.b * z, p.q, j);
        return qpoch(p.a * z, p.p, j) * qpoch(p.a * p.c / z, p.p, j) /
               (qpoch(p.b * z, p.q, j) * qpoch(p.b * p.c / z, p.q, j));
      });
      const auto rep = q_ratio_det_check(p, kTol);
      CHECK(rep.holds);
      CHECK(scalar_eq(rep.rhs, direct, kTol));

      P zero = p;
      zero.nodes.erase(zero.nodes.begin() + 1, zero.nodes.end());
      const auto r0 = q_ratio_det_check(zero, kTol);
      CHECK(scalar_eq(r0.lhs, cx(1), kTol));
      CHECK(scalar_eq(r0.rhs, cx(1), kTol));
    }
  }
  QRatioParams<Rational> exact{QRatioParams<Rational>::Case::C, QRatioParams<Rational>::Form::General,
                               rng.rational(), rng.rational(), rng.nonzero_rational(), rng.rational(),
                               rng.rational(), {rng.nonzero_rational(), rng.nonzero_rational(), rng.nonzero_rational()}};
  CHECK(q_ratio_det_check(exact, kExact).holds);
}

TEST_CASE("Warnaar determinant") {
  Rng rng(4);
  auto pm = [](const auto& br, const auto& u, const auto& v) { return br(u + v) * br(u - v); };
  const Bracket<Rational> rat(BracketKind::rational(), Rational(0));
  CHECK(warnaar_check(rat, {rng.rational()}, {}, {}, kExact).holds);

  const auto x = draws(rng, 4, Rational(0)), a = draws(rng, 3, Rational(0)), b = draws(rng, 3, Rational(0));
  const Rational direct = direct_det(4, Rational(0), [&](long i, long j) {
    Rational e(1);
    for (long k = 0; k < j; ++k) e *= pm(rat, a[k], x[i]) / pm(rat, b[k], x[i]);
    return e;
  });
  const auto rep = warnaar_check(rat, x, a, b, kExact);
  CHECK(rep.holds);
  CHECK(rep.rhs == direct);

  // Quadratic factors: [a ± x] = a^2 - x^2 is linear in X = x^2.
  KrattenthalerData<Rational> kd;
  for (const auto& xi : x) kd.x.push_back(xi * xi);
  for (long k = 0; k < 3; ++k) {
    kd.alpha.push_back(Rational(-1));
    kd.beta.push_back(a[k] * a[k]);
    kd.gamma.push_back(Rational(-1));
    kd.delta.push_back(b[k] * b[k]);
  }
  CHECK(krattenthaler_rhs(kd) == direct);

  const Bracket<Complex> ell(BracketKind::elliptic(cx(1), cx(0.3, 1.1)), cx(0));
  const auto cx_ = draws(rng, 4, cx(0)), ca = draws(rng, 3, cx(0)), cb = draws(rng, 3, cx(0));
  const Complex cdirect = direct_det(4, cx(0), [&](long i, long j) {
    Complex e = cx(1);
    for (long k = 0; k < j; ++k) e *= pm(ell, ca[k], cx_[i]) / pm(ell, cb[k], cx_[i]);
    return e;
  });
  const auto crep = warnaar_check(ell, cx_, ca, cb, kTol);
  CHECK(crep.holds);
  CHECK(scalar_eq(crep.rhs, cdirect, kTol));
}

TEST_CASE("Warnaar shifted form") {
  Rng rng(5);
  for (const auto& kind : {BracketKind::elliptic(cx(1), cx(0.3, 1.1)), BracketKind::trigonometric(cx(1))}) {
    const Bracket<Complex> br(kind, cx(0));
    const long m = kind.type == BracketKind::Type::Elliptic ? 2 : 3;
    const Complex a = oracle::draw(rng, cx(0)), b = oracle::draw(rng, cx(0)), d = cx(0.2) + rng.complex(kP, 400);
    const auto x = draws(rng, m + 1, cx(0));
    auto fac = [&](const Complex& u, long k) {
      Complex out = cx(1);
      for (long i = 0; i < k; ++i) out *= br(u + cx(i) * d);
      return out;
    };
    const Complex direct = direct_det(m + 1, cx(0), [&](long i, long j) {
      return fac(a + x[i], j) * fac(a - x[i], j) / (fac(b + x[i], j) * fac(b - x[i], j));
    });
    const auto rep = warnaar_shifted_check(br, a, b, d, x, kTol);
    CHECK(rep.holds);
    CHECK(scalar_eq(rep.rhs, direct, kTol));
    CHECK(scalar_eq(warnaar_shifted_rhs(br, a, b, d, {x[0]}), cx(1), kTol));
  }
}

TEST_CASE("abstract factorized determinant") {
  Rng rng(6);
  const auto kd = kdata(rng, 3, Rational(0));
  const auto in = factorized_from_krattenthaler(kd, kExact);
  CHECK(abstract_factorized_det(in, 0, kExact).lhs == Rational(1));
  for (long m = 0; m <= 2; ++m) {
    const auto rep = abstract_factorized_det(in, m, kExact);
    CHECK(rep.holds);
    KrattenthalerData<Rational> sub{{kd.x.begin(), kd.x.begin() + m + 1},
                                    {kd.alpha.begin(), kd.alpha.begin() + m},
                                    {kd.beta.begin(), kd.beta.begin() + m},
                                    {kd.gamma.begin(), kd.gamma.begin() + m},
                                    {kd.delta.begin(), kd.delta.begin() + m}};
    CHECK(rep.lhs == krattenthaler_lhs(sub));
  }

  const Bracket<Complex> ell(BracketKind::elliptic(cx(1), cx(0.3, 1.1)), cx(0));
  const auto bin = factorized_from_brackets(ell, draws(rng, 4, cx(0)), draws(rng, 3, cx(0)), draws(rng, 3, cx(0)), kTol);
  CHECK(abstract_factorized_det(bin, 2, kTol).holds);

  // Broken factorization and antisymmetry are caught.
  Matrix<Rational> p = in.p(), q = in.q();
  p(0, 1) += Rational(1);
  CHECK_THROWS_AS(FactorizedDetInput<Rational>(in.a(), in.b(), p, in.q(), kExact), Error);
  p = in.p();
  q(0, 0) += Rational(1);
  CHECK_THROWS_AS(FactorizedDetInput<Rational>(in.a(), in.b(), p, q, kExact), Error);
  Matrix<Rational> b = in.b();
  b(1, 0) = Rational(0);
  CHECK_THROWS_AS(FactorizedDetInput<Rational>(in.a(), b, in.p(), in.q(), kExact), Error);
}

TEST_CASE("tau bilinear recurrence against direct minors") {
  Rng rng(7);
  auto check = [](const auto& in, long m, const EqPolicy& policy) {
    using T = std::decay_t<decltype(in.a()(0, 0))>;
    const T like = in.a().proto();
    auto tau = [&](long size, long rs, long cs) {
      return direct_det(size + 1, like, [&](long i, long j) {
        T e = from_int(1, like);
        for (long k = 0; k < j; ++k) e *= in.a()(i + rs, k + cs) / in.b()(i + rs, k + cs);
        return e;
      });
    };
    const T lhs = tau(m + 1, 0, 0) * (m >= 1 ? tau(m - 1, 1, 1) : from_int(1, like));
    const T rhs = in.a()(m + 1, 0) / in.b()(m + 1, 0) * tau(m, 0, 0) * tau(m, 1, 1) -
                  in.a()(0, 0) / in.b()(0, 0) * tau(m, 0, 1) * tau(m, 1, 0);
    CHECK(scalar_eq(lhs, rhs, policy));
    const auto rep = tau_bilinear_check(in, m, policy);
    CHECK(rep.holds);
    CHECK(scalar_eq(rep.lhs, lhs, policy));
  };
  check(factorized_from_krattenthaler(kdata(rng, 2, Rational(0)), kExact), 1, kExact);
  const Bracket<Rational> rat(BracketKind::rational(), Rational(0));
  check(factorized_from_brackets(rat, draws(rng, 4, Rational(0)), draws(rng, 3, Rational(0)),
                                 draws(rng, 3, Rational(0)), kExact),
        2, kExact);
  const Bracket<Complex> ell(BracketKind::elliptic(cx(1), cx(0.3, 1.1)), cx(0));
  check(factorized_from_brackets(ell, draws(rng, 4, cx(0)), draws(rng, 3, cx(0)), draws(rng, 3, cx(0)), kTol), 2,
        kTol);

  const auto small = factorized_from_krattenthaler(kdata(rng, 2, Rational(0)), kExact);
  CHECK_THROWS_AS(tau_bilinear_check(small, 2, kExact), Error);
}
