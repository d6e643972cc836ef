#include <doctest.h>

#include "hyperlab/condensation/condensation.hpp"
#include "hyperlab/error.hpp"
#include "hyperlab/linalg/determinant.hpp"
#include "oracles.hpp"

using namespace hyperlab;

namespace {

const EqPolicy kExact = EqPolicy::exact();

Indices range(std::size_t a, std::size_t b) {
  Indices out;
  for (std::size_t i = a; i < b; ++i) out.push_back(i);
  return out;
}

Indices prepend(std::size_t i, Indices rest) {
  rest.insert(rest.begin(), i);
  return rest;
}

}  // namespace

TEST_CASE("fixed core, 3x3 with r = 2 is entrywise 2x2 minors") {
  Rng rng(1);
  const auto x = oracle::random_matrix(rng, 3, Rational(0));
  const auto y = condense_fixed_core(x, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(y(i, j) == x(i, j) * x(2, 2) - x(i, 2) * x(2, j));
  }
}

TEST_CASE("fixed core identity against direct minors") {
  Rng rng(2);
  for (auto [n, r] : {std::pair<std::size_t, std::size_t>{5, 2}, {6, 3}}) {
    const auto x = oracle::random_matrix(rng, n, Rational(0));
    const auto core = range(r, n);
    Matrix<Rational> y(r, r, Rational(0));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) y(i, j) = oracle::laplace_det(x, prepend(i, core), prepend(j, core));
    }
    CHECK(condense_fixed_core(x, r) == y);
    Rational rhs = oracle::laplace_det(x);
    for (std::size_t k = 1; k < r; ++k) rhs *= oracle::laplace_det(x, core, core);
    CHECK(oracle::laplace_det(y) == rhs);
    CHECK(dodgson_check(x, r, kExact).holds);
  }
}

TEST_CASE("moving core") {
  Rng rng(3);
  const auto x = oracle::random_matrix(rng, 5, Rational(0));
  const auto y1 = condense_moving_core(x, 1);
  CHECK(y1.rows() == 1);
  CHECK(y1(0, 0) == det(x));

  const auto y = condense_moving_core(x, 4);  // s = 1: sliding row pairs
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(y(i, j) == x(i, j) * x(i + 1, 4) - x(i, 4) * x(i + 1, j));
  }

  const std::size_t r = 2, s = 3;
  const auto core = range(r, 5);
  Rational rhs = oracle::laplace_det(x);
  for (std::size_t i = 1; i < r; ++i) rhs *= oracle::laplace_det(x, range(i, i + s), core);
  CHECK(det(condense_moving_core(x, r)) == rhs);
  CHECK(moving_core_check(x, r, kExact).holds);
}

TEST_CASE("renormalized moving core") {
  const auto id = Matrix<Rational>::identity(5, Rational(0));
  for (std::size_t r = 1; r < 5; ++r) {
    CAPTURE(r);
    // Window minors of the identity vanish for r >= 2, which is the degenerate path.
    if (r == 1) {
      CHECK(condense_moving_core_renormalized(id, r) == Matrix<Rational>::identity(1, Rational(0)));
    } else {
      CHECK_THROWS_AS(condense_moving_core_renormalized(id, r), Error);
    }
  }
  Rng rng(4);
  const auto x = oracle::random_matrix(rng, 6, Rational(0));
  const auto y = condense_moving_core_renormalized(x, 3);
  const auto core = range(3, 6);
  CHECK(oracle::laplace_det(x) == oracle::laplace_det(y) * oracle::laplace_det(x, core, core));
  CHECK(renormalized_check(x, 3, kExact).holds);

  auto z = x;
  for (std::size_t j = 3; j < 6; ++j) z(2, j) = z(1, j);  // rows 1,2 agree on the core columns
  try {
    condense_moving_core_renormalized(z, 4);
    FAIL("expected SingularCoreMinor");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularCoreMinor);
    CHECK(std::string(e.what()).find("i=0 (rows 1..2)") != std::string::npos);
  }
}

TEST_CASE("Jacobi and Lewis-Carroll") {
  const auto id = Matrix<Rational>::identity(3, Rational(0));
  const auto rep = jacobi_check(id, kExact);
  CHECK(rep.holds);
  CHECK(rep.lhs == Rational(1));

  Rng rng(5);
  const auto x = oracle::random_matrix(rng, 5, Rational(0));
  // det X det X[1..3;1..3] = det X[0..3;0..3] det X[1..4;1..4] - det X[0..3;1..4] det X[1..4;0..3]
  const Rational lhs = oracle::laplace_det(x) * oracle::laplace_det(x, range(1, 4), range(1, 4));
  const Rational rhs = oracle::laplace_det(x, range(0, 4), range(0, 4)) * oracle::laplace_det(x, range(1, 5), range(1, 5)) -
                       oracle::laplace_det(x, range(0, 4), range(1, 5)) * oracle::laplace_det(x, range(1, 5), range(0, 4));
  CHECK(lhs == rhs);
  CHECK(jacobi_check(x, kExact, BilinearForm::LewisCarroll).holds);
  CHECK(jacobi_check(x, kExact, BilinearForm::Jacobi).holds);

  const auto xc = oracle::random_matrix(rng, 5, Complex(0L, 256));
  CHECK(jacobi_check(xc, EqPolicy::relative(1e-30, 0), BilinearForm::LewisCarroll).holds);
  CHECK(jacobi_check(xc, EqPolicy::relative(1e-30, 0), BilinearForm::Jacobi).holds);
}

TEST_CASE("split and size errors") {
  Rng rng(6);
  const auto x = oracle::random_matrix(rng, 4, Rational(0));
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  CHECK(code([&] { condense_fixed_core(x, 4); }) == ErrorCode::BadSplit);
  CHECK(code([&] { condense_moving_core(x, 0); }) == ErrorCode::BadSplit);
  CHECK(code([&] { jacobi_check(oracle::random_matrix(rng, 2, Rational(0)), kExact); }) == ErrorCode::TooSmall);
}

TEST_CASE("condensation over complex scalars") {
  Rng rng(7);
  const auto x = oracle::random_matrix(rng, 6, Complex(0L, 256));
  const auto tol = EqPolicy::relative(1e-60, 0);
  for (std::size_t r = 1; r < 6; ++r) {
    CHECK(dodgson_check(x, r, tol).holds);
    CHECK(moving_core_check(x, r, tol).holds);
    CHECK(renormalized_check(x, r, tol).holds);
  }
}
