#pragma once

#include <cstdint>

#include "hyperlab/numerics/complex.hpp"
#include "hyperlab/numerics/rational.hpp"

namespace hyperlab {

/// Counter-based generator: the k-th draw of (seed, stream) is
/// splitmix64(seed, stream, k) and never depends on other streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

  /// Independent generator for a sub-task (e.g. trial index).
  Rng fork(std::uint64_t stream) const;

  std::uint64_t next();
  /// Uniform in [lo, hi].
  long uniform_int(long lo, long hi);
  /// Uniform in [0, 1).
  double uniform_real();

  /// p/q with p in [-99, 99], q in [1, 20].
  Rational rational();
  Rational nonzero_rational();
  /// Real and imaginary parts drawn as rational() / scale.
  Complex complex(BigFloat::Precision precision, long scale = 100);
  Complex nonzero_complex(BigFloat::Precision precision, long scale = 100);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace hyperlab
