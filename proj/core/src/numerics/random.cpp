#include "hyperlab/numerics/random.hpp"

namespace hyperlab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::fork(std::uint64_t stream) const {
  return Rng(splitmix64(seed_ ^ splitmix64(stream_)), stream);
}

std::uint64_t Rng::next() {
  return splitmix64(splitmix64(seed_) ^ splitmix64(stream_ + 0x632be59bd9b4e019ULL) ^ counter_++);
}

long Rng::uniform_int(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

double Rng::uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Rational Rng::rational() {
  const long num = uniform_int(-99, 99);
  const long den = uniform_int(1, 20);
  return Rational(num, den);
}

Rational Rng::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (!r.is_zero()) return r;
  }
}

Complex Rng::complex(BigFloat::Precision precision, long scale) {
  const Rational re = rational() / Rational(scale);
  const Rational im = rational() / Rational(scale);
  return Complex(re, im, precision);
}

Complex Rng::nonzero_complex(BigFloat::Precision precision, long scale) {
  for (;;) {
    Complex z = complex(precision, scale);
    if (!z.is_zero()) return z;
  }
}

}  // namespace hyperlab
