#include "qconv/rng.hpp"

#include <cmath>
#include <numbers>

namespace qconv {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined words
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::next_double() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 shifted away from zero so the log is finite
  const double u1 = 1.0 - next_double();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

Complex Rng::next_complex_gaussian() {
  const double re = next_gaussian();
  const double im = next_gaussian();
  return Complex(re, im);
}

Sequence random_unit_vector(std::size_t dim, Rng& rng) {
  Sequence v(dim);
  double n2 = 0.0;
  do {
    for (std::size_t i = 0; i < dim; ++i) v[i] = rng.next_complex_gaussian();
    n2 = norm_squared(v);
  } while (n2 < 1e-12);
  const double inv = 1.0 / std::sqrt(n2);
  for (Complex& z : v) z *= inv;
  return v;
}

}  // namespace qconv
