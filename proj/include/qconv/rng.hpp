#pragma once

#include <cstdint>
#include <random>

#include "qconv/types.hpp"

namespace qconv {

/// Derives an independent stream seed from (seed, index); splitmix64 mix.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Explicitly seeded 64-bit generator injected into every stochastic
/// operation. The distribution transforms are hand-rolled because the
/// standard library leaves theirs implementation-defined; identical seeds
/// therefore reproduce identical draw sequences bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1), 53-bit resolution.
  double next_double();

  /// Standard normal via Box-Muller.
  double next_gaussian();

  /// Independent standard normals in both components.
  Complex next_complex_gaussian();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Unit-norm vector with independent complex-Gaussian entries
/// (uniform on the sphere).
Sequence random_unit_vector(std::size_t dim, Rng& rng);

}  // namespace qconv
