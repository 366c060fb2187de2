#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qconv {

using Complex = std::complex<double>;
using Sequence = std::vector<Complex>;

inline constexpr const char* kVersion = "0.1.0";

// Absolute tolerances at the library's working scale (transforms up to
// N = 4096, dense operators up to n = 10 qubits). Rounding error grows
// roughly as N * machine epsilon, so these leave ample headroom.
inline constexpr double kStateNormTol = 1e-10;
inline constexpr double kOperatorTol = 1e-10;

// Outcomes with probability below this floor are excluded from sampling;
// collapsing onto them would divide by a vanishing norm.
inline constexpr double kSamplingFloor = 1e-14;

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroNormError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ZeroOverlapError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DegenerateMeasurementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double norm_squared(const Sequence& v);
double norm(const Sequence& v);

/// <x|y>, conjugate-linear in the first argument.
Complex inner(const Sequence& x, const Sequence& y);

double max_abs_diff(const Sequence& x, const Sequence& y);

bool all_finite(const Sequence& v);

bool is_power_of_two(std::size_t n);

/// log2 of an exact power of two; throws InvalidInput otherwise.
int log2_exact(std::size_t n);

/// Tensor product of coefficient vectors; the first factor occupies the
/// high-order part of the index: out[i * y.size() + j] = x[i] * y[j].
Sequence kron(const Sequence& x, const Sequence& y);

}  // namespace qconv
