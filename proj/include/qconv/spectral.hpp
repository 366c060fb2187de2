#pragma once

#include "qconv/types.hpp"

namespace qconv::spectral {

struct NormalizedSequence {
  Sequence values;  // unit Euclidean norm
  double scale;     // the norm divided out; scale * values == original
};

// Transform conventions: the forward kernel is e^{+2*pi*i*j*k/N}, the
// inverse kernel e^{-2*pi*i*j*k/N}, and both directions carry 1/sqrt(N),
// so each is unitary and they invert each other.

/// Direct O(N^2) forward transform, any N >= 1. OpenMP-parallel over
/// outputs for large N; bitwise deterministic at any thread count.
Sequence dft(const Sequence& s);

/// Direct O(N^2) inverse transform.
Sequence idft(const Sequence& s);

/// Iterative radix-2 transform, power-of-two N only; agrees with dft/idft.
Sequence fft(const Sequence& s);
Sequence ifft(const Sequence& s);

/// Cyclic convolution by the defining sum, gamma_k = sum_j a_j b_{k-j},
/// indices mod N. Inputs must have equal nonzero length.
Sequence convolve_direct(const Sequence& a, const Sequence& b);

/// Cyclic correlation, gamma_k = sum_j conj(a_j) b_{k+j}, indices mod N.
Sequence correlate_direct(const Sequence& a, const Sequence& b);

/// FFT route: transform both inputs, multiply the spectra componentwise
/// (conjugating the first spectrum for correlation), inverse-transform,
/// and rescale by sqrt(N). Equals the direct sums.
Sequence convolve_fast(const Sequence& a, const Sequence& b);
Sequence correlate_fast(const Sequence& a, const Sequence& b);

/// Appends N zeros to a length-N sequence.
Sequence pad_zeros(const Sequence& s);

/// Scales to unit Euclidean norm; throws ZeroNormError on all-zero input.
NormalizedSequence normalize(const Sequence& s);

namespace serial {

// Reference transforms: one exponential per term, no blocking, no
// threads. Kept permanently as oracles for the tuned kernels above.
Sequence dft(const Sequence& s);
Sequence idft(const Sequence& s);

}  // namespace serial

}  // namespace qconv::spectral
