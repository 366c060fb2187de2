#include "qconv/spectral.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace qconv::spectral {

namespace {

// w[t] = e^{sign * 2*pi*i * t / n}
Sequence unit_roots(std::size_t n, int sign) {
  Sequence w(n);
  const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t t = 0; t < n; ++t) {
    w[t] = std::polar(1.0, step * static_cast<double>(t));
  }
  return w;
}

// Direct summation out_j = (1/sqrt(N)) sum_k s_k w^{jk}. Each output

// walks the root table with its own stride; four running indices and
// accumulators break the dependence chain in the inner loop.
Sequence direct_transform(const Sequence& s, int sign) {
  if (s.empty()) {
    throw InvalidInput("spectral: empty sequence");
  }
  const std::size_t n = s.size();
  const Sequence w = unit_roots(n, sign);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Sequence out(n);

  const std::int64_t nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (nn >= 256)
  for (std::int64_t j = 0; j < nn; ++j) {
    const std::size_t stride = static_cast<std::size_t>(j);
    const std::size_t step4 = (4 * stride) % n;
    std::size_t i0 = 0;
    std::size_t i1 = stride % n;
    std::size_t i2 = (2 * stride) % n;
    std::size_t i3 = (3 * stride) % n;
    Complex a0{}, a1{}, a2{}, a3{};
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
      a0 += s[k] * w[i0];
      a1 += s[k + 1] * w[i1];
      a2 += s[k + 2] * w[i2];
      a3 += s[k + 3] * w[i3];
      i0 += step4;
      if (i0 >= n) i0 -= n;
      i1 += step4;
      if (i1 >= n) i1 -= n;
      i2 += step4;
      if (i2 >= n) i2 -= n;
      i3 += step4;
      if (i3 >= n) i3 -= n;
    }
    Complex acc = (a0 + a1) + (a2 + a3);
    std::size_t idx = (k * stride) % n;
    for (; k < n; ++k) {
      acc += s[k] * w[idx];
      idx += stride;
      if (idx >= n) idx -= n;
    }
    out[static_cast<std::size_t>(j)] = scale * acc;
  }
  return out;
}

// Iterative radix-2 with bit-reversal permutation; stage twiddles are
// read from the full-size root table at stride n/len.
Sequence pow2_transform(Sequence a, int sign) {
  const std::size_t n = a.size();
  if (!is_power_of_two(n)) {
    throw InvalidInput("spectral: fft length must be a power of two");
  }
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const Sequence w = unit_roots(n, sign);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t tstep = n / len;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t t = 0; t < half; ++t) {
        const Complex u = a[base + t];
        const Complex v = a[base + t + half] * w[t * tstep];
        a[base + t] = u + v;
        a[base + t + half] = u - v;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (Complex& z : a) z *= scale;
  return a;
}

void require_equal_lengths(const Sequence& a, const Sequence& b) {
  if (a.empty() || a.size() != b.size()) {
    throw InvalidInput("spectral: sequences must have equal nonzero length");
  }
}

}  // namespace

Sequence dft(const Sequence& s) { return direct_transform(s, +1); }

Sequence idft(const Sequence& s) { return direct_transform(s, -1); }

Sequence fft(const Sequence& s) { return pow2_transform(s, +1); }

Sequence ifft(const Sequence& s) { return pow2_transform(s, -1); }

Sequence convolve_direct(const Sequence& a, const Sequence& b) {
  require_equal_lengths(a, b);
  const std::size_t n = a.size();
  Sequence out(n);
  const std::int64_t nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (nn >= 128)
  for (std::int64_t k = 0; k < nn; ++k) {
    const std::size_t uk = static_cast<std::size_t>(k);
    Complex acc{};
    for (std::size_t j = 0; j <= uk; ++j) acc += a[j] * b[uk - j];
    for (std::size_t j = uk + 1; j < n; ++j) acc += a[j] * b[uk + n - j];
    out[uk] = acc;
  }
  return out;
}

Sequence correlate_direct(const Sequence& a, const Sequence& b) {
  require_equal_lengths(a, b);
  const std::size_t n = a.size();
  Sequence out(n);
  const std::int64_t nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (nn >= 128)
  for (std::int64_t k = 0; k < nn; ++k) {
    const std::size_t uk = static_cast<std::size_t>(k);
    Complex acc{};
    std::size_t idx = uk;
    for (std::size_t j = 0; j < n; ++j) {
      acc += std::conj(a[j]) * b[idx];
      ++idx;
      if (idx >= n) idx -= n;
    }
    out[uk] = acc;
  }
  return out;
}

Sequence convolve_fast(const Sequence& a, const Sequence& b) {
  require_equal_lengths(a, b);
  Sequence fa = fft(a);
  const Sequence fb = fft(b);
  for (std::size_t k = 0; k < fa.size(); ++k) fa[k] *= fb[k];
  Sequence out = ifft(fa);
  const double root_n = std::sqrt(static_cast<double>(out.size()));
  for (Complex& z : out) z *= root_n;
  return out;
}

Sequence correlate_fast(const Sequence& a, const Sequence& b) {
  require_equal_lengths(a, b);
  Sequence fa = fft(a);
  const Sequence fb = fft(b);
  for (std::size_t k = 0; k < fa.size(); ++k) fa[k] = std::conj(fa[k]) * fb[k];
  Sequence out = ifft(fa);
  const double root_n = std::sqrt(static_cast<double>(out.size()));
  for (Complex& z : out) z *= root_n;
  return out;
}

Sequence pad_zeros(const Sequence& s) {
  if (s.empty()) {
    throw InvalidInput("pad_zeros: empty sequence");
  }
  Sequence out = s;
  out.resize(2 * s.size(), Complex{});
  return out;
}

NormalizedSequence normalize(const Sequence& s) {
  if (s.empty()) {
    throw InvalidInput("normalize: empty sequence");
  }
  const double scale = norm(s);
  if (scale == 0.0) {
    throw ZeroNormError("normalize: sequence has zero norm");
  }
  NormalizedSequence out{s, scale};
  const double inv = 1.0 / scale;
  for (Complex& z : out.values) z *= inv;
  return out;
}

namespace serial {

namespace {

Sequence reference_transform(const Sequence& s, int sign) {
  if (s.empty()) {
    throw InvalidInput("spectral: empty sequence");
  }
  const std::size_t n = s.size();
  const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Sequence out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex acc{};
    for (std::size_t k = 0; k < n; ++k) {
      // index reduced mod n before the exponential
      acc += s[k] * std::polar(1.0, step * static_cast<double>((j * k) % n));
    }
    out[j] = scale * acc;
  }
  return out;
}

}  // namespace

Sequence dft(const Sequence& s) { return reference_transform(s, +1); }

Sequence idft(const Sequence& s) { return reference_transform(s, -1); }

}  // namespace serial

}  // namespace qconv::spectral
