#include "qconv/spectral.hpp"

#include <cmath>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace qconv;
using namespace qconv::spectral;
using qconv::test::check_sequences_close;
using qconv::test::random_sequence;
using qconv::test::random_unit_sequence;

namespace {
const Complex kI{0.0, 1.0};
}

TEST_CASE("dft maps delta to uniform and uniform to delta") {
  const Sequence delta{1.0, 0.0, 0.0, 0.0};
  check_sequences_close(dft(delta), {0.5, 0.5, 0.5, 0.5}, 1e-15);

  const double r = 1.0 / std::sqrt(2.0);
  check_sequences_close(dft({r, r}), {1.0, 0.0}, 1e-15);
  check_sequences_close(idft({1.0, 0.0}), {r, r}, 1e-15);
}

TEST_CASE("dft kernel matches the serial reference") {
  Rng rng(11);
  for (const std::size_t n : {1u, 2u, 3u, 5u, 16u, 37u, 128u}) {
    const Sequence s = random_unit_sequence(n, rng);
    check_sequences_close(dft(s), serial::dft(s), 1e-10);
    check_sequences_close(idft(s), serial::idft(s), 1e-10);
  }
}

TEST_CASE("dft is unitary: Parseval and round trip") {
  Rng rng(12);
  for (const std::size_t n : {2u, 8u, 64u, 100u}) {
    const Sequence s = random_sequence(n, rng);
    CHECK(std::abs(norm(dft(s)) - norm(s)) <= 1e-9);
    check_sequences_close(idft(dft(s)), s, 1e-9);
  }
}

TEST_CASE("fft equals the direct dft on power-of-two sizes") {
  Rng rng(13);
  for (std::size_t n = 1; n <= 512; n <<= 1) {
    for (int rep = 0; rep < 3; ++rep) {
      const Sequence s = random_unit_sequence(n, rng);
      check_sequences_close(fft(s), dft(s), 1e-10);
      check_sequences_close(ifft(s), idft(s), 1e-10);
    }
  }
}

TEST_CASE("ifft inverts fft") {
  Rng rng(14);
  const Sequence s = random_unit_sequence(4096, rng);
  check_sequences_close(ifft(fft(s)), s, 1e-9);
}

TEST_CASE("fft rejects non-power-of-two lengths") {
  CHECK_THROWS_AS(fft(Sequence(3)), InvalidInput);
  CHECK_THROWS_AS(ifft(Sequence(12)), InvalidInput);
  CHECK_THROWS_AS(fft(Sequence{}), InvalidInput);
}

TEST_CASE("transforms reject empty input") {
  CHECK_THROWS_AS(dft(Sequence{}), InvalidInput);
  CHECK_THROWS_AS(idft(Sequence{}), InvalidInput);
  CHECK_THROWS_AS(serial::dft(Sequence{}), InvalidInput);
}

TEST_CASE("convolution by hand: [1,2] * [3,4]") {
  const Sequence got = convolve_direct({1.0, 2.0}, {3.0, 4.0});
  check_sequences_close(got, {11.0, 10.0}, 1e-15);
}

TEST_CASE("delta is the convolution identity") {
  Rng rng(15);
  const Sequence s = random_sequence(8, rng);
  Sequence delta(8);
  delta[0] = 1.0;
  check_sequences_close(convolve_direct(delta, s), s, 1e-15);
}

TEST_CASE("correlation by hand") {
  check_sequences_close(correlate_direct({1.0, 2.0}, {3.0, 4.0}),
                        {11.0, 10.0}, 1e-15);
  // conj(i) * 1 lands at lag zero
  check_sequences_close(correlate_direct({kI, 0.0}, {1.0, 0.0}),
                        {-kI, 0.0}, 1e-15);

  Rng rng(16);
  const Sequence s = random_sequence(8, rng);
  Sequence delta(8);
  delta[0] = 1.0;
  check_sequences_close(correlate_direct(delta, s), s, 1e-15);
}

TEST_CASE("direct convolution/correlation reject length mismatch") {
  CHECK_THROWS_AS(convolve_direct(Sequence(4), Sequence(8)), InvalidInput);
  CHECK_THROWS_AS(correlate_direct(Sequence(4), Sequence(8)), InvalidInput);
  CHECK_THROWS_AS(convolve_direct(Sequence{}, Sequence{}), InvalidInput);
}

TEST_CASE("fast convolution and correlation match the direct sums") {
  check_sequences_close(convolve_fast({1.0, 2.0}, {3.0, 4.0}), {11.0, 10.0},
                        1e-12);
  Rng rng(17);
  for (const std::size_t n : {2u, 16u, 64u, 512u}) {
    const Sequence a = random_unit_sequence(n, rng);
    const Sequence b = random_unit_sequence(n, rng);
    check_sequences_close(convolve_fast(a, b), convolve_direct(a, b), 1e-8);
    check_sequences_close(correlate_fast(a, b), correlate_direct(a, b), 1e-8);
  }
}

TEST_CASE("spectral product theorems with the unitary convention") {
  Rng rng(18);
  for (const std::size_t n : {4u, 32u, 256u}) {
    const Sequence a = random_unit_sequence(n, rng);
    const Sequence b = random_unit_sequence(n, rng);
    const Sequence fa = dft(a);
    const Sequence fb = dft(b);
    const double root_n = std::sqrt(static_cast<double>(n));

    Sequence conv_expect(n), corr_expect(n);
    for (std::size_t k = 0; k < n; ++k) {
      conv_expect[k] = root_n * fa[k] * fb[k];
      corr_expect[k] = root_n * std::conj(fa[k]) * fb[k];
    }
    check_sequences_close(dft(convolve_direct(a, b)), conv_expect, 1e-8);
    check_sequences_close(dft(correlate_direct(a, b)), corr_expect, 1e-8);
  }
}

TEST_CASE("pad_zeros appends N zeros") {
  check_sequences_close(pad_zeros({1.0, 2.0}), {1.0, 2.0, 0.0, 0.0}, 0.0);
  check_sequences_close(pad_zeros({0.0, 5.0}), {0.0, 5.0, 0.0, 0.0}, 0.0);
  CHECK_THROWS_AS(pad_zeros(Sequence{}), InvalidInput);
}

TEST_CASE("padding guarantees a nonzero entry at a predictable index") {
  Rng rng(19);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = std::size_t{1} << (1 + rng.next_u64() % 5);
    Sequence a = random_sequence(n, rng);
    Sequence b = random_sequence(n, rng);
    // random leading/trailing zeros vary the support bounds
    const std::size_t za = rng.next_u64() % n;
    const std::size_t zb = rng.next_u64() % n;
    for (std::size_t i = 0; i < za; ++i) a[i] = 0.0;
    for (std::size_t i = 0; i < zb; ++i) b[i] = 0.0;
    const std::size_t ta = rng.next_u64() % (n - za);
    for (std::size_t i = 0; i < ta; ++i) a[n - 1 - i] = 0.0;

    std::size_t i0 = 0, j0 = 0, i1 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(a[i]) > 0) { i0 = i; break; }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(b[i]) > 0) { j0 = i; break; }
    }
    for (std::size_t i = n; i-- > 0;) {
      if (std::abs(a[i]) > 0) { i1 = i; break; }
    }

    const Sequence pa = pad_zeros(a);
    const Sequence pb = pad_zeros(b);
    const Sequence conv = convolve_direct(pa, pb);
    const Sequence corr = correlate_direct(pa, pb);
    qconv::test::check_close(conv[i0 + j0], a[i0] * b[j0], 1e-12);
    const std::size_t corr_idx = (j0 + 2 * n - i1) % (2 * n);
    qconv::test::check_close(corr[corr_idx], std::conj(a[i1]) * b[j0], 1e-12);
  }
}

TEST_CASE("normalize rescales to unit norm and keeps the scale") {
  const NormalizedSequence ns = normalize({3.0, 4.0});
  CHECK(ns.scale == doctest::Approx(5.0));
  check_sequences_close(ns.values, {0.6, 0.8}, 1e-15);

  const NormalizedSequence id = normalize({1.0, 0.0});
  CHECK(id.scale == doctest::Approx(1.0));
  check_sequences_close(id.values, {1.0, 0.0}, 0.0);

  const NormalizedSequence u = normalize({1.0, 1.0, 1.0, 1.0});
  CHECK(u.scale == doctest::Approx(2.0));
  check_sequences_close(u.values, {0.5, 0.5, 0.5, 0.5}, 1e-15);

  // scale * values reproduces the original
  Rng rng(20);
  const Sequence s = random_sequence(16, rng);
  const NormalizedSequence r = normalize(s);
  Sequence back(r.values);
  for (Complex& z : back) z *= r.scale;
  check_sequences_close(back, s, 1e-12);
}

TEST_CASE("normalize rejects the zero sequence") {
  CHECK_THROWS_AS(normalize(Sequence(4)), ZeroNormError);
  CHECK_THROWS_AS(normalize(Sequence{}), InvalidInput);
}
