// Compares the serial reference kernels against the OpenMP ones and the
// fast transforms. Not a correctness gate; the unit tests pin equality.

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "qconv/linalg.hpp"
#include "qconv/postselect.hpp"
#include "qconv/qsim.hpp"
#include "qconv/rng.hpp"
#include "qconv/spectral.hpp"

using namespace qconv;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  fn();  // warm up
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-34s %10.3f %10.3f %8.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial ms", "omp ms",
              "speedup");

  Rng rng(1);
  for (const std::size_t n : {1024u, 2048u, 4096u}) {
    const Sequence s = random_unit_vector(n, rng);
    char name[64];
    std::snprintf(name, sizeof name, "direct dft, N=%zu", n);
    const double serial_ms =
        time_ms([&] { (void)spectral::serial::dft(s); }, 3);
    const double omp_ms = time_ms([&] { (void)spectral::dft(s); }, 10);
    row(name, serial_ms, omp_ms);
    std::snprintf(name, sizeof name, "fft, N=%zu", n);
    const double fft_ms = time_ms([&] { (void)spectral::fft(s); }, 50);
    std::printf("%-34s %10s %10.3f\n", name, "-", fft_ms);
  }

  {
    const int dim = 1024;
    LinearMap m = random_unitary_matrix(dim, rng);
    const Sequence v = random_unit_vector(dim, rng);
    const double serial_ms =
        time_ms([&] { (void)qconv::serial::apply(m, v); }, 20);
    const double omp_ms = time_ms([&] { (void)qconv::apply(m, v); }, 20);
    row("matvec, dim=1024", serial_ms, omp_ms);
  }

  {
    const int dim = 256;
    LinearMap a = random_unitary_matrix(dim, rng);
    LinearMap b = random_unitary_matrix(dim, rng);
    const double serial_ms = time_ms([&] { (void)serial::multiply(a, b); }, 3);
    const double omp_ms = time_ms([&] { (void)multiply(a, b); }, 3);
    row("matmul, dim=256", serial_ms, omp_ms);
  }

  {
    // trial fan-out inside scan: 1 thread vs all
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const double serial_ms = time_ms(
        [&] {
          (void)postselect::scan(8, 8, postselect::Family::Uniform, 20000, 7);
        },
        3);
    omp_set_num_threads(saved);
    const double omp_ms = time_ms(
        [&] {
          (void)postselect::scan(8, 8, postselect::Family::Uniform, 20000, 7);
        },
        3);
    row("postselect scan, n=8, 2e4 trials", serial_ms, omp_ms);
  }

  return 0;
}
