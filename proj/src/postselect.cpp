#include "qconv/postselect.hpp"

#include <cmath>
#include <utility>

#include "qconv/nogo.hpp"

namespace qconv::postselect {

qsim::MeasurementSet diagonal_measurement(int n) {
  if (n < 1) {
    throw InvalidInput("diagonal_measurement: need at least one qubit");
  }
  if (2 * n > 10) {
    // dense operator budget: completeness validation is cubic in the dim
    throw InvalidInput("diagonal_measurement: joint register too large for "
                       "dense operators (n <= 5)");
  }
  const int reg = 1 << n;
  const int dim = reg * reg;
  LinearMap m0(dim, dim);
  for (int i = 0; i < reg; ++i) {
    const int label = i * reg + i;
    m0(label, label) = 1.0;
  }
  LinearMap m1 = LinearMap::identity(dim);
  for (int i = 0; i < reg; ++i) {
    const int label = i * reg + i;
    m1(label, label) = 0.0;
  }
  std::vector<LinearMap> ops;
  ops.push_back(std::move(m0));
  ops.push_back(std::move(m1));
  return qsim::MeasurementSet(std::move(ops));
}

double success_probability(const qsim::QuantumState& a,
                           const qsim::QuantumState& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw InvalidInput("success_probability: register sizes differ");
  }
  double p = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    p += std::norm(a.amplitude(i) * b.amplitude(i));
  }
  return p;
}

PostselectOutcome attempt(const qsim::QuantumState& a,
                          const qsim::QuantumState& b, Rng& rng) {
  if (a.num_qubits() != b.num_qubits()) {
    throw InvalidInput("attempt: register sizes differ");
  }
  // Structured equivalent of measuring a x b with diagonal_measurement:
  // the diagonal Born probability is the same sum of |a_i b_i|^2 and the
  // collapse keeps exactly the diagonal amplitudes. One uniform draw
  // decides the outcome, as in qsim::measure.
  const double p = success_probability(a, b);
  const double u = rng.next_double();
  const bool success = p >= kSamplingFloor && u < p;
  if (!success) {
    return PostselectOutcome{false, std::nullopt, p};
  }
  const std::size_t reg = a.dim();
  Sequence post(reg * reg);
  const double inv = 1.0 / std::sqrt(p);
  for (std::size_t i = 0; i < reg; ++i) {
    post[i * reg + i] = a.amplitude(i) * b.amplitude(i) * inv;
  }
  return PostselectOutcome{
      true,
      qsim::QuantumState(2 * a.num_qubits(), std::move(post)),
      p};
}

std::vector<ScanRow> scan(int n_min, int n_max, Family family, long trials,
                          std::uint64_t seed) {
  if (n_min < 1 || n_max < n_min || n_max > 16) {
    throw InvalidInput("scan: qubit range must satisfy 1 <= n_min <= n_max <= 16");
  }
  if (trials < 1) {
    throw InvalidInput("scan: need at least one trial");
  }
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) {
    const std::uint64_t pair_seed = mix_seed(seed, static_cast<std::uint64_t>(n));
    qsim::QuantumState a = qsim::QuantumState::uniform(n);
    qsim::QuantumState b = a;
    if (family == Family::SeededRandom) {
      Rng pair_rng(pair_seed);
      a = qsim::random_state(n, pair_rng);
      b = qsim::random_state(n, pair_rng);
    }
    const double analytic = family == Family::Uniform
                                ? 1.0 / static_cast<double>(std::size_t{1} << n)
                                : success_probability(a, b);
    long successes = 0;
#pragma omp parallel for schedule(static) reduction(+ : successes)
    for (long t = 0; t < trials; ++t) {
      Rng trial_rng(mix_seed(pair_seed, static_cast<std::uint64_t>(t) + 1));
      if (attempt(a, b, trial_rng).success) ++successes;
    }
    rows.push_back(ScanRow{n, analytic,
                           static_cast<double>(successes) /
                               static_cast<double>(trials),
                           trials, seed});
  }
  return rows;
}

qsim::QuantumState compress_diagonal(const qsim::QuantumState& s) {
  if (s.num_qubits() % 2 != 0) {
    throw InvalidInput("compress_diagonal: state must have 2n qubits");
  }
  const int n = s.num_qubits() / 2;
  const std::size_t reg = std::size_t{1} << n;
  Sequence out(reg);
  double diag_n2 = 0.0;
  for (std::size_t i = 0; i < reg; ++i) {
    out[i] = s.amplitude(i * reg + i);
    diag_n2 += std::norm(out[i]);
  }
  if (std::abs(diag_n2 - 1.0) > kStateNormTol) {
    throw InvalidInput("compress_diagonal: state has off-diagonal support");
  }
  return qsim::QuantumState(n, std::move(out));
}

}  // namespace qconv::postselect
