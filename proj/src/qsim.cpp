#include "qconv/qsim.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace qconv::qsim {

namespace {

void require_state_dims(int num_qubits, const Sequence& amplitudes) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw InvalidInput("QuantumState: num_qubits must be in [1, 30]");
  }
  if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
    throw InvalidInput("QuantumState: amplitude count must be 2^num_qubits");
  }
}

}  // namespace

QuantumState::QuantumState(int num_qubits, Sequence amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  require_state_dims(num_qubits_, amplitudes_);
  if (!qconv::all_finite(amplitudes_)) {
    throw InvalidInput("QuantumState: amplitudes must be finite");
  }
  const double n = qconv::norm(amplitudes_);
  if (std::abs(n - 1.0) > kStateNormTol) {
    throw InvalidInput("QuantumState: amplitudes must have unit norm");
  }
}

QuantumState QuantumState::basis(int num_qubits, std::size_t index) {
  if (num_qubits < 1 || index >= (std::size_t{1} << num_qubits)) {
    throw InvalidInput("QuantumState::basis: index out of range");
  }
  Sequence amps(std::size_t{1} << num_qubits);
  amps[index] = 1.0;
  return QuantumState(num_qubits, std::move(amps));
}

QuantumState QuantumState::uniform(int num_qubits) {
  if (num_qubits < 1) {
    throw InvalidInput("QuantumState::uniform: need at least one qubit");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  Sequence amps(dim, Complex{1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
  return QuantumState(num_qubits, std::move(amps));
}

QuantumState from_sequence(const Sequence& s) {
  if (!is_power_of_two(s.size()) || s.size() < 2) {
    throw InvalidInput(
        "from_sequence: length must be a power of two of at least 2");
  }
  if (!qconv::all_finite(s)) {
    throw InvalidInput("from_sequence: entries must be finite");
  }
  const double n = qconv::norm(s);
  if (n == 0.0) {
    throw ZeroNormError("from_sequence: sequence has zero norm");
  }
  Sequence amps = s;
  const double inv = 1.0 / n;
  for (Complex& z : amps) z *= inv;
  return QuantumState(log2_exact(s.size()), std::move(amps));
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
  return QuantumState(a.num_qubits() + b.num_qubits(),
                      qconv::kron(a.amplitudes(), b.amplitudes()));
}

UnitaryMap::UnitaryMap(LinearMap m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw InvalidInput("UnitaryMap: matrix must be square");
  }
  if (!all_finite(matrix_)) {
    throw InvalidInput("UnitaryMap: entries must be finite");
  }
  if (deviation_from_identity(multiply(dagger(matrix_), matrix_)) >
      kOperatorTol) {
    throw InvalidInput("UnitaryMap: U^dag U deviates from identity");
  }
}

MeasurementSet::MeasurementSet(std::vector<LinearMap> operators)
    : operators_(std::move(operators)) {
  if (operators_.empty()) {
    throw InvalidInput("MeasurementSet: need at least one operator");
  }
  const int dim = operators_.front().rows();
  for (const LinearMap& m : operators_) {
    if (m.rows() != dim || m.cols() != dim) {
      throw InvalidInput("MeasurementSet: operators must be square, same dim");
    }
    if (!all_finite(m)) {
      throw InvalidInput("MeasurementSet: entries must be finite");
    }
  }
  LinearMap sum(dim, dim);
  for (const LinearMap& m : operators_) {
    const LinearMap term = multiply(dagger(m), m);
    for (std::size_t i = 0; i < sum.entries().size(); ++i) {
      sum.entries()[i] += term.entries()[i];
    }
  }
  if (deviation_from_identity(sum) > kOperatorTol) {
    throw InvalidInput("MeasurementSet: completeness sum deviates from I");
  }
}

MeasurementSet computational_basis_measurement(int num_qubits) {
  if (num_qubits < 1) {
    throw InvalidInput("computational_basis_measurement: need >= 1 qubit");
  }
  const int dim = 1 << num_qubits;
  std::vector<LinearMap> ops;
  ops.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    LinearMap p(dim, dim);
    p(i, i) = 1.0;
    ops.push_back(std::move(p));
  }
  return MeasurementSet(std::move(ops));
}

QuantumState apply(const UnitaryMap& u, const QuantumState& s) {
  if (static_cast<std::size_t>(u.dim()) != s.dim()) {
    throw InvalidInput("apply: operator and state dimensions differ");
  }
  return QuantumState(s.num_qubits(), qconv::apply(u.matrix(), s.amplitudes()));
}

std::vector<double> outcome_probabilities(const QuantumState& s,
                                          const MeasurementSet& ms) {
  if (static_cast<std::size_t>(ms.dim()) != s.dim()) {
    throw InvalidInput("outcome_probabilities: dimension mismatch");
  }
  std::vector<double> probs;
  probs.reserve(ms.size());
  for (const LinearMap& m : ms.operators()) {
    const double p = norm_squared(qconv::apply(m, s.amplitudes()));
    probs.push_back(std::min(std::max(p, 0.0), 1.0));
  }
  return probs;
}

MeasureResult measure(const QuantumState& s, const MeasurementSet& ms,
                      Rng& rng) {
  if (static_cast<std::size_t>(ms.dim()) != s.dim()) {
    throw InvalidInput("measure: dimension mismatch");
  }
  std::vector<Sequence> collapsed;
  std::vector<double> probs;
  collapsed.reserve(ms.size());
  probs.reserve(ms.size());
  double total = 0.0;
  for (const LinearMap& m : ms.operators()) {
    Sequence y = qconv::apply(m, s.amplitudes());
    const double p = norm_squared(y);
    collapsed.push_back(std::move(y));
    probs.push_back(p);
    if (p >= kSamplingFloor) total += p;
  }
  if (total <= 0.0) {
    throw DegenerateMeasurementError(
        "measure: every outcome probability is below the sampling floor");
  }
  const double u = rng.next_double() * total;
  int outcome = -1;
  double cum = 0.0;
  for (std::size_t m = 0; m < probs.size(); ++m) {
    if (probs[m] < kSamplingFloor) continue;
    cum += probs[m];
    outcome = static_cast<int>(m);
    if (u < cum) break;
  }
  Sequence post = std::move(collapsed[static_cast<std::size_t>(outcome)]);
  const double inv = 1.0 / std::sqrt(probs[static_cast<std::size_t>(outcome)]);
  for (Complex& z : post) z *= inv;
  return MeasureResult{outcome, QuantumState(s.num_qubits(), std::move(post))};
}

namespace {

LinearMap fourier_matrix(int n, int sign) {
  if (n < 1) {
    throw InvalidInput("qft: need at least one qubit");
  }
  const std::size_t dim = std::size_t{1} << n;
  const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  LinearMap m(static_cast<int>(dim), static_cast<int>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j < dim; ++j) {
      m(static_cast<int>(k), static_cast<int>(j)) =
          scale * std::polar(1.0, step * static_cast<double>((j * k) % dim));
    }
  }
  return m;
}

}  // namespace

UnitaryMap qft_dense(int n) { return UnitaryMap(fourier_matrix(n, +1)); }

UnitaryMap iqft_dense(int n) { return UnitaryMap(fourier_matrix(n, -1)); }

QftCircuit qft_circuit(int n) {
  if (n < 1) {
    throw InvalidInput("qft_circuit: need at least one qubit");
  }
  QftCircuit c{n, {}};
  for (int q = 0; q < n; ++q) {
    c.gates.push_back({Gate::Kind::Hadamard, q, -1, 0.0});
    for (int m = q + 1; m < n; ++m) {
      const double angle =
          2.0 * std::numbers::pi / std::pow(2.0, static_cast<double>(m - q + 1));
      c.gates.push_back({Gate::Kind::ControlledPhase, q, m, angle});
    }
  }
  for (int q = 0; q < n / 2; ++q) {
    c.gates.push_back({Gate::Kind::Swap, q, n - 1 - q, 0.0});
  }
  return c;
}

void apply_gate(Sequence& amplitudes, int num_qubits, const Gate& g) {
  const std::size_t dim = amplitudes.size();
  if (dim != (std::size_t{1} << num_qubits)) {
    throw InvalidInput("apply_gate: amplitude count must be 2^num_qubits");
  }
  const auto bit_of = [num_qubits](int q) -> std::size_t {
    if (q < 0 || q >= num_qubits) {
      throw InvalidInput("apply_gate: qubit index out of range");
    }
    return std::size_t{1} << (num_qubits - 1 - q);
  };
  switch (g.kind) {
    case Gate::Kind::Hadamard: {
      const std::size_t bit = bit_of(g.q0);
      const double inv = 1.0 / std::numbers::sqrt2;
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        const Complex u = amplitudes[i];
        const Complex v = amplitudes[i | bit];
        amplitudes[i] = inv * (u + v);
        amplitudes[i | bit] = inv * (u - v);
      }
      break;
    }
    case Gate::Kind::ControlledPhase: {
      const std::size_t b0 = bit_of(g.q0);
      const std::size_t b1 = bit_of(g.q1);
      if (b0 == b1) {
        throw InvalidInput("apply_gate: controlled phase needs two qubits");
      }
      const Complex phase = std::polar(1.0, g.angle);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & b0) && (i & b1)) amplitudes[i] *= phase;
      }
      break;
    }
    case Gate::Kind::Swap: {
      const std::size_t b0 = bit_of(g.q0);
      const std::size_t b1 = bit_of(g.q1);
      if (b0 == b1) {
        throw InvalidInput("apply_gate: swap needs two distinct qubits");
      }
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & b0) && !(i & b1)) {
          std::swap(amplitudes[i], amplitudes[(i ^ b0) | b1]);
        }
      }
      break;
    }
  }
}

QuantumState apply_circuit(const QftCircuit& c, const QuantumState& s) {
  if (c.num_qubits != s.num_qubits()) {
    throw InvalidInput("apply_circuit: qubit count mismatch");
  }
  Sequence amps = s.amplitudes();
  for (const Gate& g : c.gates) apply_gate(amps, c.num_qubits, g);
  return QuantumState(s.num_qubits(), std::move(amps));
}

LinearMap circuit_matrix(const QftCircuit& c) {
  const std::size_t dim = std::size_t{1} << c.num_qubits;
  LinearMap m(static_cast<int>(dim), static_cast<int>(dim));
  Sequence col(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::fill(col.begin(), col.end(), Complex{});
    col[j] = 1.0;
    for (const Gate& g : c.gates) apply_gate(col, c.num_qubits, g);
    for (std::size_t r = 0; r < dim; ++r) {
      m(static_cast<int>(r), static_cast<int>(j)) = col[r];
    }
  }
  return m;
}

QuantumState random_state(int num_qubits, Rng& rng) {
  if (num_qubits < 1) {
    throw InvalidInput("random_state: need at least one qubit");
  }
  return QuantumState(num_qubits,
                      random_unit_vector(std::size_t{1} << num_qubits, rng));
}

}  // namespace qconv::qsim
