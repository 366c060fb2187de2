#pragma once

#include <cstdint>
#include <vector>

#include "qconv/linalg.hpp"
#include "qconv/rng.hpp"
#include "qconv/types.hpp"

namespace qconv::qsim {

/// Unit-norm amplitude vector over 2^n basis labels. Basis label i is
/// read big-endian: in a tensor product the first factor occupies the
/// high-order bits, so |i>|j> sits at index i * 2^m + j.
class QuantumState {
 public:
  QuantumState(int num_qubits, Sequence amplitudes);

  static QuantumState basis(int num_qubits, std::size_t index);
  static QuantumState uniform(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const Sequence& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t i) const { return amplitudes_[i]; }

 private:
  int num_qubits_;
  Sequence amplitudes_;
};

/// Encodes a sequence as a state: amplitudes = s / |s|.
/// Length must be a power of two >= 2 and the norm nonzero.
QuantumState from_sequence(const Sequence& s);

QuantumState tensor(const QuantumState& a, const QuantumState& b);

/// Square LinearMap with U^dag U = I = U U^dag, validated at construction.
class UnitaryMap {
 public:
  explicit UnitaryMap(LinearMap m);
  const LinearMap& matrix() const { return matrix_; }
  int dim() const { return matrix_.rows(); }

 private:
  LinearMap matrix_;
};

/// Collection {M_m} with sum_m M_m^dag M_m = I, validated at construction.
class MeasurementSet {
 public:
  explicit MeasurementSet(std::vector<LinearMap> operators);
  const std::vector<LinearMap>& operators() const { return operators_; }
  std::size_t size() const { return operators_.size(); }
  int dim() const { return operators_.front().rows(); }

 private:
  std::vector<LinearMap> operators_;
};

/// One projector |i><i| per basis label.
MeasurementSet computational_basis_measurement(int num_qubits);

QuantumState apply(const UnitaryMap& u, const QuantumState& s);

/// Born probabilities p(m) = <psi| M_m^dag M_m |psi>, clamped to [0, 1].
std::vector<double> outcome_probabilities(const QuantumState& s,
                                          const MeasurementSet& ms);

struct MeasureResult {
  int outcome;
  QuantumState post_state;
};

/// Samples an outcome with one uniform draw and collapses the state to
/// M_m|psi>/sqrt(p(m)). Outcomes below kSamplingFloor are never chosen.
MeasureResult measure(const QuantumState& s, const MeasurementSet& ms,
                      Rng& rng);

/// Dense QFT: entry (k, j) = e^{+2*pi*i*j*k/N} / sqrt(N). Its action on
/// amplitude vectors coincides with spectral::dft.
UnitaryMap qft_dense(int n);

/// Conjugate transpose of the QFT; acts as spectral::idft.
UnitaryMap iqft_dense(int n);

struct Gate {
  enum class Kind { Hadamard, ControlledPhase, Swap };
  Kind kind;
  int q0;              // target (Hadamard) or first qubit
  int q1 = -1;         // control / second qubit
  double angle = 0.0;  // ControlledPhase only
};

/// Hadamard + controlled-phase + final-swap decomposition of the QFT.
/// Gate count is exactly n(n+1)/2 + floor(n/2).
struct QftCircuit {
  int num_qubits;
  std::vector<Gate> gates;
};

QftCircuit qft_circuit(int n);

/// In-place action of one gate on an amplitude vector. Qubit q addresses
/// bit (n-1-q) of the basis label (qubit 0 = most significant).
void apply_gate(Sequence& amplitudes, int num_qubits, const Gate& g);

QuantumState apply_circuit(const QftCircuit& c, const QuantumState& s);

/// Dense matrix of the composed circuit (column j = circuit applied
/// to basis state j).
LinearMap circuit_matrix(const QftCircuit& c);

/// Uniformly random state (complex Gaussian amplitudes, normalized).
QuantumState random_state(int num_qubits, Rng& rng);

}  // namespace qconv::qsim
