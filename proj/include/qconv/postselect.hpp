#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qconv/qsim.hpp"
#include "qconv/rng.hpp"
#include "qconv/types.hpp"

namespace qconv::postselect {

struct PostselectOutcome {
  bool success;
  std::optional<qsim::QuantumState> post_state;  // support only on |ii>
  double probability;  // analytic success probability for this input pair
};

struct ScanRow {
  int n;
  double analytic_p;
  double empirical_p;
  long trials;
  std::uint64_t seed;
};

enum class Family { Uniform, SeededRandom };

/// Two-outcome measurement on 2n qubits: M0 projects onto the diagonal
/// subspace span{|ii>}, M1 = I - M0. Completeness holds exactly.
/// Dense; intended for joint dimensions within the dense operator budget.
qsim::MeasurementSet diagonal_measurement(int n);

/// sum_i |a_i b_i|^2, the chance the diagonal outcome is observed on
/// a x b.
double success_probability(const qsim::QuantumState& a,
                           const qsim::QuantumState& b);

/// Forms a x b and applies the diagonal measurement. On the diagonal
/// outcome the state collapses to lambda sum_i a_i b_i |ii>, the
/// componentwise product the no-go forbids producing deterministically.
/// Uses the dense measurement for small joint dimension and an
/// algebraically identical structured path beyond it.
PostselectOutcome attempt(const qsim::QuantumState& a,
                          const qsim::QuantumState& b, Rng& rng);

/// Success-probability scan over register sizes. For each n one input
/// pair is fixed (uniform states, or a seeded random pair), its analytic
/// probability recorded, and `trials` independent seeded attempts are
/// counted. Trials fan out in parallel; counts merge deterministically.
std::vector<ScanRow> scan(int n_min, int n_max, Family family, long trials,
                          std::uint64_t seed);

/// Relabels a diagonal-supported 2n-qubit state |ii> -> |i>. Throws
/// InvalidInput if the state has off-diagonal support.
qsim::QuantumState compress_diagonal(const qsim::QuantumState& s);

}  // namespace qconv::postselect
