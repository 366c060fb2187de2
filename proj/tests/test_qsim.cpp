#include "qconv/qsim.hpp"

#include <cmath>
#include <map>

#include "doctest.h"
#include "qconv/spectral.hpp"
#include "test_helpers.hpp"

using namespace qconv;
using namespace qconv::qsim;
using qconv::test::check_close;
using qconv::test::check_sequences_close;

namespace {
const double kInvRoot2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("QuantumState validates its invariants") {
  CHECK_NOTHROW(QuantumState(1, {kInvRoot2, kInvRoot2}));
  CHECK_THROWS_AS(QuantumState(1, {1.0, 1.0}), InvalidInput);      // norm 2
  CHECK_THROWS_AS(QuantumState(2, {1.0, 0.0}), InvalidInput);      // wrong dim
  CHECK_THROWS_AS(QuantumState(0, {1.0}), InvalidInput);
  Sequence bad{1.0, Complex(0.0, std::nan(""))};
  CHECK_THROWS_AS(QuantumState(1, std::move(bad)), InvalidInput);
}

TEST_CASE("from_sequence normalizes and reports errors") {
  const QuantumState s = from_sequence({3.0, 4.0});
  CHECK(s.num_qubits() == 1);
  check_close(s.amplitude(0), 0.6, 1e-15);
  check_close(s.amplitude(1), 0.8, 1e-15);

  CHECK_THROWS_AS(from_sequence({0.0, 0.0}), ZeroNormError);
  CHECK_THROWS_AS(from_sequence({1.0, 2.0, 3.0}), InvalidInput);
  CHECK_THROWS_AS(from_sequence({1.0}), InvalidInput);

  const QuantumState u = from_sequence({1.0, 1.0, 1.0, 1.0});
  check_sequences_close(u.amplitudes(), QuantumState::uniform(2).amplitudes(),
                        1e-15);
}

TEST_CASE("tensor uses high-order bits for the first factor") {
  const QuantumState zero = QuantumState::basis(1, 0);
  const QuantumState one = QuantumState::basis(1, 1);
  const QuantumState t = tensor(zero, one);
  CHECK(t.num_qubits() == 2);
  check_close(t.amplitude(1), 1.0, 0.0);  // |01>

  check_sequences_close(
      tensor(QuantumState::uniform(1), QuantumState::uniform(1)).amplitudes(),
      QuantumState::uniform(2).amplitudes(), 1e-15);

  Rng rng(41);
  const QuantumState a = random_state(2, rng);
  const QuantumState b = random_state(3, rng);
  CHECK(std::abs(norm(tensor(a, b).amplitudes()) - 1.0) <= 1e-12);
}

TEST_CASE("UnitaryMap accepts unitaries and rejects the rest") {
  Rng rng(42);
  CHECK_NOTHROW(UnitaryMap(random_unitary_matrix(8, rng)));
  LinearMap not_unitary = LinearMap::identity(4);
  not_unitary(0, 0) = 2.0;
  CHECK_THROWS_AS(UnitaryMap(std::move(not_unitary)), InvalidInput);
  CHECK_THROWS_AS(UnitaryMap(LinearMap(2, 3)), InvalidInput);
}

TEST_CASE("apply preserves states and rejects mismatches") {
  Rng rng(43);
  const QuantumState s = random_state(3, rng);
  const UnitaryMap id(LinearMap::identity(8));
  check_sequences_close(apply(id, s).amplitudes(), s.amplitudes(), 0.0);

  const UnitaryMap h = qft_dense(1);  // Hadamard
  const QuantumState hs = apply(h, QuantumState::basis(1, 0));
  check_close(hs.amplitude(0), kInvRoot2, 1e-15);
  check_close(hs.amplitude(1), kInvRoot2, 1e-15);

  for (int rep = 0; rep < 5; ++rep) {
    const UnitaryMap u(random_unitary_matrix(8, rng));
    CHECK(std::abs(norm(apply(u, s).amplitudes()) - 1.0) <= 1e-10);
  }
  CHECK_THROWS_AS(apply(id, random_state(2, rng)), InvalidInput);
}

TEST_CASE("MeasurementSet enforces completeness eagerly") {
  CHECK_NOTHROW(computational_basis_measurement(2));
  // a lone projector is not complete
  LinearMap p(2, 2);
  p(0, 0) = 1.0;
  std::vector<LinearMap> ops;
  ops.push_back(std::move(p));
  CHECK_THROWS_AS(MeasurementSet(std::move(ops)), InvalidInput);
  CHECK_THROWS_AS(MeasurementSet(std::vector<LinearMap>{}), InvalidInput);
}

TEST_CASE("Born probabilities on the computational basis") {
  const QuantumState s(1, {0.6, 0.8});
  const MeasurementSet ms = computational_basis_measurement(1);
  const std::vector<double> p = outcome_probabilities(s, ms);
  REQUIRE(p.size() == 2);
  CHECK(p[0] == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(p[1] == doctest::Approx(0.64).epsilon(1e-12));

  // identity singleton set: probability one
  std::vector<LinearMap> ops;
  ops.push_back(LinearMap::identity(2));
  const MeasurementSet idset{std::move(ops)};
  const std::vector<double> q = outcome_probabilities(s, idset);
  REQUIRE(q.size() == 1);
  CHECK(q[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("probabilities sum to one on random states and measurements") {
  Rng rng(44);
  for (int n = 1; n <= 3; ++n) {
    const QuantumState s = random_state(n, rng);
    const MeasurementSet ms = computational_basis_measurement(n);
    double total = 0.0;
    for (const double p : outcome_probabilities(s, ms)) {
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("measure collapses deterministically certain outcomes") {
  Rng rng(45);
  const MeasurementSet ms = computational_basis_measurement(1);
  for (int rep = 0; rep < 10; ++rep) {
    const MeasureResult r = measure(QuantumState::basis(1, 0), ms, rng);
    CHECK(r.outcome == 0);
    check_close(r.post_state.amplitude(0), 1.0, 1e-12);
  }
}

TEST_CASE("measure frequencies track the Born rule") {
  const QuantumState s(1, {0.6, 0.8});
  const MeasurementSet ms = computational_basis_measurement(1);
  const int trials = 10000;
  Rng rng(46);
  int zeros = 0;
  for (int t = 0; t < trials; ++t) {
    const MeasureResult r = measure(s, ms, rng);
    if (r.outcome == 0) ++zeros;
    CHECK(std::abs(norm(r.post_state.amplitudes()) - 1.0) <= 1e-10);
  }
  const double freq = static_cast<double>(zeros) / trials;
  const double sigma = std::sqrt(0.36 * 0.64 / trials);
  CHECK(std::abs(freq - 0.36) <= 3.0 * sigma);
}

TEST_CASE("measure is reproducible per seed") {
  Rng a(47), b(47);
  const QuantumState s = QuantumState::uniform(2);
  const MeasurementSet ms = computational_basis_measurement(2);
  for (int t = 0; t < 64; ++t) {
    CHECK(measure(s, ms, a).outcome == measure(s, ms, b).outcome);
  }
}

TEST_CASE("qft_dense matches the closed form on one qubit") {
  const UnitaryMap qft = qft_dense(1);
  const QuantumState plus = apply(qft, QuantumState::basis(1, 0));
  check_close(plus.amplitude(0), kInvRoot2, 1e-15);
  check_close(plus.amplitude(1), kInvRoot2, 1e-15);
  const QuantumState minus = apply(qft, QuantumState::basis(1, 1));
  check_close(minus.amplitude(0), kInvRoot2, 1e-15);
  check_close(minus.amplitude(1), -kInvRoot2, 1e-15);
}

TEST_CASE("qft and iqft are inverses") {
  for (int n = 1; n <= 6; ++n) {
    const LinearMap prod =
        multiply(qft_dense(n).matrix(), iqft_dense(n).matrix());
    CHECK(deviation_from_identity(prod) <= 1e-10);
  }
}

TEST_CASE("qft acts on amplitudes exactly as the spectral dft") {
  Rng rng(48);
  for (int n = 1; n <= 6; ++n) {
    const UnitaryMap qft = qft_dense(n);
    const UnitaryMap iqft = iqft_dense(n);
    for (int rep = 0; rep < 3; ++rep) {
      const QuantumState s = random_state(n, rng);
      check_sequences_close(apply(qft, s).amplitudes(),
                            spectral::dft(s.amplitudes()), 1e-10);
      check_sequences_close(apply(iqft, s).amplitudes(),
                            spectral::idft(s.amplitudes()), 1e-10);
    }
  }
}

TEST_CASE("qft circuit composes to the dense qft with the exact gate count") {
  for (int n = 1; n <= 7; ++n) {
    const QftCircuit c = qft_circuit(n);
    const std::size_t expected = static_cast<std::size_t>(n) * (n + 1) / 2 +
                                 static_cast<std::size_t>(n) / 2;
    CHECK(c.gates.size() == expected);
    CHECK(max_abs_diff(circuit_matrix(c), qft_dense(n).matrix()) <= 1e-9);
  }
  CHECK(qft_circuit(1).gates.size() == 1);
  CHECK(qft_circuit(8).gates.size() == 40);
}

TEST_CASE("apply_circuit agrees with the dense transform") {
  Rng rng(49);
  const QftCircuit c = qft_circuit(5);
  const UnitaryMap dense = qft_dense(5);
  const QuantumState s = random_state(5, rng);
  check_sequences_close(apply_circuit(c, s).amplitudes(),
                        apply(dense, s).amplitudes(), 1e-10);
}

TEST_CASE("tensor then per-register unitaries equals the kron operator") {
  Rng rng(50);
  const QuantumState a = random_state(1, rng);
  const QuantumState b = random_state(2, rng);
  const UnitaryMap ua(random_unitary_matrix(2, rng));
  const UnitaryMap ub(random_unitary_matrix(4, rng));
  const UnitaryMap joint(kron(ua.matrix(), ub.matrix()));
  check_sequences_close(
      apply(joint, tensor(a, b)).amplitudes(),
      tensor(apply(ua, a), apply(ub, b)).amplitudes(), 1e-12);
}
