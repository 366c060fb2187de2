#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qconv/qsim.hpp"
#include "qconv/types.hpp"

namespace qconv::nogo {

/// A candidate linear process: a square map on (register x register x
/// ancilla) together with the fixed ancilla state it consumes. This is
/// the object the residual search tries, and fails, to fit.
class CandidateProcess {
 public:
  /// map must be square with dimension reg_dim^2 * ancilla.size();
  /// ancilla must have unit norm.
  CandidateProcess(int reg_dim, LinearMap map, Sequence ancilla);

  int reg_dim() const { return reg_dim_; }
  int ancilla_dim() const { return static_cast<int>(ancilla_.size()); }
  const LinearMap& map() const { return map_; }
  const Sequence& ancilla() const { return ancilla_; }

 private:
  int reg_dim_;
  LinearMap map_;
  Sequence ancilla_;
};

/// How far a process output is from the required form
/// (target first register) x (arbitrary unit second factor).
/// total == 0 exactly when the output factors that way.
struct ResidualReport {
  double norm_deviation;     // | ||phi|| - 1 |
  double factor_infidelity;  // 1 - <t|rho1|t> / tr(rho1), in [0, 1]
  double total;              // sum of the two
};

/// Evaluation of the normalization expression
///   f(eps) = MN C2^2 + eps^2 MN (C1^2 - C2^2)
///            + 2 eps sqrt(1-eps^2) MN C1 C2
/// at eps in {0, 1/2, 1}; contradiction is set when the three
/// constraints f = 1 cannot all hold.
struct AnalyticReport {
  double c1;
  double c2;
  std::map<double, double> lhs_values;
  bool contradiction;
};

/// Normalized componentwise product the no-go forbids producing:
/// first_register = lambda * a_i b_i (or lambda * conj(a_i) b_i).
struct TargetSpec {
  qsim::QuantumState first_register;
  double lambda;  // 1 / sqrt(sum |a_i b_i|^2)
};

/// The one-parameter input family used in the impossibility argument:
/// a = (eps, sqrt(1-eps^2), 0, ...), b = (1, 0, ...). Its target
/// normalization factor is exactly 1/eps.
std::pair<qsim::QuantumState, qsim::QuantumState> epsilon_states(double eps,
                                                                 int n);

/// Throws ZeroOverlapError when every componentwise product vanishes.
TargetSpec target_product(const qsim::QuantumState& a,
                          const qsim::QuantumState& b, bool conjugate_first);

/// Residual of candidate c on input pair (a, b):
/// phi = map (a x b x ancilla), scored against the target product.
ResidualReport residual(const CandidateProcess& c, const qsim::QuantumState& a,
                        const qsim::QuantumState& b, bool conjugate_first);

/// The metric itself, on a raw output vector phi of dimension
/// target.size() * rest_dim. Exposed so tests can probe it directly.
ResidualReport output_residual(const Sequence& phi, const Sequence& target,
                               int rest_dim);

/// Checks whether constants (C1, C2) satisfy the normalization
/// constraint at eps = 0, 1/2 and 1 simultaneously, for ancilla
/// dimension M and register dimension N.
AnalyticReport contradiction_check(double c1, double c2, int ancilla_dim,
                                   int reg_dim, double tol = 1e-9);

struct Probe {
  qsim::QuantumState a;
  qsim::QuantumState b;
  std::string label;
};

struct ProbeSet {
  std::string id;
  std::vector<Probe> probes;
};

/// Builds a probe set from its parameters: the epsilon family plus the
/// two-parameter product family a = (cos t, sin t), b = (cos p, sin p)
/// on a theta_count x phi_count grid over (0, pi).
ProbeSet make_probe_set(const std::string& id,
                        const std::vector<double>& epsilons, int theta_count,
                        int phi_count);

/// The versioned set residual-floor regressions are frozen against:
/// eps in {0.1, ..., 0.9} plus a 5x5 product grid. N = 2 registers.
ProbeSet standard_probe_set();

struct SearchConfig {
  int reg_dim = 2;      // N, power of two
  int ancilla_dim = 1;  // M, power of two
  int restarts = 50;
  int budget = 200;  // descent iterations per restart
  std::uint64_t seed = 0;
  bool conjugate_first = false;
};

struct SearchResult {
  CandidateProcess best;
  double worst_residual;          // max over probes at the best candidate
  std::vector<double> per_probe;  // residual totals, probe order
  int best_restart;
};

/// Random-restart descent (Adam on finite-difference gradients, then a
/// backtracking polish) minimizing the worst-case residual over the
/// probes. Restarts run in parallel with derived seeds; the merge takes
/// the minimum with ties broken by restart index, so the result is
/// deterministic per seed at any thread count.
SearchResult search_best_candidate(const SearchConfig& cfg,
                                   const ProbeSet& probes);

/// A reference process standing in for the hypothetical P: it receives
/// the joint two-register state plus out-of-band classical knowledge of
/// the coefficient sequences it encodes, and returns the normalized
/// result state. Classical knowledge is the deliberate cheat; no
/// physical process gets it.
using ProductOracle = std::function<qsim::QuantumState(
    const qsim::QuantumState& joint, const Sequence& alpha,
    const Sequence& beta)>;

ProductOracle classical_convolution_oracle();
ProductOracle classical_correlation_oracle();

/// QFT o P o (IQFT x IQFT) applied to a x b. With the convolution oracle
/// this equals target_product(a, b, false).first_register; with the
/// correlation oracle, the conjugated variant.
qsim::QuantumState reduce_convolution(const ProductOracle& p,
                                      const qsim::QuantumState& a,
                                      const qsim::QuantumState& b);

qsim::QuantumState reduce_correlation(const ProductOracle& p,
                                      const qsim::QuantumState& a,
                                      const qsim::QuantumState& b);

}  // namespace qconv::nogo
