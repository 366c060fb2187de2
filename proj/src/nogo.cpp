#include "qconv/nogo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "qconv/spectral.hpp"

namespace qconv::nogo {

namespace {

constexpr double kHuge = 1e100;

std::string format_value(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

CandidateProcess::CandidateProcess(int reg_dim, LinearMap map, Sequence ancilla)
    : reg_dim_(reg_dim), map_(std::move(map)), ancilla_(std::move(ancilla)) {
  if (reg_dim_ < 2 || !is_power_of_two(static_cast<std::size_t>(reg_dim_))) {
    throw InvalidInput("CandidateProcess: register dim must be a power of two");
  }
  if (ancilla_.empty()) {
    throw InvalidInput("CandidateProcess: ancilla must be nonempty");
  }
  const long long dim = static_cast<long long>(reg_dim_) * reg_dim_ *
                        static_cast<long long>(ancilla_.size());
  if (map_.rows() != map_.cols() || map_.rows() != dim) {
    throw InvalidInput("CandidateProcess: map must be square of dim N*N*M");
  }
  if (!all_finite(map_) || !qconv::all_finite(ancilla_)) {
    throw InvalidInput("CandidateProcess: entries must be finite");
  }
  if (std::abs(qconv::norm(ancilla_) - 1.0) > kStateNormTol) {
    throw InvalidInput("CandidateProcess: ancilla must have unit norm");
  }
}

std::pair<qsim::QuantumState, qsim::QuantumState> epsilon_states(double eps,
                                                                 int n) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw InvalidInput("epsilon_states: eps must lie strictly in (0, 1)");
  }
  if (n < 1) {
    throw InvalidInput("epsilon_states: need at least one qubit");
  }
  Sequence a(std::size_t{1} << n);
  a[0] = eps;
  a[1] = std::sqrt(1.0 - eps * eps);
  return {qsim::QuantumState(n, std::move(a)), qsim::QuantumState::basis(n, 0)};
}

TargetSpec target_product(const qsim::QuantumState& a,
                          const qsim::QuantumState& b, bool conjugate_first) {
  if (a.num_qubits() != b.num_qubits()) {
    throw InvalidInput("target_product: register sizes differ");
  }
  Sequence prod(a.dim());
  double overlap = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Complex ai =
        conjugate_first ? std::conj(a.amplitude(i)) : a.amplitude(i);
    prod[i] = ai * b.amplitude(i);
    overlap += std::norm(prod[i]);
  }
  if (overlap <= 0.0) {
    throw ZeroOverlapError("target_product: every componentwise product is 0");
  }
  const double lambda = 1.0 / std::sqrt(overlap);
  for (Complex& z : prod) z *= lambda;
  return TargetSpec{qsim::QuantumState(a.num_qubits(), std::move(prod)),
                    lambda};
}

ResidualReport output_residual(const Sequence& phi, const Sequence& target,
                               int rest_dim) {
  if (rest_dim < 1 ||
      phi.size() != target.size() * static_cast<std::size_t>(rest_dim)) {
    throw InvalidInput("output_residual: dimension mismatch");
  }
  const double nrm2 = norm_squared(phi);
  const double norm_deviation = std::abs(std::sqrt(nrm2) - 1.0);

  // <t|rho1|t> = sum_w |<t|phi(., w)>|^2 where rho1 is the partial trace
  // of |phi><phi| over everything but the first register.
  double overlap = 0.0;
  for (int w = 0; w < rest_dim; ++w) {
    Complex z{};
    for (std::size_t r = 0; r < target.size(); ++r) {
      z += std::conj(target[r]) * phi[r * rest_dim + w];
    }
    overlap += std::norm(z);
  }
  double infidelity = 1.0;
  if (nrm2 > 1e-30) {
    infidelity = 1.0 - overlap / nrm2;
    infidelity = std::min(std::max(infidelity, 0.0), 1.0);
  }
  return ResidualReport{norm_deviation, infidelity,
                        norm_deviation + infidelity};
}

ResidualReport residual(const CandidateProcess& c, const qsim::QuantumState& a,
                        const qsim::QuantumState& b, bool conjugate_first) {
  if (static_cast<std::size_t>(c.reg_dim()) != a.dim() || a.dim() != b.dim()) {
    throw InvalidInput("residual: register dimensions do not match candidate");
  }
  const TargetSpec target = target_product(a, b, conjugate_first);
  const Sequence joint =
      qconv::kron(qconv::kron(a.amplitudes(), b.amplitudes()), c.ancilla());
  const Sequence phi = serial::apply(c.map(), joint);
  return output_residual(phi, target.first_register.amplitudes(),
                         c.reg_dim() * c.ancilla_dim());
}

AnalyticReport contradiction_check(double c1, double c2, int ancilla_dim,
                                   int reg_dim, double tol) {
  if (ancilla_dim < 1 || reg_dim < 1) {
    throw InvalidInput("contradiction_check: dimensions must be >= 1");
  }
  if (!(tol > 0.0)) {
    throw InvalidInput("contradiction_check: tolerance must be positive");
  }
  const double mn =
      static_cast<double>(ancilla_dim) * static_cast<double>(reg_dim);
  const auto f = [&](double eps) {
    return mn * c2 * c2 + eps * eps * mn * (c1 * c1 - c2 * c2) +
           2.0 * eps * std::sqrt(1.0 - eps * eps) * mn * c1 * c2;
  };
  AnalyticReport report{c1, c2, {}, false};
  bool all_one = true;
  for (const double eps : {0.0, 0.5, 1.0}) {
    const double value = f(eps);
    report.lhs_values[eps] = value;
    if (std::abs(value - 1.0) > tol) all_one = false;
  }
  report.contradiction = !all_one;
  return report;
}

ProbeSet make_probe_set(const std::string& id,
                        const std::vector<double>& epsilons, int theta_count,
                        int phi_count) {
  if (epsilons.empty() && (theta_count <= 0 || phi_count <= 0)) {
    throw InvalidInput("make_probe_set: empty probe family");
  }
  ProbeSet set{id, {}};
  for (const double eps : epsilons) {
    auto [a, b] = epsilon_states(eps, 1);
    set.probes.push_back(
        Probe{std::move(a), std::move(b), "eps=" + format_value(eps)});
  }
  const auto angle = [](int i, int count) {
    return (2.0 * i + 1.0) * std::numbers::pi / (2.0 * count);
  };
  for (int i = 0; i < theta_count; ++i) {
    const double theta = angle(i, theta_count);
    const qsim::QuantumState a(1, {std::cos(theta), std::sin(theta)});
    for (int j = 0; j < phi_count; ++j) {
      const double phi = angle(j, phi_count);
      const qsim::QuantumState b(1, {std::cos(phi), std::sin(phi)});
      set.probes.push_back(Probe{a, b,
                                 "theta=" + format_value(theta) +
                                     ",phi=" + format_value(phi)});
    }
  }
  return set;
}

ProbeSet standard_probe_set() {
  std::vector<double> epsilons;
  for (int i = 1; i <= 9; ++i) epsilons.push_back(i / 10.0);
  return make_probe_set("standard-v1", epsilons, 5, 5);
}

namespace {

// ---- residual search internals ---------------------------------------

struct PreparedProbe {
  Sequence joint_base;  // a (x) b, dim N^2
  Sequence target;      // target first register, dim N
};

// Parameter vector layout: 2*d*d doubles for the map (re/im interleaved,
// row-major), then 2*M doubles for the ancilla. std::complex<double> is
// layout-compatible with double[2], so the views below are well-defined.
struct Objective {
  const std::vector<PreparedProbe>* probes;
  int reg_dim;      // N
  int ancilla_dim;  // M
  int dim;          // N*N*M

  mutable Sequence anc;    // normalized ancilla scratch
  mutable Sequence joint;  // dim
  mutable Sequence phi;    // dim

  std::size_t param_count() const {
    return 2 * static_cast<std::size_t>(dim) * dim + 2 * ancilla_dim;
  }

  double operator()(const std::vector<double>& params,
                    std::vector<double>* per_probe = nullptr) const {
    const Complex* map = reinterpret_cast<const Complex*>(params.data());
    const Complex* anc_raw = reinterpret_cast<const Complex*>(
        params.data() + 2 * static_cast<std::size_t>(dim) * dim);

    double anc_n2 = 0.0;
    for (int k = 0; k < ancilla_dim; ++k) anc_n2 += std::norm(anc_raw[k]);
    if (!(anc_n2 > 1e-12)) return kHuge;
    const double anc_inv = 1.0 / std::sqrt(anc_n2);
    anc.resize(ancilla_dim);
    for (int k = 0; k < ancilla_dim; ++k) anc[k] = anc_raw[k] * anc_inv;

    const int rest = reg_dim * ancilla_dim;
    double worst = 0.0;
    if (per_probe) per_probe->clear();
    for (const PreparedProbe& p : *probes) {
      joint.resize(dim);
      std::size_t idx = 0;
      for (const Complex& base : p.joint_base) {
        for (int k = 0; k < ancilla_dim; ++k) joint[idx++] = base * anc[k];
      }
      phi.resize(dim);
      for (int r = 0; r < dim; ++r) {
        const Complex* row = map + static_cast<std::size_t>(r) * dim;
        Complex acc{};
        for (int c = 0; c < dim; ++c) acc += row[c] * joint[c];
        phi[r] = acc;
      }
      double nrm2 = 0.0;
      for (const Complex& z : phi) nrm2 += std::norm(z);
      double overlap = 0.0;
      for (int w = 0; w < rest; ++w) {
        Complex z{};
        for (int r = 0; r < reg_dim; ++r) {
          z += std::conj(p.target[r]) * phi[static_cast<std::size_t>(r) * rest + w];
        }
        overlap += std::norm(z);
      }
      double infid = 1.0;
      if (nrm2 > 1e-30) {
        infid = std::min(std::max(1.0 - overlap / nrm2, 0.0), 1.0);
      }
      const double total = std::abs(std::sqrt(nrm2) - 1.0) + infid;
      if (!std::isfinite(total)) return kHuge;
      if (per_probe) per_probe->push_back(total);
      worst = std::max(worst, total);
    }
    return worst;
  }
};

struct RestartOutcome {
  double value = std::numeric_limits<double>::infinity();
  std::vector<double> params;
};

RestartOutcome run_restart(const Objective& obj, std::uint64_t restart_seed,
                           int budget) {
  Rng rng(restart_seed);
  const int d = obj.dim;
  std::vector<double> theta(obj.param_count());

  // unitary start: zero norm deviation on every probe
  {
    const LinearMap u = random_unitary_matrix(d, rng);
    Complex* map = reinterpret_cast<Complex*>(theta.data());
    std::copy(u.entries().begin(), u.entries().end(), map);
    Complex* anc = reinterpret_cast<Complex*>(
        theta.data() + 2 * static_cast<std::size_t>(d) * d);
    const Sequence a = random_unit_vector(obj.ancilla_dim, rng);
    std::copy(a.begin(), a.end(), anc);
  }

  RestartOutcome best;
  best.value = obj(theta);
  best.params = theta;

  const std::size_t np = theta.size();
  std::vector<double> grad(np), m1(np, 0.0), m2(np, 0.0);
  const double fd_h = 1e-5;
  const double lr0 = 0.05;
  const double lr_decay = 0.98;
  const double lr_min = 1e-5;
  const double beta1 = 0.9;
  const double beta2 = 0.999;
  const int adam_iters = (2 * budget) / 3;
  double f_cur = best.value;
  double alpha = 0.05;  // polish step

  for (int it = 0; it < budget; ++it) {
    for (std::size_t p = 0; p < np; ++p) {
      const double saved = theta[p];
      theta[p] = saved + fd_h;
      const double fp = obj(theta);
      theta[p] = saved - fd_h;
      const double fm = obj(theta);
      theta[p] = saved;
      grad[p] = (fp - fm) / (2.0 * fd_h);
    }
    if (it < adam_iters) {
      const double lr = std::max(lr0 * std::pow(lr_decay, it), lr_min);
      const double c1 = 1.0 - std::pow(beta1, it + 1);
      const double c2 = 1.0 - std::pow(beta2, it + 1);
      for (std::size_t p = 0; p < np; ++p) {
        m1[p] = beta1 * m1[p] + (1.0 - beta1) * grad[p];
        m2[p] = beta2 * m2[p] + (1.0 - beta2) * grad[p] * grad[p];
        theta[p] -= lr * (m1[p] / c1) / (std::sqrt(m2[p] / c2) + 1e-8);
      }
      f_cur = obj(theta);
    } else {
      // backtracking descent along -grad for the final polish
      double g2 = 0.0;
      for (const double g : grad) g2 += g * g;
      if (g2 < 1e-24) break;
      bool accepted = false;
      std::vector<double> cand(np);
      for (int tries = 0; tries < 30; ++tries) {
        for (std::size_t p = 0; p < np; ++p) {
          cand[p] = theta[p] - alpha * grad[p];
        }
        const double fc = obj(cand);
        if (fc < f_cur) {
          theta.swap(cand);
          f_cur = fc;
          alpha *= 1.5;
          accepted = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!accepted && alpha < 1e-15) break;
    }
    if (f_cur < best.value) {
      best.value = f_cur;
      best.params = theta;
    }
    if (best.value < 1e-12) break;
  }
  return best;
}

}  // namespace

SearchResult search_best_candidate(const SearchConfig& cfg,
                                   const ProbeSet& probes) {
  if (probes.probes.empty()) {
    throw InvalidInput("search: probe set is empty");
  }
  if (cfg.reg_dim < 2 ||
      !is_power_of_two(static_cast<std::size_t>(cfg.reg_dim))) {
    throw InvalidInput("search: register dim must be a power of two >= 2");
  }
  if (cfg.ancilla_dim < 1 ||
      !is_power_of_two(static_cast<std::size_t>(cfg.ancilla_dim))) {
    throw InvalidInput("search: ancilla dim must be a power of two >= 1");
  }
  if (cfg.restarts < 1 || cfg.budget < 1) {
    throw InvalidInput("search: restarts and budget must be positive");
  }

  std::vector<PreparedProbe> prepared;
  prepared.reserve(probes.probes.size());
  for (const Probe& p : probes.probes) {
    if (p.a.dim() != static_cast<std::size_t>(cfg.reg_dim) ||
        p.b.dim() != static_cast<std::size_t>(cfg.reg_dim)) {
      throw InvalidInput("search: probe dimension does not match reg_dim");
    }
    // throws ZeroOverlapError when a probe has no target
    TargetSpec t = target_product(p.a, p.b, cfg.conjugate_first);
    prepared.push_back(
        PreparedProbe{qconv::kron(p.a.amplitudes(), p.b.amplitudes()),
                      t.first_register.amplitudes()});
  }

  const int dim = cfg.reg_dim * cfg.reg_dim * cfg.ancilla_dim;
  std::vector<RestartOutcome> outcomes(cfg.restarts);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < cfg.restarts; ++r) {
    Objective obj{&prepared, cfg.reg_dim, cfg.ancilla_dim, dim, {}, {}, {}};
    outcomes[r] = run_restart(obj, mix_seed(cfg.seed, r), cfg.budget);
  }

  int best_restart = 0;
  for (int r = 1; r < cfg.restarts; ++r) {
    if (outcomes[r].value < outcomes[best_restart].value) best_restart = r;
  }

  Objective obj{&prepared, cfg.reg_dim, cfg.ancilla_dim, dim, {}, {}, {}};
  std::vector<double> per_probe;
  const double worst = obj(outcomes[best_restart].params, &per_probe);

  const std::vector<double>& params = outcomes[best_restart].params;
  const Complex* map_view = reinterpret_cast<const Complex*>(params.data());
  Sequence map_entries(map_view, map_view + static_cast<std::size_t>(dim) * dim);
  const Complex* anc_view = reinterpret_cast<const Complex*>(
      params.data() + 2 * static_cast<std::size_t>(dim) * dim);
  Sequence ancilla(anc_view, anc_view + cfg.ancilla_dim);
  const double anc_inv = 1.0 / qconv::norm(ancilla);
  for (Complex& z : ancilla) z *= anc_inv;

  return SearchResult{
      CandidateProcess(cfg.reg_dim, LinearMap(dim, dim, std::move(map_entries)),
                       std::move(ancilla)),
      worst, std::move(per_probe), best_restart};
}

namespace {

void check_joint_encodes(const qsim::QuantumState& joint,
                         const Sequence& alpha, const Sequence& beta) {
  if (alpha.size() != beta.size() ||
      joint.dim() != alpha.size() * beta.size()) {
    throw InvalidInput("oracle: joint state does not match sequences");
  }
  const std::size_t n = alpha.size();
  double dev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dev = std::max(dev, std::abs(joint.amplitude(i * n + j) -
                                   alpha[i] * beta[j]));
    }
  }
  if (dev > 1e-9) {
    throw InvalidInput("oracle: joint state disagrees with the sequences");
  }
}

}  // namespace

ProductOracle classical_convolution_oracle() {
  return [](const qsim::QuantumState& joint, const Sequence& alpha,
            const Sequence& beta) {
    check_joint_encodes(joint, alpha, beta);
    return qsim::from_sequence(spectral::convolve_direct(alpha, beta));
  };
}

ProductOracle classical_correlation_oracle() {
  return [](const qsim::QuantumState& joint, const Sequence& alpha,
            const Sequence& beta) {
    check_joint_encodes(joint, alpha, beta);
    return qsim::from_sequence(spectral::correlate_direct(alpha, beta));
  };
}

namespace {

qsim::QuantumState reduce_impl(const ProductOracle& p,
                               const qsim::QuantumState& a,
                               const qsim::QuantumState& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw InvalidInput("reduce: register sizes differ");
  }
  const int n = a.num_qubits();
  // IQFT per register, acting on the coefficients
  Sequence alpha = spectral::idft(a.amplitudes());
  Sequence beta = spectral::idft(b.amplitudes());
  const qsim::QuantumState joint =
      qsim::tensor(qsim::QuantumState(n, alpha), qsim::QuantumState(n, beta));
  const qsim::QuantumState mid = p(joint, alpha, beta);
  if (mid.num_qubits() != n) {
    throw InvalidInput("reduce: oracle returned wrong register size");
  }
  return qsim::apply(qsim::qft_dense(n), mid);
}

}  // namespace

qsim::QuantumState reduce_convolution(const ProductOracle& p,
                                      const qsim::QuantumState& a,
                                      const qsim::QuantumState& b) {
  return reduce_impl(p, a, b);
}

qsim::QuantumState reduce_correlation(const ProductOracle& p,
                                      const qsim::QuantumState& a,
                                      const qsim::QuantumState& b) {
  return reduce_impl(p, a, b);
}

}  // namespace qconv::nogo
