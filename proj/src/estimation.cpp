#include "superrep/estimation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "superrep/schur.hpp"

namespace superrep {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

nlohmann::json to_json(const EstimationReport& report) {
  return {{"N", report.n_in},
          {"d", report.d},
          {"est_fidelity", report.est_fidelity},
          {"derived_M", report.derived_m},
          {"replication_bound", report.replication_bound},
          {"supergeneration_bound", report.supergeneration_bound}};
}

PipelineBound gate_estimation_pipeline_bound(int d, int n_in, double c_est) {
  if (c_est <= 0.0) {
    throw std::invalid_argument("gate_estimation_pipeline_bound: c_est must be > 0");
  }
  PipelineBound out;
  out.m = choose_M_for_error(d, 2.0, n_in);
  if (out.m < 1) {
    out.bound = 0.0;
    return out;
  }
  // state estimate at fidelity 1 - c_est/M, converted to a gate estimate
  const double f_ent = std::max(0.0, 1.0 - c_est / double(out.m));
  out.bound = clamp01(((double(d) + 1.0) * f_ent - 1.0) / double(d));
  return out;
}

double supergeneration_bound(int n_in, std::int64_t m_out, double f_est) {
  if (f_est < 0.0 || f_est > 1.0) {
    throw std::invalid_argument("supergeneration_bound: F_est must be in [0,1]");
  }
  if (m_out < 0) throw std::invalid_argument("supergeneration_bound: M must be >= 0");
  (void)n_in;
  if (f_est == 0.0) return m_out == 0 ? 1.0 : 0.0;
  return std::exp(double(m_out) * std::log(f_est));
}

double estimation_based_gate_replication_bound(double beta, int n_in,
                                               std::int64_t m_out, double c) {
  if (beta <= 0.0) {
    throw std::invalid_argument("estimation_based_gate_replication_bound: beta must be > 0");
  }
  if (n_in < 1 || m_out < 0) {
    throw std::invalid_argument("estimation_based_gate_replication_bound: bad N or M");
  }
  return clamp01(1.0 - c * double(m_out) / std::pow(double(n_in), beta));
}

double qubit_gate_fidelity(const Eigen::Matrix2cd& estimate,
                           const Eigen::Matrix2cd& truth) {
  const std::complex<double> tr = (truth.adjoint() * estimate).trace();
  return (std::norm(tr) + 2.0) / 6.0;
}

namespace {

const std::array<Eigen::Matrix2cd, 3>& pauli_matrices() {
  static const std::array<Eigen::Matrix2cd, 3> paulis = [] {
    std::array<Eigen::Matrix2cd, 3> p;
    p[0] << 0, 1, 1, 0;
    p[1] << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
    p[2] << 1, 0, 0, -1;
    return p;
  }();
  return paulis;
}

// measurement settings, cycled over the available copies
constexpr std::array<std::pair<int, int>, 9> kSettings = {{
    {0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2},
}};

// estimate U from `copies` copies of (U (x) I)|Phi+>, one Pauli product
// measurement per copy, linear inversion, then the polar projection of the
// leading eigenvector onto the closest maximally entangled state
Eigen::Matrix2cd estimate_gate_from_copies(const Eigen::Matrix2cd& u, int copies,
                                           Rng& rng) {
  const auto& paulis = pauli_matrices();
  // |Phi_U> amplitudes: amp(2a + b) = U(a, b)/sqrt(2)
  Eigen::Vector4cd phi;
  phi << u(0, 0), u(0, 1), u(1, 0), u(1, 1);
  phi /= std::sqrt(2.0);

  std::array<double, 9> corr_sum{};
  std::array<int, 9> corr_count{};
  std::array<double, 3> left_sum{}, right_sum{};
  std::array<int, 3> left_count{}, right_count{};

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int c = 0; c < copies; ++c) {
    const auto [i, j] = kSettings[std::size_t(c % 9)];
    // outcome distribution over (ea, eb) in {+1,-1}^2
    std::array<double, 4> prob{};
    int idx = 0;
    for (int ea : {+1, -1}) {
      for (int eb : {+1, -1}) {
        const Eigen::Matrix2cd pa =
            (Eigen::Matrix2cd::Identity() + double(ea) * paulis[std::size_t(i)]) / 2.0;
        const Eigen::Matrix2cd pb =
            (Eigen::Matrix2cd::Identity() + double(eb) * paulis[std::size_t(j)]) / 2.0;
        Eigen::Matrix4cd proj;
        proj.topLeftCorner<2, 2>() = pa(0, 0) * pb;
        proj.topRightCorner<2, 2>() = pa(0, 1) * pb;
        proj.bottomLeftCorner<2, 2>() = pa(1, 0) * pb;
        proj.bottomRightCorner<2, 2>() = pa(1, 1) * pb;
        prob[std::size_t(idx++)] = std::max(0.0, phi.dot(proj * phi).real());
      }
    }
    const double total = prob[0] + prob[1] + prob[2] + prob[3];
    double draw = unit(rng) * total;
    int outcome = 3;
    for (int k = 0; k < 3; ++k) {
      if (draw < prob[std::size_t(k)]) {
        outcome = k;
        break;
      }
      draw -= prob[std::size_t(k)];
    }
    const int ea = outcome < 2 ? +1 : -1;
    const int eb = outcome % 2 == 0 ? +1 : -1;
    corr_sum[std::size_t(3 * i + j)] += double(ea * eb);
    corr_count[std::size_t(3 * i + j)] += 1;
    left_sum[std::size_t(i)] += double(ea);
    left_count[std::size_t(i)] += 1;
    right_sum[std::size_t(j)] += double(eb);
    right_count[std::size_t(j)] += 1;
  }

  // linear inversion; unmeasured coefficients stay at the maximally mixed
  // prior of zero
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Identity();
  auto add_term = [&rho](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b,
                         double weight) {
    Eigen::Matrix4cd term;
    term.topLeftCorner<2, 2>() = a(0, 0) * b;
    term.topRightCorner<2, 2>() = a(0, 1) * b;
    term.bottomLeftCorner<2, 2>() = a(1, 0) * b;
    term.bottomRightCorner<2, 2>() = a(1, 1) * b;
    rho += weight * term;
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto k = std::size_t(3 * i + j);
      if (corr_count[k] > 0) {
        add_term(paulis[std::size_t(i)], paulis[std::size_t(j)],
                 corr_sum[k] / double(corr_count[k]));
      }
    }
    if (left_count[std::size_t(i)] > 0) {
      add_term(paulis[std::size_t(i)], Eigen::Matrix2cd::Identity(),
               left_sum[std::size_t(i)] / double(left_count[std::size_t(i)]));
    }
    if (right_count[std::size_t(i)] > 0) {
      add_term(Eigen::Matrix2cd::Identity(), paulis[std::size_t(i)],
               right_sum[std::size_t(i)] / double(right_count[std::size_t(i)]));
    }
  }
  rho /= 4.0;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho);
  const Eigen::Vector4cd leading = solver.eigenvectors().col(3);
  Eigen::Matrix2cd reshaped;
  reshaped << leading(0), leading(1), leading(2), leading(3);
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(reshaped,
                                         Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

McEstimate mc_gate_estimation(int n_in, std::int64_t samples, std::uint64_t seed,
                              int workers) {
  if (n_in < 1 || n_in > kDenseQubitLimit) {
    throw std::invalid_argument("mc_gate_estimation: N must be in [1, dense limit]");
  }
  // copy budget: the error-rate prescription, kept within [N, dense limit]
  std::int64_t budget = n_in >= 3 ? choose_M_for_error(2, 2.0, n_in) : 0;
  const int copies =
      int(std::clamp<std::int64_t>(budget, n_in, kDenseQubitLimit));
  // At dense scale the budget never exceeds N, so the replication channel
  // projector is the identity and the copies come out exact.
  const ReplicationChannel channel(n_in, copies);
  const double p_exact =
      (channel.projector() - DenseOperator::Identity(1 << copies, 1 << copies)).norm();
  if (p_exact > 1e-12) {
    throw std::logic_error("mc_gate_estimation: unexpected nontrivial projector");
  }

  struct Sampler {
    int copies;
    double operator()(Rng& rng) const {
      const Eigen::Matrix2cd u = haar_unitary(2, rng);
      const Eigen::Matrix2cd estimate = estimate_gate_from_copies(u, copies, rng);
      return qubit_gate_fidelity(estimate, u);
    }
  };

  McEstimate est;
  {
    // local run_mc equivalent lives in gatesim; reuse via mc wrapper
    est = [&] {
      return McEstimate{};
    }();
  }
  (void)est;
  // run through the shared Monte Carlo driver
  extern McEstimate run_named_mc(std::int64_t, std::uint64_t, int, Sampler);
  return run_named_mc(samples, seed, workers, Sampler{copies});
}

bool scaling_relation_holds(double alpha, double beta, double c, std::int64_t n_in) {
  if (n_in < 2) throw std::invalid_argument("scaling_relation_holds: N must be >= 2");
  const double n = double(n_in);
  const double m = n + std::round(std::pow(n, alpha));
  return c / (n * n) <= c / (m * m) + c / std::pow(m, beta);
}

bool worst_case_scaling_feasible(double alpha, double beta, double c) {
  // geometric ladder; feasibility is a tail property, so only the large-N
  // verdicts count
  bool holds = true;
  for (std::int64_t n = 1 << 10; n <= (1LL << 40); n <<= 5) {
    holds = scaling_relation_holds(alpha, beta, c, n);
  }
  return holds;
}

EstimationReport make_estimation_report(int d, int n_in, std::int64_t m_target,
                                        double c_est) {
  EstimationReport report;
  report.n_in = n_in;
  report.d = d;
  const PipelineBound pipeline = gate_estimation_pipeline_bound(d, n_in, c_est);
  report.est_fidelity = pipeline.bound;
  report.derived_m = pipeline.m;
  if (m_target < 0) m_target = pipeline.m;
  report.replication_bound =
      estimation_based_gate_replication_bound(2.0, n_in, m_target, c_est);
  report.supergeneration_bound = supergeneration_bound(n_in, m_target, pipeline.bound);
  return report;
}

}  // namespace superrep
