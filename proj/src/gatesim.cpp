#include "superrep/gatesim.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "superrep/schur.hpp"

namespace superrep {

namespace {

void require_dense_pair(int n_gates, int qubit_count) {
  if (n_gates < 1 || qubit_count < n_gates) {
    throw std::invalid_argument("dense oracle: require M >= N >= 1");
  }
  if (qubit_count > kDenseQubitLimit) {
    throw std::invalid_argument("dense oracle: M exceeds the dense qubit limit");
  }
}

void require_unitary(const Eigen::Matrix2cd& u) {
  if ((u.adjoint() * u - Eigen::Matrix2cd::Identity()).norm() > 1e-9) {
    throw std::invalid_argument("gate must be unitary");
  }
}

// Welford accumulator; workers combine pairwise in index order so the
// result is deterministic for a fixed worker count.
struct Accumulator {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double d1 = x - mean;
    mean += d1 / double(count);
    m2 += d1 * (x - mean);
  }

  void merge(const Accumulator& other) {
    if (other.count == 0) return;
    const double d = other.mean - mean;
    const std::int64_t total = count + other.count;
    mean += d * double(other.count) / double(total);
    m2 += other.m2 + d * d * double(count) * double(other.count) / double(total);
    count = total;
  }
};

template <typename SampleFn>
McEstimate run_mc(std::int64_t samples, std::uint64_t seed, int workers,
                  SampleFn&& sample_fn) {
  if (samples < 1) throw std::invalid_argument("monte carlo: samples must be >= 1");
  if (workers < 1) throw std::invalid_argument("monte carlo: workers must be >= 1");
  workers = int(std::min<std::int64_t>(workers, samples));

  std::vector<Accumulator> acc(std::size_t(workers));
  auto run_worker = [&](int w) {
    const std::int64_t base = samples / workers;
    const std::int64_t n = base + (w < samples % workers ? 1 : 0);
    Rng rng(substream_seed(seed, std::uint64_t(w)));
    for (std::int64_t i = 0; i < n; ++i) acc[std::size_t(w)].add(sample_fn(rng));
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    for (std::thread& t : pool) t.join();
  }

  Accumulator total;
  for (const Accumulator& a : acc) total.merge(a);

  McEstimate est;
  est.mean = total.mean;
  est.std_error = total.count > 1
                      ? std::sqrt(total.m2 / double(total.count - 1) / double(total.count))
                      : 0.0;
  est.samples = total.count;
  est.seed = seed;
  return est;
}

}  // namespace

Eigen::MatrixXd total_spin_casimir(int qubit_count) {
  if (qubit_count < 1 || qubit_count > kDenseQubitLimit) {
    throw std::invalid_argument("total_spin_casimir: qubit count out of range");
  }
  const int dim = 1 << qubit_count;
  Eigen::MatrixXd casimir = Eigen::MatrixXd::Zero(dim, dim);
  // J^2 = sum_{i<j} SWAP_ij + M(4-M)/4 * I
  const double diag = qubit_count * (4.0 - qubit_count) / 4.0;
  for (int b = 0; b < dim; ++b) {
    casimir(b, b) += diag;
    for (int i = 0; i < qubit_count; ++i) {
      for (int j = i + 1; j < qubit_count; ++j) {
        const int bi = (b >> i) & 1;
        const int bj = (b >> j) & 1;
        int swapped = b;
        if (bi != bj) swapped = b ^ (1 << i) ^ (1 << j);
        casimir(swapped, b) += 1.0;
      }
    }
  }
  return casimir;
}

DenseOperator build_projector(int n_gates, int qubit_count) {
  require_dense_pair(n_gates, qubit_count);
  const int dim = 1 << qubit_count;
  if (n_gates == qubit_count) {
    return DenseOperator::Identity(dim, dim);
  }
  const Eigen::MatrixXd casimir = total_spin_casimir(qubit_count);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(casimir);
  Eigen::MatrixXd projector = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const double lambda = solver.eigenvalues()(i);
    const int two_j = int(std::lround(std::sqrt(4.0 * lambda + 1.0) - 1.0));
    if (two_j <= n_gates) {
      projector.noalias() +=
          solver.eigenvectors().col(i) * solver.eigenvectors().col(i).transpose();
    }
  }
  return projector.cast<std::complex<double>>();
}

DenseState dense_dicke_state(int qubit_count, int excitations) {
  if (qubit_count < 1 || qubit_count > kDenseQubitLimit || excitations < 0 ||
      excitations > qubit_count) {
    throw std::invalid_argument("dense_dicke_state: bad arguments");
  }
  const int dim = 1 << qubit_count;
  DenseState state = DenseState::Zero(dim);
  int hits = 0;
  for (int b = 0; b < dim; ++b) {
    if (std::popcount(unsigned(b)) == excitations) {
      state(b) = 1.0;
      ++hits;
    }
  }
  state /= std::sqrt(double(hits));
  return state;
}

void apply_to_every_qubit(const Eigen::Matrix2cd& u, DenseState& state) {
  const auto dim = state.size();
  for (int q = 0; (1LL << q) < dim; ++q) {
    const long long mask = 1LL << q;
    for (long long b = 0; b < dim; ++b) {
      if (b & mask) continue;
      const std::complex<double> lo = state(b);
      const std::complex<double> hi = state(b | mask);
      state(b) = u(0, 0) * lo + u(0, 1) * hi;
      state(b | mask) = u(1, 0) * lo + u(1, 1) * hi;
    }
  }
}

DenseOperator tensor_power(const Eigen::Matrix2cd& u, int count) {
  DenseOperator out = DenseOperator::Identity(1, 1);
  for (int i = 0; i < count; ++i) {
    DenseOperator next(out.rows() * 2, out.cols() * 2);
    next.topLeftCorner(out.rows(), out.cols()) = u(0, 0) * out;
    next.topRightCorner(out.rows(), out.cols()) = u(0, 1) * out;
    next.bottomLeftCorner(out.rows(), out.cols()) = u(1, 0) * out;
    next.bottomRightCorner(out.rows(), out.cols()) = u(1, 1) * out;
    out.swap(next);
  }
  return out;
}

ReplicationChannel::ReplicationChannel(int n_gates, int qubit_count)
    : n_gates_(n_gates),
      qubit_count_(qubit_count),
      projector_(build_projector(n_gates, qubit_count)) {}

ChannelOutput ReplicationChannel::apply(const Eigen::Matrix2cd& u,
                                        const DenseState& input) const {
  require_unitary(u);
  const int dim = 1 << qubit_count_;
  if (input.size() != dim) {
    throw std::invalid_argument("ReplicationChannel::apply: wrong input dimension");
  }
  ChannelOutput out;
  DenseState projected = projector_ * input;
  DenseState rest = input - projected;
  out.success.probability = projected.squaredNorm();
  out.failure.probability = rest.squaredNorm();
  if (out.success.probability > 0.0) {
    projected /= std::sqrt(out.success.probability);
    apply_to_every_qubit(u, projected);
    out.success.state = std::move(projected);
  } else {
    out.success.state = DenseState::Zero(dim);
  }
  if (out.failure.probability > 0.0) {
    rest /= std::sqrt(out.failure.probability);
    out.failure.state = std::move(rest);
  } else {
    out.failure.state = DenseState::Zero(dim);
  }
  return out;
}

ChannelOutput replication_channel(const Eigen::Matrix2cd& u, int n_gates,
                                  int qubit_count, const DenseState& input) {
  return ReplicationChannel(n_gates, qubit_count).apply(u, input);
}

namespace {

// <Psi| (U^dag)^{otimes M} branch contributions for a fixed input
double channel_gate_fidelity_sample(const ReplicationChannel& channel,
                                    const Eigen::Matrix2cd& u, const DenseState& input) {
  const ChannelOutput out = channel.apply(u, input);
  const Eigen::Matrix2cd u_dag = u.adjoint();
  double fidelity = 0.0;
  if (out.success.probability > 0.0) {
    DenseState back = out.success.state;
    apply_to_every_qubit(u_dag, back);
    fidelity += out.success.probability * std::norm(input.dot(back));
  }
  if (out.failure.probability > 0.0) {
    DenseState back = out.failure.state;
    apply_to_every_qubit(u_dag, back);
    fidelity += out.failure.probability * std::norm(input.dot(back));
  }
  return fidelity;
}

}  // namespace

McEstimate mc_gate_fidelity(int n_gates, int qubit_count, std::int64_t samples,
                            std::uint64_t seed, int workers) {
  require_dense_pair(n_gates, qubit_count);
  const ReplicationChannel channel(n_gates, qubit_count);
  const int dim = 1 << qubit_count;
  return run_mc(samples, seed, workers, [&](Rng& rng) {
    const DenseState psi = haar_state(dim, rng);
    const Eigen::Matrix2cd u = haar_unitary(2, rng);
    return channel_gate_fidelity_sample(channel, u, psi);
  });
}

McEstimate mc_projector_overlap(int n_gates, int qubit_count, std::int64_t samples,
                                std::uint64_t seed, int workers) {
  require_dense_pair(n_gates, qubit_count);
  const DenseOperator projector = build_projector(n_gates, qubit_count);
  const int dim = 1 << qubit_count;
  return run_mc(samples, seed, workers, [&](Rng& rng) {
    const DenseState psi = haar_state(dim, rng);
    return psi.dot(projector * psi).real();
  });
}

HaarMoments exact_moments(int n_gates, int qubit_count) {
  require_dense_pair(n_gates, qubit_count);
  double trace = 0.0;
  for (const SchurSector& s : qubit_sectors(qubit_count)) {
    if (s.two_j <= n_gates) trace += double(s.rep_dim) * double(s.mult_dim);
  }
  const double dim = double(1LL << qubit_count);
  HaarMoments m;
  m.mean_overlap = trace / dim;
  m.second_moment = trace * (trace + 1.0) / (dim * (dim + 1.0));
  return m;
}

double entanglement_fidelity(int d, int m_out, double f_gate) {
  if (d < 2 || m_out < 1) {
    throw std::invalid_argument("entanglement_fidelity: require d >= 2, M >= 1");
  }
  if (f_gate < 0.0 || f_gate > 1.0) {
    throw std::invalid_argument("entanglement_fidelity: F_gate must be in [0,1]");
  }
  const double dim = std::pow(double(d), double(m_out));
  return f_gate - (1.0 - f_gate) / dim;
}

EntSuperreplicationResult mc_ent_superreplication(int n_gates, int qubit_count,
                                                  std::int64_t samples,
                                                  std::uint64_t seed, int workers) {
  require_dense_pair(n_gates, qubit_count);
  // States of M Bell pairs with the channel on the left halves are D x D
  // matrices X under vec: |Phi+>^{otimes M} = vec(I)/sqrt(D) and
  // (A (x) I) vec(X) = vec(A X). The target (U (x) I)^{otimes M} |Phi+>^{otimes M}
  // is vec(U^{otimes M})/sqrt(D), so the branch overlaps reduce to Frobenius
  // inner products: <target|success> = Tr(P)/ (sqrt(D) sqrt(Tr P)) and
  // <target|failure> = Tr((U^dag)^{otimes M} (I-P)) / (sqrt(D) sqrt(D - Tr P)).
  const DenseOperator projector = build_projector(n_gates, qubit_count);
  const double dim = double(1LL << qubit_count);
  const double trace_p = projector.trace().real();
  const double p_success = trace_p / dim;
  const double p_failure = 1.0 - p_success;
  const DenseOperator complement =
      DenseOperator::Identity(projector.rows(), projector.cols()) - projector;

  EntSuperreplicationResult result;
  result.extraction_probability = std::pow(0.25, double(n_gates));
  result.fidelity = run_mc(samples, seed, workers, [&](Rng& rng) {
    const Eigen::Matrix2cd u = haar_unitary(2, rng);
    double f = p_success * p_success;
    if (p_failure > 1e-15) {
      const DenseOperator u_dag_power = tensor_power(u.adjoint(), qubit_count);
      const std::complex<double> cross = (u_dag_power * complement).trace();
      f += std::norm(cross / dim);
    }
    return f;
  });
  return result;
}

WorstCaseResult worst_case_probe(int n_gates, int qubit_count,
                                 const std::vector<DenseState>& probes,
                                 std::int64_t samples, std::uint64_t seed,
                                 int workers) {
  require_dense_pair(n_gates, qubit_count);
  if (probes.empty()) throw std::invalid_argument("worst_case_probe: no probes");
  const ReplicationChannel channel(n_gates, qubit_count);
  WorstCaseResult result;
  result.min_fidelity = 2.0;
  for (std::size_t p = 0; p < probes.size(); ++p) {
    if (std::abs(probes[p].squaredNorm() - 1.0) > 1e-10) {
      throw std::invalid_argument("worst_case_probe: probes must be unit norm");
    }
    const McEstimate est =
        run_mc(samples, substream_seed(seed, 0xABCD0000ULL + p), workers,
               [&](Rng& rng) {
                 const Eigen::Matrix2cd u = haar_unitary(2, rng);
                 return channel_gate_fidelity_sample(channel, u, probes[p]);
               });
    result.per_probe.push_back(est);
    if (est.mean < result.min_fidelity) {
      result.min_fidelity = est.mean;
      result.argmin_index = int(p);
    }
  }
  return result;
}

}  // namespace superrep
