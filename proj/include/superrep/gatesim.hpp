#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "superrep/random.hpp"

namespace superrep {

/// Hard cap for the dense oracle; beyond this the closed-form sector bounds
/// are the authority.
inline constexpr int kDenseQubitLimit = 12;

using DenseState = Eigen::VectorXcd;
using DenseOperator = Eigen::MatrixXcd;

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Total-spin Casimir J^2 of `qubit_count` qubits as a real symmetric matrix
/// (built from pair swaps: J^2 = sum_{i<j} SWAP_ij + M(3-M)/4 * I).
Eigen::MatrixXd total_spin_casimir(int qubit_count);

/// Orthogonal projector onto the total-spin sectors j <= N/2 of M qubits,
/// from the eigendecomposition of the Casimir. N == M gives the identity.
DenseOperator build_projector(int n_gates, int qubit_count);

/// Dicke state |M, n> in the computational basis of M qubits.
DenseState dense_dicke_state(int qubit_count, int excitations);

/// |psi> -> (U tensor ... tensor U)|psi>, one single-qubit factor per site.
void apply_to_every_qubit(const Eigen::Matrix2cd& u, DenseState& state);

/// U^{otimes count} as a dense matrix.
DenseOperator tensor_power(const Eigen::Matrix2cd& u, int count);

struct ChannelBranch {
  DenseState state;          // normalized output
  double probability = 0.0;  // branch weight
};

struct ChannelOutput {
  ChannelBranch success;  // projected into the j <= N/2 sectors, then U'
  ChannelBranch failure;  // orthogonal complement, left untouched
};

/// The gate-replication channel built from N uses of U: measure
/// {P, I - P}; on success apply U^{otimes M} restricted to range(P) (exact,
/// as P commutes with U^{otimes M}); on failure apply the identity.
class ReplicationChannel {
 public:
  ReplicationChannel(int n_gates, int qubit_count);

  ChannelOutput apply(const Eigen::Matrix2cd& u, const DenseState& input) const;

  const DenseOperator& projector() const { return projector_; }
  int n_gates() const { return n_gates_; }
  int qubit_count() const { return qubit_count_; }

 private:
  int n_gates_;
  int qubit_count_;
  DenseOperator projector_;
};

/// One-shot convenience wrapper around ReplicationChannel.
ChannelOutput replication_channel(const Eigen::Matrix2cd& u, int n_gates,
                                  int qubit_count, const DenseState& input);

/// Monte Carlo estimate of the average gate fidelity of the replication
/// channel over Haar-random U and Haar-random M-qubit input states.
/// Deterministic for fixed (samples, seed, workers = 1).
McEstimate mc_gate_fidelity(int n_gates, int qubit_count, std::int64_t samples,
                            std::uint64_t seed, int workers = 1);

/// Monte Carlo mean of <Psi|P|Psi> over the same Haar state stream.
McEstimate mc_projector_overlap(int n_gates, int qubit_count, std::int64_t samples,
                                std::uint64_t seed, int workers = 1);

struct HaarMoments {
  double mean_overlap = 0.0;   // E <Psi|P|Psi> = Tr P / D
  double second_moment = 0.0;  // E <Psi|P|Psi>^2 = Tr P (Tr P + 1) / (D (D+1))
};

/// Closed-form Haar moments of the projector overlap.
HaarMoments exact_moments(int n_gates, int qubit_count);

/// F_ent = ((d^M + 1) F_gate - 1) / d^M.
double entanglement_fidelity(int d, int m_out, double f_gate);

struct EntSuperreplicationResult {
  McEstimate fidelity;
  double extraction_probability = 0.0;  // (1/4)^N, closed form
};

/// Replication of maximally entangled qubit states: the channel acts on the
/// left halves of M Bell pairs and the output is compared with
/// (U (x) I)^{otimes M} |Phi+>^{otimes M}. Monte Carlo over U only; the gate
/// extraction probability (1/4)^N is reported as a closed-form field.
EntSuperreplicationResult mc_ent_superreplication(int n_gates, int qubit_count,
                                                  std::int64_t samples,
                                                  std::uint64_t seed, int workers = 1);

struct WorstCaseResult {
  double min_fidelity = 0.0;
  int argmin_index = -1;
  std::vector<McEstimate> per_probe;
};

/// Gate fidelity of the replication channel on fixed probe states,
/// Monte Carlo over U; returns the worst probe.
WorstCaseResult worst_case_probe(int n_gates, int qubit_count,
                                 const std::vector<DenseState>& probes,
                                 std::int64_t samples, std::uint64_t seed,
                                 int workers = 1);

}  // namespace superrep
