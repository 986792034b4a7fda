#pragma once

#include <cstdint>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "superrep/gatesim.hpp"

namespace superrep {

struct EstimationReport {
  int n_in = 0;
  int d = 2;
  double est_fidelity = 0.0;           // gate-estimation fidelity bound
  std::int64_t derived_m = 0;          // copy count behind the bound
  double replication_bound = 0.0;      // gate replication via estimation
  double supergeneration_bound = 0.0;  // pure-state generation via estimation
};

nlohmann::json to_json(const EstimationReport& report);

struct PipelineBound {
  std::int64_t m = 0;
  double bound = 0.0;
};

/// Gate-estimation fidelity bound via replication: produce
/// M = floor(N^2 / (2(d^2-d+2) ln N)) entangled copies, estimate the state
/// to fidelity 1 - c_est/M, convert to a gate estimate. The infidelity
/// scales as log N / N^2.
PipelineBound gate_estimation_pipeline_bound(int d, int n_in, double c_est = 1.0);

/// F_est^M: fidelity of preparing M copies from one estimate.
double supergeneration_bound(int n_in, std::int64_t m_out, double f_est);

/// 1 - c M / N^beta, clamped to [0,1]: gate replication through an
/// estimation strategy whose single-shot infidelity vanishes as 1/N^beta.
double estimation_based_gate_replication_bound(double beta, int n_in,
                                               std::int64_t m_out, double c);

/// Haar-state average |<psi| U^dag V |psi>|^2 for qubit gates:
/// (|tr(U^dag V)|^2 + 2)/6.
double qubit_gate_fidelity(const Eigen::Matrix2cd& estimate,
                           const Eigen::Matrix2cd& truth);

/// End-to-end toy pipeline: N uses of a Haar-random U produce entangled
/// copies through the replication channel (the copy budget
/// min(choose_M_for_error, dense limit) is clamped below at N so the channel
/// stays well formed; at dense scale this makes the copies exact), each copy
/// is measured in a Pauli product basis, the two-qubit state is rebuilt by
/// linear inversion and projected onto the closest maximally entangled
/// state, and the resulting gate estimate is scored with
/// qubit_gate_fidelity. Returns the Haar average over U.
McEstimate mc_gate_estimation(int n_in, std::int64_t samples, std::uint64_t seed,
                              int workers = 1);

/// Worst-case scaling relation c/N^2 <= c/M^2 + c/M^beta with
/// M = N + round(N^alpha).
bool scaling_relation_holds(double alpha, double beta, double c, std::int64_t n_in);

/// Whether the relation above keeps holding along a growing ladder of N:
/// replication at rate alpha with error exponent beta is consistent with
/// optimal phase estimation only for alpha < 1 and beta below 3 - alpha.
bool worst_case_scaling_feasible(double alpha, double beta, double c = 1.0);

EstimationReport make_estimation_report(int d, int n_in, std::int64_t m_target,
                                        double c_est = 1.0);

}  // namespace superrep
