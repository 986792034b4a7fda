#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "superrep/dicke.hpp"
#include "superrep/numerics.hpp"

namespace superrep {

enum class ClonerKind { deterministic, probabilistic };

/// N-to-M cloner diagonal in the Dicke basis: |N, N/2+m> -> c_m |M, M/2+m>
/// for m in [-N/2, N/2]. The deterministic isometry has all c_m = 1; the
/// probabilistic filter has c_m <= 1 with equality at m = +-N/2, and its
/// complement sqrt(1 - c_m^2) is the failure branch.
struct ClonerMap {
  int n_in = 0;
  int m_out = 0;
  ClonerKind kind = ClonerKind::deterministic;
  std::vector<LogReal> success_coefficients;  // index n = N/2+m in 0..N

  static ClonerMap deterministic(int n_in, int m_out);
  static ClonerMap probabilistic(int n_in, int m_out);

  LogReal coefficient(int n) const { return success_coefficients[std::size_t(n)]; }
  /// sqrt(1 - c_n^2); zero for the deterministic isometry
  double failure_coefficient(int n) const;
};

struct ReplicationReport {
  int n_in = 0;
  int m_out = 0;
  double fidelity = 0.0;
  double success_probability = 1.0;
  double lower_bound = 0.0;
  double rate_alpha = 0.0;  // log(M-N)/log N; 0 when M == N
};

nlohmann::json to_json(const ReplicationReport& report);
ReplicationReport replication_report(int n_in, int m_out, ClonerKind kind);

/// Optimal deterministic equatorial fidelity
/// 2^{-(N+M)} [sum_m sqrt(C(N,N/2+m) C(M,M/2+m))]^2, N and M even.
double fidelity_det_equatorial(int n_in, int m_out);

/// Optimal probabilistic equatorial fidelity 2^{-M} sum_m C(M, M/2+m).
double fidelity_prob_equatorial(int n_in, int m_out);

/// Equatorial success probability
/// [2^N C(M,(N+M)/2)]^{-1} sum_m C(M, M/2+m); phase independent.
double success_prob_equatorial(int n_in, int m_out);
double log_success_prob_equatorial(int n_in, int m_out);

struct CloneResult {
  SymmetricState state;
  double success_probability = 0.0;
};

/// Applies the optimal probabilistic filter to a symmetric state and
/// renormalizes; the returned probability is the squared norm before
/// renormalization.
CloneResult apply_prob_cloner(const SymmetricState& input, int m_out);

struct AttemptPoint {
  double cumulative_success_probability = 0.0;
  double conditional_fidelity = 0.0;
};

/// Repeated probabilistic cloning with failure branch W = sqrt(I - Q^dag Q):
/// attempt k succeeds with the probability of the filter on the current
/// (renormalized) failed state. Entry k-1 of the result holds the cumulative
/// success probability after k attempts and the fidelity of the clone
/// produced at attempt k, conditional on succeeding there.
std::vector<AttemptPoint> repeated_attempt_curve(int n_in, int m_out, int max_attempts);

/// Closed-form point of the same curve at an arbitrary attempt index: all
/// branch operators are diagonal, so the state after k-1 failures is
/// W^{k-1}|psi> up to normalization and any k is reachable in O(N).
AttemptPoint repeated_attempt_point(int n_in, int m_out, double attempt_index);

/// Fidelity of the post-failure state with the original equatorial input
/// after a single failed attempt, <psi|W|psi>^2 / <psi|W^2|psi>.
double post_failure_input_fidelity(int n_in, int m_out);

/// Clock-state fidelity bound 1 - 2K exp(-2 p_min^2 N^2 / M + 4N/(MK)),
/// clamped to [0,1]; K is the number of distinct energy levels.
double clock_bound(const ClockSpec& spec, int n_in, int m_out);

struct MultiphaseCloneResult {
  TypeClassState state;
  double success_probability = 0.0;
};

/// Probabilistic cloner for type-class states over d levels: shifts every
/// occupation vector by ((M-N)/d) per level with the multinomial coefficient
/// ratio, scaled so the largest coefficient is 1. Reduces to the equatorial
/// filter at d = 2. Requires d | (M - N).
MultiphaseCloneResult multiphase_clone(const TypeClassState& input, int m_out);

/// Universal cloning fidelity C(d+N-1, N) / C(d+M-1, M).
double universal_fidelity(int d, int n_in, int m_out);

/// Coherent-state fidelity under a Gaussian prior of precision lambda:
/// (1+lambda) N / M below the threshold lambda = M/N - 1, else 1.
double coherent_prob_fidelity(double lambda, int n_in, int m_out);

/// Success-probability bound for coherent-state replication at rate alpha:
/// returns exp[-(alpha-1) r^2 N^alpha ln N] as a LogReal.
LogReal pandey_bound(double alpha, double r, int n_in);

struct MeasurePrepareBounds {
  double power_bound = 0.0;      // F_single^M
  double bernoulli_bound = 0.0;  // 1 - M (1 - F_single), clamped to [0,1]
};

MeasurePrepareBounds measure_prepare_bound(double f_single, std::int64_t m_out);

}  // namespace superrep
