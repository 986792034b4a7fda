#pragma once

#include <optional>

namespace superrep {

/// Exponents describing a replication strategy: M = Theta(N^{1+delta})
/// output copies, groups of N' = Theta(N^beta) inputs, replication rate
/// alpha, slack epsilon. Grouped cloning reaches fidelity 1 iff beta > delta.
struct RateSpec {
  double alpha = 0.0;
  double delta = 0.0;
  double beta = 0.0;
  double epsilon = 0.0;

  bool feasible() const { return beta > delta; }
};

/// Fidelity of the chain of K-1 optimal N-to-2N probabilistic cloners,
/// 2^{-NK} sum_n sum_{x in S_{n,K-1}} [prod_j C(N, N/2+x_j)] C(N, n-sum x_i),
/// where the partial sums of x are constrained to [n-N, n]. Evaluated by
/// dynamic programming over the partial sum, one pass per final label n.
double sequential_fidelity(int n_in, int steps_k);

/// Fidelity of cloning N inputs in independent groups of N' (N' | N), each
/// group running the optimal N'-to-M' probabilistic cloner:
/// F[N'->M']^(N/N').
double divide_and_clone_fidelity(int n_in, int group_size, int m_per_group);

struct InteractionPlan {
  int group_size = 0;     // N'
  int m_per_group = 0;    // M', the interaction size
  int group_count = 0;    // N / N'
  double predicted_fidelity = 0.0;
};

/// Smallest even divisor N' of N whose grouped cloner reaches fidelity
/// >= 1 - target_infidelity with M' = ceil_even(M N'/N). Empty when no
/// divisor reaches the target.
std::optional<InteractionPlan> plan_interaction_size(int n_in, int m_out,
                                                     double target_infidelity);

}  // namespace superrep
