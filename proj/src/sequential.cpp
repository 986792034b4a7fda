#include "superrep/sequential.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "superrep/cloners.hpp"
#include "superrep/numerics.hpp"

namespace superrep {

namespace {
constexpr double kLn2 = std::numbers::ln2;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}  // namespace

double sequential_fidelity(int n_in, int steps_k) {
  if (n_in < 2 || n_in % 2 != 0) {
    throw std::invalid_argument("sequential_fidelity: N must be a positive even integer");
  }
  if (steps_k < 2) throw std::invalid_argument("sequential_fidelity: K must be >= 2");

  const int half = n_in / 2;
  std::vector<double> log_weight(std::size_t(n_in) + 1);  // ln C(N, N/2+x), x = i-N/2
  for (int i = 0; i <= n_in; ++i) log_weight[std::size_t(i)] = log_binomial(n_in, i).log();

  LogReal total = LogReal::zero();
  std::vector<double> cur(std::size_t(n_in) + 1), next(std::size_t(n_in) + 1);
  std::vector<LogReal> scratch;
  scratch.reserve(std::size_t(n_in) + 1);
  for (int n = 0; n <= n_in; ++n) {
    // DP over the partial sum s in [n-N, n], stored at offset s-(n-N)
    std::fill(cur.begin(), cur.end(), kNegInf);
    cur[std::size_t(n_in - n)] = 0.0;  // s = 0 before the first step
    for (int step = 1; step < steps_k; ++step) {
      for (int o = 0; o <= n_in; ++o) {
        scratch.clear();
        for (int i = 0; i <= n_in; ++i) {
          const int from = o - (i - half);  // previous offset, s' = s - x
          if (from < 0 || from > n_in) continue;
          if (cur[std::size_t(from)] == kNegInf) continue;
          scratch.push_back(LogReal::from_log(cur[std::size_t(from)] + log_weight[std::size_t(i)]));
        }
        next[std::size_t(o)] = log_sum_exp(scratch).log();
      }
      cur.swap(next);
    }
    scratch.clear();
    for (int o = 0; o <= n_in; ++o) {
      if (cur[std::size_t(o)] == kNegInf) continue;
      // closing factor C(N, n - s) with s = (n-N) + o, so n - s = N - o
      scratch.push_back(
          LogReal::from_log(cur[std::size_t(o)] + log_binomial(n_in, n_in - o).log()));
    }
    total += log_sum_exp(scratch);
  }
  return std::exp(total.log() - double(n_in) * steps_k * kLn2);
}

double divide_and_clone_fidelity(int n_in, int group_size, int m_per_group) {
  if (group_size < 2 || n_in < group_size || n_in % group_size != 0) {
    throw std::invalid_argument("divide_and_clone_fidelity: group size must divide N");
  }
  const double log_group = std::log(fidelity_prob_equatorial(group_size, m_per_group));
  return std::exp(double(n_in / group_size) * log_group);
}

std::optional<InteractionPlan> plan_interaction_size(int n_in, int m_out,
                                                     double target_infidelity) {
  if (m_out < n_in) throw std::invalid_argument("plan_interaction_size: M must be >= N");
  if (!(target_infidelity > 0.0 && target_infidelity < 1.0)) {
    throw std::invalid_argument("plan_interaction_size: target_infidelity must be in (0,1)");
  }
  for (int group = 2; group <= n_in; ++group) {
    if (n_in % group != 0 || group % 2 != 0) continue;
    // per-group output count, rounded up to the next even integer
    const long long scaled = (long long(m_out) * group + n_in - 1) / n_in;
    const int m_group = int(scaled + (scaled % 2));
    if (m_group < group) continue;
    const double fidelity = divide_and_clone_fidelity(n_in, group, m_group);
    if (fidelity >= 1.0 - target_infidelity) {
      InteractionPlan plan;
      plan.group_size = group;
      plan.m_per_group = m_group;
      plan.group_count = n_in / group;
      plan.predicted_fidelity = fidelity;
      return plan;
    }
  }
  return std::nullopt;
}

}  // namespace superrep
