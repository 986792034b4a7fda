#include "superrep/cloners.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace superrep {

namespace {

constexpr double kLn2 = std::numbers::ln2;

void require_even_pair(int n_in, int m_out) {
  if (n_in < 2 || n_in % 2 != 0) {
    throw std::invalid_argument("equatorial cloner: N must be a positive even integer");
  }
  if (m_out < n_in || m_out % 2 != 0) {
    throw std::invalid_argument("equatorial cloner: M must be even and >= N");
  }
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// ln q_n^2 for the probabilistic filter, n = N/2 + m in 0..N
double log_q_sq(int n_in, int m_out, int n) {
  return log_binomial(m_out, (m_out - n_in) / 2 + n).log() -
         log_binomial(m_out, (m_out + n_in) / 2).log() -
         log_binomial(n_in, n).log();
}

}  // namespace

ClonerMap ClonerMap::deterministic(int n_in, int m_out) {
  require_even_pair(n_in, m_out);
  ClonerMap map;
  map.n_in = n_in;
  map.m_out = m_out;
  map.kind = ClonerKind::deterministic;
  map.success_coefficients.assign(std::size_t(n_in) + 1, LogReal::one());
  return map;
}

ClonerMap ClonerMap::probabilistic(int n_in, int m_out) {
  require_even_pair(n_in, m_out);
  ClonerMap map;
  map.n_in = n_in;
  map.m_out = m_out;
  map.kind = ClonerKind::probabilistic;
  map.success_coefficients.resize(std::size_t(n_in) + 1);
  for (int n = 0; n <= n_in; ++n) {
    map.success_coefficients[std::size_t(n)] =
        LogReal::from_log(0.5 * log_q_sq(n_in, m_out, n));
  }
  return map;
}

double ClonerMap::failure_coefficient(int n) const {
  if (kind == ClonerKind::deterministic) return 0.0;
  const double q_sq = std::exp(2.0 * coefficient(n).log());
  return std::sqrt(std::max(0.0, 1.0 - q_sq));
}

nlohmann::json to_json(const ReplicationReport& report) {
  return {{"N", report.n_in},
          {"M", report.m_out},
          {"fidelity", report.fidelity},
          {"success_probability", report.success_probability},
          {"lower_bound", report.lower_bound},
          {"rate_alpha", report.rate_alpha}};
}

ReplicationReport replication_report(int n_in, int m_out, ClonerKind kind) {
  ReplicationReport r;
  r.n_in = n_in;
  r.m_out = m_out;
  if (kind == ClonerKind::probabilistic) {
    r.fidelity = fidelity_prob_equatorial(n_in, m_out);
    r.success_probability = success_prob_equatorial(n_in, m_out);
    r.lower_bound = clamp01(1.0 - 2.0 * std::exp(-double(n_in) * n_in / (2.0 * m_out)));
  } else {
    r.fidelity = fidelity_det_equatorial(n_in, m_out);
    r.success_probability = 1.0;
    r.lower_bound = 0.0;  // no closed-form deterministic lower bound; trivial
  }
  r.rate_alpha =
      (m_out > n_in && n_in > 1) ? std::log(double(m_out - n_in)) / std::log(double(n_in)) : 0.0;
  return r;
}

double fidelity_det_equatorial(int n_in, int m_out) {
  require_even_pair(n_in, m_out);
  std::vector<LogReal> terms;
  terms.reserve(std::size_t(n_in) + 1);
  for (int n = 0; n <= n_in; ++n) {
    terms.push_back(LogReal::from_log(
        0.5 * (log_binomial(n_in, n).log() +
               log_binomial(m_out, (m_out - n_in) / 2 + n).log())));
  }
  const double log_sum = log_sum_exp(terms).log();
  return std::exp(2.0 * log_sum - (n_in + m_out) * kLn2);
}

double fidelity_prob_equatorial(int n_in, int m_out) {
  require_even_pair(n_in, m_out);
  const double log_window =
      binomial_window_sum(m_out, (m_out - n_in) / 2, (m_out + n_in) / 2).log();
  return std::exp(log_window - m_out * kLn2);
}

double log_success_prob_equatorial(int n_in, int m_out) {
  require_even_pair(n_in, m_out);
  const double log_window =
      binomial_window_sum(m_out, (m_out - n_in) / 2, (m_out + n_in) / 2).log();
  return log_window - n_in * kLn2 - log_binomial(m_out, (m_out + n_in) / 2).log();
}

double success_prob_equatorial(int n_in, int m_out) {
  return std::exp(log_success_prob_equatorial(n_in, m_out));
}

CloneResult apply_prob_cloner(const SymmetricState& input, int m_out) {
  const int n_in = input.copies;
  require_even_pair(n_in, m_out);
  if (int(input.amplitudes.size()) != n_in + 1) {
    throw std::invalid_argument("apply_prob_cloner: malformed symmetric state");
  }
  CloneResult result;
  result.state.copies = m_out;
  result.state.amplitudes.assign(std::size_t(m_out) + 1, Complex(0.0));
  double prob = 0.0;
  for (int n = 0; n <= n_in; ++n) {
    const double q = std::exp(0.5 * log_q_sq(n_in, m_out, n));
    const Complex amp = input.amplitudes[std::size_t(n)] * q;
    result.state.amplitudes[std::size_t((m_out - n_in) / 2 + n)] = amp;
    prob += std::norm(amp);
  }
  result.success_probability = prob;
  result.state.normalize();
  return result;
}

namespace {

struct FilterTables {
  std::vector<double> log_psi_sq;  // ln |psi_n|^2 for the equatorial input
  std::vector<double> log_q_sq;    // ln q_n^2
  std::vector<double> log_w_sq;    // ln (1 - q_n^2), -inf at the window edges
  std::vector<double> log_target;  // ln T_{M/2+m} of the M-copy target
};

FilterTables make_filter_tables(int n_in, int m_out) {
  require_even_pair(n_in, m_out);
  FilterTables t;
  t.log_psi_sq.resize(std::size_t(n_in) + 1);
  t.log_q_sq.resize(std::size_t(n_in) + 1);
  t.log_w_sq.resize(std::size_t(n_in) + 1);
  t.log_target.resize(std::size_t(n_in) + 1);
  for (int n = 0; n <= n_in; ++n) {
    t.log_psi_sq[std::size_t(n)] = log_binomial(n_in, n).log() - n_in * kLn2;
    const double lq2 = log_q_sq(n_in, m_out, n);
    t.log_q_sq[std::size_t(n)] = lq2;
    const double q_sq = std::exp(lq2);
    t.log_w_sq[std::size_t(n)] =
        q_sq < 1.0 ? std::log1p(-q_sq) : -std::numeric_limits<double>::infinity();
    t.log_target[std::size_t(n)] =
        0.5 * (log_binomial(m_out, (m_out - n_in) / 2 + n).log() - m_out * kLn2);
  }
  return t;
}

}  // namespace

AttemptPoint repeated_attempt_point(int n_in, int m_out, double attempt_index) {
  if (attempt_index < 1.0) {
    throw std::invalid_argument("repeated_attempt_point: attempt index must be >= 1");
  }
  const FilterTables t = make_filter_tables(n_in, m_out);
  const double k = attempt_index;
  AttemptPoint point;

  // cumulative success over k attempts: sum_n |psi_n|^2 (1 - w_n^{2k})
  double cumulative = 0.0;
  for (int n = 0; n <= n_in; ++n) {
    const double lw2 = t.log_w_sq[std::size_t(n)];
    cumulative += std::exp(t.log_psi_sq[std::size_t(n)]) *
                  (std::isinf(lw2) ? 1.0 : -std::expm1(k * lw2));
  }
  point.cumulative_success_probability = clamp01(cumulative);

  // conditional fidelity of attempt k: filter applied to W^{k-1}|psi>
  std::vector<LogReal> num_terms, den_terms;
  num_terms.reserve(std::size_t(n_in) + 1);
  den_terms.reserve(std::size_t(n_in) + 1);
  for (int n = 0; n <= n_in; ++n) {
    const double lw2 = t.log_w_sq[std::size_t(n)];
    double decay = 0.0;
    if (k > 1.0) {
      if (std::isinf(lw2)) continue;  // edge components die after one failure
      decay = 0.5 * (k - 1.0) * lw2;
    }
    const double log_amp = 0.5 * t.log_psi_sq[std::size_t(n)] + decay +
                           0.5 * t.log_q_sq[std::size_t(n)];
    num_terms.push_back(LogReal::from_log(t.log_target[std::size_t(n)] + log_amp));
    den_terms.push_back(LogReal::from_log(2.0 * log_amp));
  }
  const double log_num = log_sum_exp(num_terms).log();
  const double log_den = log_sum_exp(den_terms).log();
  point.conditional_fidelity = std::exp(2.0 * log_num - log_den);
  return point;
}

std::vector<AttemptPoint> repeated_attempt_curve(int n_in, int m_out, int max_attempts) {
  if (max_attempts < 1) {
    throw std::invalid_argument("repeated_attempt_curve: max_attempts must be >= 1");
  }
  const FilterTables t = make_filter_tables(n_in, m_out);
  std::vector<double> weight(std::size_t(n_in) + 1);  // |psi_n|^2, renormalized on failure
  for (int n = 0; n <= n_in; ++n) weight[std::size_t(n)] = std::exp(t.log_psi_sq[std::size_t(n)]);

  std::vector<AttemptPoint> curve;
  curve.reserve(std::size_t(max_attempts));
  double cumulative = 0.0;
  double survival = 1.0;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    double p = 0.0;
    double num = 0.0;  // <target| Q psi>, real at t = 0
    for (int n = 0; n <= n_in; ++n) {
      const double w = weight[std::size_t(n)];
      const double q_sq = std::exp(t.log_q_sq[std::size_t(n)]);
      p += w * q_sq;
      num += std::exp(t.log_target[std::size_t(n)]) * std::sqrt(w * q_sq);
    }
    cumulative += survival * p;
    survival *= (1.0 - p);
    curve.push_back({clamp01(cumulative), num * num / p});

    double remaining = 0.0;
    for (int n = 0; n <= n_in; ++n) {
      const double q_sq = std::exp(t.log_q_sq[std::size_t(n)]);
      weight[std::size_t(n)] *= std::max(0.0, 1.0 - q_sq);
      remaining += weight[std::size_t(n)];
    }
    if (remaining <= 0.0) break;  // filter can no longer fail
    for (double& w : weight) w /= remaining;
  }
  return curve;
}

double post_failure_input_fidelity(int n_in, int m_out) {
  const FilterTables t = make_filter_tables(n_in, m_out);
  double num = 0.0, den = 0.0;
  for (int n = 0; n <= n_in; ++n) {
    const double psi_sq = std::exp(t.log_psi_sq[std::size_t(n)]);
    const double w_sq = std::isinf(t.log_w_sq[std::size_t(n)])
                            ? 0.0
                            : std::exp(t.log_w_sq[std::size_t(n)]);
    num += psi_sq * std::sqrt(w_sq);
    den += psi_sq * w_sq;
  }
  if (den == 0.0) throw std::domain_error("post_failure_input_fidelity: filter never fails");
  return num * num / den;
}

double clock_bound(const ClockSpec& spec, int n_in, int m_out) {
  if (n_in < 1 || m_out < n_in) {
    throw std::invalid_argument("clock_bound: require M >= N >= 1");
  }
  const double k = double(spec.level_count);
  const double p = spec.p_min();
  const double exponent = -2.0 * p * p * double(n_in) * n_in / m_out +
                          4.0 * double(n_in) / (double(m_out) * k);
  return clamp01(1.0 - 2.0 * k * std::exp(exponent));
}

MultiphaseCloneResult multiphase_clone(const TypeClassState& input, int m_out) {
  const int d = input.level_count;
  const int n_in = input.copies;
  if (m_out < n_in) throw std::invalid_argument("multiphase_clone: M must be >= N");
  if ((m_out - n_in) % d != 0) {
    throw std::invalid_argument("multiphase_clone: d must divide M - N");
  }
  const int shift = (m_out - n_in) / d;

  // log of multinomial(M; n + shift) / multinomial(N; n) per input class
  std::vector<double> log_ratio(input.occupations.size());
  double log_scale = -std::numeric_limits<double>::infinity();
  std::vector<int> shifted(std::size_t(d));
  for (std::size_t i = 0; i < input.occupations.size(); ++i) {
    for (int j = 0; j < d; ++j) shifted[std::size_t(j)] = input.occupations[i][std::size_t(j)] + shift;
    log_ratio[i] = log_multinomial(m_out, shifted).log() -
                   log_multinomial(n_in, input.occupations[i]).log();
    log_scale = std::max(log_scale, log_ratio[i]);
  }

  MultiphaseCloneResult result;
  result.state.level_count = d;
  result.state.copies = m_out;
  result.state.occupations = enumerate_occupations(d, m_out);
  result.state.amplitudes.assign(result.state.occupations.size(), Complex(0.0));
  double prob = 0.0;
  for (std::size_t i = 0; i < input.occupations.size(); ++i) {
    for (int j = 0; j < d; ++j) shifted[std::size_t(j)] = input.occupations[i][std::size_t(j)] + shift;
    const int out_index = result.state.index_of(shifted);
    const Complex amp =
        input.amplitudes[i] * std::exp(0.5 * (log_ratio[i] - log_scale));
    result.state.amplitudes[std::size_t(out_index)] = amp;
    prob += std::norm(amp);
  }
  result.success_probability = prob;
  result.state.normalize();
  return result;
}

double universal_fidelity(int d, int n_in, int m_out) {
  if (d < 2 || n_in < 1 || m_out < n_in) {
    throw std::invalid_argument("universal_fidelity: require d >= 2, M >= N >= 1");
  }
  return std::exp(log_binomial(d + n_in - 1, n_in).log() -
                  log_binomial(d + m_out - 1, m_out).log());
}

double coherent_prob_fidelity(double lambda, int n_in, int m_out) {
  if (lambda < 0.0 || n_in < 1 || m_out < n_in) {
    throw std::invalid_argument("coherent_prob_fidelity: require lambda >= 0, M >= N >= 1");
  }
  if (lambda >= double(m_out) / n_in - 1.0) return 1.0;
  return (1.0 + lambda) * n_in / m_out;
}

LogReal pandey_bound(double alpha, double r, int n_in) {
  if (alpha < 1.0 || r < 0.0 || n_in < 2) {
    throw std::invalid_argument("pandey_bound: require alpha >= 1, r >= 0, N >= 2");
  }
  return LogReal::from_log(-(alpha - 1.0) * r * r * std::pow(double(n_in), alpha) *
                           std::log(double(n_in)));
}

MeasurePrepareBounds measure_prepare_bound(double f_single, std::int64_t m_out) {
  if (f_single < 0.0 || f_single > 1.0) {
    throw std::invalid_argument("measure_prepare_bound: F_single must be in [0,1]");
  }
  if (m_out < 1) throw std::invalid_argument("measure_prepare_bound: M must be >= 1");
  MeasurePrepareBounds b;
  b.power_bound = std::pow(f_single, double(m_out));
  b.bernoulli_bound = clamp01(1.0 - double(m_out) * (1.0 - f_single));
  return b;
}

}  // namespace superrep
