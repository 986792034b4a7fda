#include "superrep/schur.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace superrep {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// exact C(n, k) via the multiplicative form; intermediates stay within
// int64 for n <= 60
std::int64_t exact_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace

std::vector<SchurSector> qubit_sectors(int qubit_count) {
  if (qubit_count < 1 || qubit_count > 60) {
    throw std::invalid_argument("qubit_sectors: K must be in [1, 60]");
  }
  std::vector<SchurSector> sectors;
  for (int two_j = qubit_count; two_j >= 0; two_j -= 2) {
    SchurSector s;
    s.two_j = two_j;
    s.rep_dim = two_j + 1;
    const int k = (qubit_count - two_j) / 2;
    s.mult_dim = exact_binomial(qubit_count, k) - exact_binomial(qubit_count, k - 1);
    s.qubit_count = qubit_count;
    sectors.push_back(s);
  }
  return sectors;
}

LogReal log_projector_trace(int n_in, int m_out) {
  if (n_in < 1 || m_out < n_in) {
    throw std::invalid_argument("log_projector_trace: require M >= N >= 1");
  }
  std::vector<LogReal> terms;
  for (int two_j = m_out % 2; two_j <= std::min(n_in, m_out); two_j += 2) {
    const int k = (m_out - two_j) / 2;
    // ln m_jM = ln[C(M,k) - C(M,k-1)] = ln C(M,k) + ln1p(-k/(M-k+1))
    const double log_c = log_binomial(m_out, k).log();
    const double ratio = double(k) / double(m_out - k + 1);
    const double log_mult = log_c + std::log1p(-ratio);
    terms.push_back(LogReal::from_log(std::log(double(two_j + 1)) + log_mult));
  }
  return log_sum_exp(terms);
}

double projector_trace_fraction(int n_in, int m_out) {
  return std::exp(log_projector_trace(n_in, m_out).log() - m_out * kLn2);
}

double gate_fidelity_bound(int d, int n_in, int m_out) {
  if (d < 2 || n_in < 1 || m_out < 1) {
    throw std::invalid_argument("gate_fidelity_bound: require d >= 2, N >= 1, M >= 1");
  }
  const double log_defect = kLn2 +
                            0.5 * d * (d - 1) * std::log(double(m_out) + 1.0) -
                            double(n_in) * n_in / (2.0 * m_out);
  if (log_defect >= 0.0) return 0.0;
  return -std::expm1(log_defect);
}

std::int64_t choose_M_for_error(int d, double k, int n_in) {
  if (n_in < 3) throw std::invalid_argument("choose_M_for_error: N must be >= 3");
  if (d < 2 || k <= 0.0) {
    throw std::invalid_argument("choose_M_for_error: require d >= 2, k > 0");
  }
  const double value = double(n_in) * n_in /
                       (2.0 * (double(d) * d - d + k) * std::log(double(n_in)));
  return std::int64_t(std::floor(value));
}

}  // namespace superrep
