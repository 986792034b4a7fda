#include "superrep/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace superrep {

LogReal LogReal::from_value(double value) {
  if (value < 0.0 || std::isnan(value)) {
    throw std::invalid_argument("LogReal::from_value: value must be >= 0");
  }
  return from_log(std::log(value));
}

double LogReal::value() const { return std::exp(log_); }

LogReal LogReal::operator+(LogReal rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  const double hi = std::max(log_, rhs.log_);
  const double lo = std::min(log_, rhs.log_);
  return from_log(hi + std::log1p(std::exp(lo - hi)));
}

LogReal LogReal::pow(double exponent) const {
  if (is_zero() && exponent == 0.0) return one();
  return from_log(log_ * exponent);
}

LogReal log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return LogReal::zero();
  return LogReal::from_log(std::lgamma(double(n) + 1.0) -
                           std::lgamma(double(k) + 1.0) -
                           std::lgamma(double(n - k) + 1.0));
}

LogReal log_multinomial(std::int64_t n, std::span<const int> counts) {
  std::int64_t total = 0;
  double log_den = 0.0;
  for (int c : counts) {
    if (c < 0) throw std::invalid_argument("log_multinomial: negative count");
    total += c;
    log_den += std::lgamma(double(c) + 1.0);
  }
  if (total != n) {
    throw std::invalid_argument("log_multinomial: counts must sum to n");
  }
  return LogReal::from_log(std::lgamma(double(n) + 1.0) - log_den);
}

LogReal log_sum_exp(std::span<const LogReal> terms) {
  double hi = -std::numeric_limits<double>::infinity();
  for (LogReal t : terms) hi = std::max(hi, t.log());
  if (std::isinf(hi) && hi < 0) return LogReal::zero();
  double acc = 0.0;
  for (LogReal t : terms) {
    if (!t.is_zero()) acc += std::exp(t.log() - hi);
  }
  return LogReal::from_log(hi + std::log(acc));
}

LogReal binomial_window_sum(std::int64_t m_trials, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("binomial_window_sum: lo > hi");
  const std::int64_t a = std::max<std::int64_t>(lo, 0);
  const std::int64_t b = std::min<std::int64_t>(hi, m_trials);
  if (a > b) return LogReal::zero();
  std::vector<LogReal> terms;
  terms.reserve(std::size_t(b - a + 1));
  for (std::int64_t k = a; k <= b; ++k) terms.push_back(log_binomial(m_trials, k));
  return log_sum_exp(terms);
}

}  // namespace superrep
