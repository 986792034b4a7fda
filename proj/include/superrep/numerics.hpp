#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace superrep {

/// Nonnegative real stored as its natural logarithm. Zero is the log value
/// -infinity. Sums and products stay finite for log magnitudes up to ~1e6,
/// which covers binomial coefficients with thousands of trials.
class LogReal {
 public:
  constexpr LogReal() : log_(-std::numeric_limits<double>::infinity()) {}

  static constexpr LogReal zero() { return LogReal(); }
  static constexpr LogReal one() { return from_log(0.0); }
  static constexpr LogReal from_log(double log_value) {
    LogReal r;
    r.log_ = log_value;
    return r;
  }
  static LogReal from_value(double value);

  constexpr double log() const { return log_; }
  double value() const;
  constexpr bool is_zero() const {
    return log_ == -std::numeric_limits<double>::infinity();
  }

  // multiplication/division are exact log arithmetic
  LogReal operator*(LogReal rhs) const { return from_log(log_ + rhs.log_); }
  LogReal operator/(LogReal rhs) const { return from_log(log_ - rhs.log_); }
  LogReal& operator*=(LogReal rhs) {
    log_ += rhs.log_;
    return *this;
  }

  // addition is log-sum-exp of the pair
  LogReal operator+(LogReal rhs) const;
  LogReal& operator+=(LogReal rhs) {
    *this = *this + rhs;
    return *this;
  }

  LogReal pow(double exponent) const;

  friend constexpr bool operator<(LogReal a, LogReal b) { return a.log_ < b.log_; }
  friend constexpr bool operator>(LogReal a, LogReal b) { return a.log_ > b.log_; }
  friend constexpr bool operator<=(LogReal a, LogReal b) { return a.log_ <= b.log_; }
  friend constexpr bool operator>=(LogReal a, LogReal b) { return a.log_ >= b.log_; }
  friend constexpr bool operator==(LogReal a, LogReal b) { return a.log_ == b.log_; }

 private:
  double log_;
};

/// ln C(n, k); returns zero (log -inf) when k < 0 or k > n, so boundary
/// indices generated by windowed sums contribute nothing.
LogReal log_binomial(std::int64_t n, std::int64_t k);

/// ln multinomial(n; counts) = ln n! - sum ln counts_i!; counts must be
/// nonnegative and sum to n.
LogReal log_multinomial(std::int64_t n, std::span<const int> counts);

/// log of the sum of the inputs, max-shifted. Empty input gives zero.
LogReal log_sum_exp(std::span<const LogReal> terms);

/// ln sum_{m=lo}^{hi} C(M, m); indices outside [0, M] contribute zero.
LogReal binomial_window_sum(std::int64_t m_trials, std::int64_t lo, std::int64_t hi);

}  // namespace superrep
