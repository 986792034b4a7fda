#include "superrep/dicke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "superrep/numerics.hpp"

namespace superrep {

namespace {
constexpr double kLn2 = std::numbers::ln2;
}

double SymmetricState::norm_sq() const {
  double s = 0.0;
  for (const Complex& a : amplitudes) s += std::norm(a);
  return s;
}

void SymmetricState::normalize() {
  const double n = std::sqrt(norm_sq());
  if (n == 0.0) throw std::domain_error("SymmetricState::normalize: zero state");
  for (Complex& a : amplitudes) a /= n;
}

Complex overlap(const SymmetricState& a, const SymmetricState& b) {
  if (a.copies != b.copies) return 0.0;
  Complex s = 0.0;
  for (int n = 0; n <= a.copies; ++n) s += std::conj(a.amplitudes[n]) * b.amplitudes[n];
  return s;
}

double state_fidelity(const SymmetricState& a, const SymmetricState& b) {
  return std::norm(overlap(a, b));
}

nlohmann::json to_json(const SymmetricState& state) {
  nlohmann::json amps = nlohmann::json::array();
  for (const Complex& a : state.amplitudes) {
    amps.push_back({a.real(), a.imag()});
  }
  return {{"N", state.copies}, {"amplitudes", std::move(amps)}};
}

SymmetricState symmetric_state_from_json(const nlohmann::json& j) {
  SymmetricState s;
  s.copies = j.at("N").get<int>();
  for (const auto& pair : j.at("amplitudes")) {
    s.amplitudes.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  if (int(s.amplitudes.size()) != s.copies + 1) {
    throw std::invalid_argument("SymmetricState: expected N+1 amplitudes");
  }
  return s;
}

SymmetricState equatorial_expand(int copies, double t) {
  if (copies < 1) throw std::invalid_argument("equatorial_expand: copies must be >= 1");
  SymmetricState s;
  s.copies = copies;
  s.amplitudes.resize(std::size_t(copies) + 1);
  for (int n = 0; n <= copies; ++n) {
    const double mag = std::exp(0.5 * log_binomial(copies, n).log() - 0.5 * copies * kLn2);
    s.amplitudes[n] = std::polar(mag, -double(n) * t);
  }
  return s;
}

ClockSpec::ClockSpec(int levels, std::vector<double> p, std::vector<double> e)
    : level_count(levels), probabilities(std::move(p)), energies(std::move(e)) {
  if (level_count < 1) throw std::invalid_argument("ClockSpec: level_count must be >= 1");
  if (int(probabilities.size()) != level_count || int(energies.size()) != level_count) {
    throw std::invalid_argument("ClockSpec: probabilities/energies must have level_count entries");
  }
  double sum = 0.0;
  for (double pj : probabilities) {
    if (pj < 0.0) throw std::invalid_argument("ClockSpec: probabilities must be nonnegative");
    sum += pj;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("ClockSpec: probabilities must sum to 1");
  }
}

ClockSpec ClockSpec::qubit_equatorial() {
  return ClockSpec(2, {0.5, 0.5}, {0.0, 1.0});
}

double ClockSpec::p_min() const {
  double m = 1.0;
  bool any = false;
  for (double pj : probabilities) {
    if (pj > 0.0) {
      m = std::min(m, pj);
      any = true;
    }
  }
  if (!any) throw std::domain_error("ClockSpec::p_min: all populations zero");
  return m;
}

double TypeClassState::norm_sq() const {
  double s = 0.0;
  for (const Complex& a : amplitudes) s += std::norm(a);
  return s;
}

void TypeClassState::normalize() {
  const double n = std::sqrt(norm_sq());
  if (n == 0.0) throw std::domain_error("TypeClassState::normalize: zero state");
  for (Complex& a : amplitudes) a /= n;
}

int TypeClassState::index_of(std::span<const int> occupation) const {
  for (std::size_t i = 0; i < occupations.size(); ++i) {
    if (std::equal(occupations[i].begin(), occupations[i].end(), occupation.begin(),
                   occupation.end())) {
      return int(i);
    }
  }
  return -1;
}

Complex overlap(const TypeClassState& a, const TypeClassState& b) {
  if (a.level_count != b.level_count) return 0.0;
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.occupations.size(); ++i) {
    const int j = b.index_of(a.occupations[i]);
    if (j >= 0) s += std::conj(a.amplitudes[i]) * b.amplitudes[std::size_t(j)];
  }
  return s;
}

double state_fidelity(const TypeClassState& a, const TypeClassState& b) {
  return std::norm(overlap(a, b));
}

std::vector<std::vector<int>> enumerate_occupations(int level_count, int copies) {
  if (level_count < 1 || copies < 0) {
    throw std::invalid_argument("enumerate_occupations: bad arguments");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur(std::size_t(level_count), 0);
  // depth-first in lexicographic order over (n_0, n_1, ..., n_{d-1})
  auto rec = [&](auto&& self, int level, int remaining) -> void {
    if (level == level_count - 1) {
      cur[std::size_t(level)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int n = 0; n <= remaining; ++n) {
      cur[std::size_t(level)] = n;
      self(self, level + 1, remaining - n);
    }
  };
  rec(rec, 0, copies);
  return out;
}

TypeClassState multiphase_expand(const ClockSpec& spec, int copies,
                                 std::span<const double> phases) {
  const int d = spec.level_count;
  if (d < 2) throw std::invalid_argument("multiphase_expand: need at least 2 levels");
  if (copies < 1) throw std::invalid_argument("multiphase_expand: copies must be >= 1");
  if (int(phases.size()) != d - 1) {
    throw std::invalid_argument("multiphase_expand: phases must have d-1 entries");
  }
  TypeClassState s;
  s.level_count = d;
  s.copies = copies;
  s.occupations = enumerate_occupations(d, copies);
  s.amplitudes.resize(s.occupations.size());
  for (std::size_t i = 0; i < s.occupations.size(); ++i) {
    const std::vector<int>& occ = s.occupations[i];
    double log_p = log_multinomial(copies, occ).log();
    double phase = 0.0;
    bool zero = false;
    for (int j = 0; j < d; ++j) {
      if (occ[std::size_t(j)] == 0) continue;
      if (spec.probabilities[std::size_t(j)] == 0.0) {
        zero = true;
        break;
      }
      log_p += occ[std::size_t(j)] * std::log(spec.probabilities[std::size_t(j)]);
      if (j > 0) phase += occ[std::size_t(j)] * phases[std::size_t(j - 1)];
    }
    s.amplitudes[i] = zero ? Complex(0.0) : std::polar(std::exp(0.5 * log_p), phase);
  }
  return s;
}

}  // namespace superrep
