#pragma once

#include <complex>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace superrep {

using Complex = std::complex<double>;

/// Pure state of the symmetric subspace of `copies` qubits, expanded over the
/// Dicke basis |N,n>, n = 0..N (n = number of excitations).
struct SymmetricState {
  int copies = 0;
  std::vector<Complex> amplitudes;  // size copies + 1

  double norm_sq() const;
  void normalize();
};

Complex overlap(const SymmetricState& a, const SymmetricState& b);
double state_fidelity(const SymmetricState& a, const SymmetricState& b);

nlohmann::json to_json(const SymmetricState& state);
SymmetricState symmetric_state_from_json(const nlohmann::json& j);

/// N copies of the equatorial qubit state (|0> + e^{-it}|1>)/sqrt(2):
/// amplitude_n = 2^{-N/2} sqrt(C(N,n)) e^{-int}. Stable for N in the
/// thousands (amplitudes assembled in log domain).
SymmetricState equatorial_expand(int copies, double t);

/// Parameters of a clock-state family e^{-itH}|psi>: level populations of
/// |psi| and the energy eigenvalues of H.
struct ClockSpec {
  int level_count = 0;
  std::vector<double> probabilities;  // p_j >= 0, sums to 1
  std::vector<double> energies;       // one eigenvalue per level

  ClockSpec() = default;
  ClockSpec(int levels, std::vector<double> p, std::vector<double> e);

  /// equatorial qubit family: two levels, uniform populations
  static ClockSpec qubit_equatorial();

  /// smallest nonzero population
  double p_min() const;
};

/// State over type classes (occupation vectors) of N copies of a d-level
/// system; the basis is ordered lexicographically by occupation vector and
/// that order is the serialization contract.
struct TypeClassState {
  int level_count = 0;
  int copies = 0;
  std::vector<std::vector<int>> occupations;  // lexicographic
  std::vector<Complex> amplitudes;

  double norm_sq() const;
  void normalize();
  int index_of(std::span<const int> occupation) const;  // -1 if absent
};

Complex overlap(const TypeClassState& a, const TypeClassState& b);
double state_fidelity(const TypeClassState& a, const TypeClassState& b);

/// All occupation vectors of d levels summing to N, lexicographic.
std::vector<std::vector<int>> enumerate_occupations(int level_count, int copies);

/// N copies of the multiphase state sqrt(p_0)|0> + sum_j sqrt(p_j) e^{i
/// theta_j}|j>. `phases` has length d-1 (level 0 carries no phase).
TypeClassState multiphase_expand(const ClockSpec& spec, int copies,
                                 std::span<const double> phases);

}  // namespace superrep
