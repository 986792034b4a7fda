#pragma once

#include <cstdint>
#include <vector>

#include "superrep/numerics.hpp"

namespace superrep {

/// One total-angular-momentum sector of K qubits: H^{otimes K} decomposes as
/// a direct sum of R_j (x) M_jK with dim R_j = 2j+1 and multiplicity
/// m_jK = C(K, K/2-j) - C(K, K/2-j-1). j is stored doubled to stay integral.
struct SchurSector {
  int two_j = 0;
  std::int64_t rep_dim = 0;   // d_j = 2j + 1
  std::int64_t mult_dim = 0;  // m_jK
  int qubit_count = 0;

  double j() const { return 0.5 * two_j; }
};

/// Sectors of K qubits, j descending from K/2. Exact integer arithmetic,
/// valid for K <= 60.
std::vector<SchurSector> qubit_sectors(int qubit_count);

/// ln sum_{j <= N/2} d_j m_jM over the sectors of M qubits.
LogReal log_projector_trace(int n_in, int m_out);

/// Tr[P_N] / 2^M: the Haar-average overlap of an M-qubit state with the
/// j <= N/2 sectors. Log-domain, good for M in the thousands.
double projector_trace_fraction(int n_in, int m_out);

/// Gate superreplication fidelity bound
/// 1 - 2 (M+1)^{d(d-1)/2} exp(-N^2 / 2M), clamped to [0,1].
double gate_fidelity_bound(int d, int n_in, int m_out);

/// floor(N^2 / (2 (d^2 - d + k) ln N)): the copy count for which the bound
/// above vanishes as 1/N^k up to log factors.
std::int64_t choose_M_for_error(int d, double k, int n_in);

}  // namespace superrep
