#include "superrep/random.hpp"

namespace superrep {

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t worker) {
  // splitmix64 step applied to seed + worker * golden gamma
  std::uint64_t z = seed + (worker + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Eigen::MatrixXcd haar_unitary(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(r, c) = std::complex<double>(re, im);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < dim; ++c) {
    q.col(c) *= r(c, c) / std::abs(r(c, c));
  }
  return q;
}

Eigen::VectorXcd haar_state(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(i) = std::complex<double>(re, im);
  }
  v.normalize();
  return v;
}

}  // namespace superrep
