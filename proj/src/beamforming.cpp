#include "fdcran/beamforming.hpp"

#include <stdexcept>

namespace fdcran {

namespace {

// pseudo-inverse through a rank-revealing decomposition; the plain
// normal-equations formula is kept as a test oracle only, it squares the
// condition number
Eigen::MatrixXcd pinv_rank_revealing(const Eigen::MatrixXcd& m, int required_rank) {
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(m);
  if (cod.rank() < required_rank)
    throw std::runtime_error("zero-forcing: combined channel is rank deficient");
  return cod.pseudoInverse();
}

}  // namespace

Eigen::MatrixXcd zf_precoder(const Eigen::MatrixXcd& G) {
  const int k = static_cast<int>(G.rows());
  const int t = static_cast<int>(G.cols());
  if (k == 0 || t == 0) throw std::invalid_argument("zf_precoder: empty channel");
  if (k > t) throw std::invalid_argument("zf_precoder: more users than antennas");
  Eigen::MatrixXcd v = pinv_rank_revealing(G, k);  // t x k
  for (int j = 0; j < k; ++j) {
    const double n = v.col(j).norm();
    v.col(j) /= n;
    const std::complex<double> d = G.row(j) * v.col(j);
    const double m = std::abs(d);
    if (m > 0.0) v.col(j) *= std::conj(d) / m;  // intended product real positive
  }
  return v;
}

Eigen::MatrixXcd zf_decoder(const Eigen::MatrixXcd& H) {
  const int r = static_cast<int>(H.rows());
  const int k = static_cast<int>(H.cols());
  if (r == 0 || k == 0) throw std::invalid_argument("zf_decoder: empty channel");
  if (k > r) throw std::invalid_argument("zf_decoder: more users than antennas");
  Eigen::MatrixXcd w = pinv_rank_revealing(H, k);  // k x r
  for (int i = 0; i < k; ++i) {
    const double n = w.row(i).norm();
    w.row(i) /= n;
    const std::complex<double> d = w.row(i) * H.col(i);
    const double m = std::abs(d);
    if (m > 0.0) w.row(i) *= std::conj(d) / m;
  }
  return w;
}

double effective_gain(const Eigen::RowVectorXcd& a, const Eigen::VectorXcd& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("effective_gain: shape mismatch");
  const std::complex<double> d = a * b;
  return std::norm(d);
}

}  // namespace fdcran
