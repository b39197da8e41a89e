#pragma once

#include <Eigen/Dense>

namespace fdcran {

// zero-forcing precoder for a K x T combined channel (K users, T antennas,
// K <= T): columns of the pseudo-inverse normalized to unit power, intended
// inner products rotated real positive. Throws on rank deficiency.
Eigen::MatrixXcd zf_precoder(const Eigen::MatrixXcd& G);

// zero-forcing receive filter for an R x K combined channel (R antennas,
// K users, K <= R): rows normalized, same phase convention.
Eigen::MatrixXcd zf_decoder(const Eigen::MatrixXcd& H);

// |a . b|^2 with a conformability check
double effective_gain(const Eigen::RowVectorXcd& a, const Eigen::VectorXcd& b);

}  // namespace fdcran
