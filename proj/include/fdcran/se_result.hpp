#pragma once

#include <string>

namespace fdcran {

enum class SeMethod { analytic_cutset, analytic_infinite, mc };

struct SeResult {
  double dl_se = 0.0;  // nat/s/Hz per user, two-resource-block accounting
  double ul_se = 0.0;
  SeMethod method = SeMethod::analytic_cutset;
  double dl_error = 0.0;  // quadrature error estimate or MC standard error
  double ul_error = 0.0;
  // Analytic results average over all cluster realizations including empty
  // ones ("unconditional"); the simulator redraws empty reference clusters
  // ("conditional_nonempty"). empty_cluster_prob lets consumers convert.
  std::string se_basis = "unconditional";
  double empty_cluster_prob = 0.0;
};

}  // namespace fdcran
