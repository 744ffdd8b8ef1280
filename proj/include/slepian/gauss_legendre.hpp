#pragma once

#include <Eigen/Dense>

namespace slepian {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
/// Legendre recurrence, weights 2 v_0^2 from its normalized eigenvectors.
/// Nodes are polished by a Newton step on P_n.
GaussLegendreRule gauss_legendre(int order);

/// Composite rule: [lo, hi] split into `panels` equal panels, each carrying
/// `rule`. Appends to `nodes` / `weights`.
void append_composite(const GaussLegendreRule& rule, double lo, double hi, int panels,
                      Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

}  // namespace slepian
