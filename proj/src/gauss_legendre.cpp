#include "slepian/gauss_legendre.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "slepian/errors.hpp"

namespace slepian {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw InvalidInput("Gauss-Legendre order must be positive");
  GaussLegendreRule rule;
  if (order == 1) {
    rule.nodes = Eigen::VectorXd::Zero(1);
    rule.weights = Eigen::VectorXd::Constant(1, 2.0);
    return rule;
  }

  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double beta = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  rule.nodes = solver.eigenvalues();
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double& x = rule.nodes[i];
    const auto [p, dp] = legendre(order, x);
    x -= p / dp;
    const double dpx = legendre(order, x).second;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dpx * dpx);
  }
  return rule;
}

void append_composite(const GaussLegendreRule& rule, double lo, double hi, int panels,
                      Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  const Eigen::Index old = nodes.size();
  const Eigen::Index q = rule.nodes.size();
  nodes.conservativeResize(old + panels * q);
  weights.conservativeResize(old + panels * q);
  const double width = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * width;
    nodes.segment(old + p * q, q) = (mid + 0.5 * width * rule.nodes.array()).matrix();
    weights.segment(old + p * q, q) = 0.5 * width * rule.weights;
  }
}

}  // namespace slepian
