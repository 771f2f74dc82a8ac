#pragma once

#include <Eigen/Dense>

namespace lokern {

struct NnlsResult {
  Eigen::VectorXd x;
  double residual = 0.0;  // ||A x - b||_2
  int iterations = 0;
  bool converged = false;
};

/// Lawson-Hanson active-set solver for min ||A x - b||_2 subject to x >= 0.
NnlsResult solveNnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, int max_iterations = 0, double tol = 0.0);

}  // namespace lokern
