#include "lokern/nnls.hpp"

#include <limits>
#include <vector>

#include "lokern/error.hpp"

namespace lokern {

namespace {

Eigen::VectorXd solvePassive(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const std::vector<int>& passive) {
  Eigen::MatrixXd Ap(A.rows(), passive.size());
  for (std::size_t k = 0; k < passive.size(); ++k) Ap.col(k) = A.col(passive[k]);
  return Ap.colPivHouseholderQr().solve(b);
}

}  // namespace

NnlsResult solveNnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, int max_iterations, double tol) {
  if (A.rows() != b.size()) throw ParameterError("NNLS dimensions disagree");
  const int n = static_cast<int>(A.cols());
  if (max_iterations <= 0) max_iterations = 3 * n + 10;
  if (tol <= 0.0) tol = 10.0 * std::numeric_limits<double>::epsilon() * A.cwiseAbs().maxCoeff() * std::max(A.rows(), A.cols());

  NnlsResult res;
  res.x = Eigen::VectorXd::Zero(n);
  std::vector<char> in_passive(n, 0);
  std::vector<int> passive;
  Eigen::VectorXd r = b;
  Eigen::VectorXd w = A.transpose() * r;

  while (res.iterations < max_iterations) {
    int j = -1;
    double best = tol;
    for (int i = 0; i < n; ++i)
      if (!in_passive[i] && w(i) > best) {
        best = w(i);
        j = i;
      }
    if (j < 0) {
      res.converged = true;
      break;
    }
    in_passive[j] = 1;
    passive.push_back(j);

    while (true) {
      ++res.iterations;
      const Eigen::VectorXd s = solvePassive(A, b, passive);
      bool feasible = true;
      for (Eigen::Index k = 0; k < s.size(); ++k)
        if (s(k) <= 0.0) feasible = false;
      if (feasible) {
        for (std::size_t k = 0; k < passive.size(); ++k) res.x(passive[k]) = s(k);
        break;
      }
      // Step toward s until the first passive variable hits zero.
      double alpha = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < passive.size(); ++k)
        if (s(k) <= 0.0) {
          const double xk = res.x(passive[k]);
          alpha = std::min(alpha, xk / (xk - s(k)));
        }
      for (std::size_t k = 0; k < passive.size(); ++k) {
        const int idx = passive[k];
        res.x(idx) += alpha * (s(k) - res.x(idx));
      }
      std::vector<int> kept;
      for (int idx : passive) {
        if (res.x(idx) <= tol) {
          res.x(idx) = 0.0;
          in_passive[idx] = 0;
        } else {
          kept.push_back(idx);
        }
      }
      passive.swap(kept);
      if (passive.empty() || res.iterations >= max_iterations) break;
    }
    r = b - A * res.x;
    w = A.transpose() * r;
  }
  res.residual = (A * res.x - b).norm();
  return res;
}

}  // namespace lokern
