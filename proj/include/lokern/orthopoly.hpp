#pragma once

// One-dimensional orthogonal polynomial primitives: Jacobi and Gegenbauer
// polynomials, their norms, normalized reproducing kernels at t = 1, and
// Gauss-Jacobi quadrature.

#include <span>
#include <vector>

namespace lokern {

/// Exponents of the Jacobi weight (1-t)^alpha (1+t)^beta on [-1, 1].
struct JacobiParams {
  double alpha = 0.0;
  double beta = 0.0;

  /// Throws ParameterError unless alpha > -1 and beta > -1.
  void validate() const;
};

/// Gauss rule on [-1, 1]. Weights sum to the (unnormalized) Jacobi mass.
struct QuadratureRule1D {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // all positive
  JacobiParams params;
  int exact_degree = -1;  // 2m - 1 for an m-node rule

  std::size_t size() const { return nodes.size(); }
};

/// P_n^{(alpha,beta)}(t) by the classical three-term recurrence.
double evalJacobi(int n, JacobiParams p, double t);

/// Writes P_0(t), ..., P_n(t) into out (size n + 1).
void evalJacobiAll(int n, JacobiParams p, double t, std::span<double> out);

/// h_n = int_{-1}^1 [P_n]^2 (1-t)^alpha (1+t)^beta dt, via log-Gamma.
double jacobiNorm(int n, JacobiParams p);

/// Total mass 2^{a+b+1} B(a+1, b+1) of the Jacobi weight (equals h_0).
double jacobiMass(JacobiParams p);

/// Z_n^{(a,b)}(t) = P_n(1) P_n(t) / h_n.
double evalZJacobi(int n, JacobiParams p, double t);

/// Z_n^lambda(t) = (n + lambda)/lambda C_n^lambda(t); lambda = 0 is the
/// Chebyshev limit 2 T_n(t) for n >= 1 (and 1 for n = 0).
double evalZGegenbauer(int n, double lambda, double t);

/// m-node Gauss-Jacobi rule. Nodes by Newton iteration on the recurrence,
/// with a bisection fallback on sign brackets.
QuadratureRule1D gaussJacobi(int m, JacobiParams p);

/// Gauss-Jacobi rule rescaled so that its weights sum to one.
QuadratureRule1D gaussJacobiProbability(int m, JacobiParams p);

/// Orthonormal Jacobi polynomials q_k with respect to the probability
/// measure proportional to (1-t)^alpha (1+t)^beta. q_0 = 1 and
/// q_k(1) q_k(t) is the normalized kernel Z_k with Z_0 = 1.
class OrthonormalJacobi {
 public:
  OrthonormalJacobi() = default;
  OrthonormalJacobi(JacobiParams p, int max_degree);

  int maxDegree() const { return max_degree_; }
  const JacobiParams& params() const { return params_; }

  /// Writes q_0(t), ..., q_N(t) into out (size >= N + 1).
  void evaluate(double t, std::span<double> out) const { evaluate(t, max_degree_, out); }
  void evaluate(double t, int degree, std::span<double> out) const;

  /// Homogeneous form r^k q_k(z / r) for k <= degree; needs alpha == beta.
  /// Computed without dividing by r, so it is a polynomial in (z, r^2).
  void evaluateHomogeneous(double z, double r2, int degree, std::span<double> out) const;

  /// sum_k c_k q_k(t).
  double series(std::span<const double> c, double t) const;

  double atOne(int k) const { return at_one_[k]; }
  double diag(int k) const { return a_[k]; }
  /// Off-diagonal entry between degrees k-1 and k (k >= 1).
  double offdiag(int k) const { return b_[k]; }

 private:
  JacobiParams params_;
  int max_degree_ = -1;
  std::vector<double> a_;  // size N + 1
  std::vector<double> b_;  // size N + 2, b_[0] = 0
  std::vector<double> at_one_;
};

/// Probability Gauss rule with k nodes for a discrete measure given by atoms
/// and weights (weights sum to one). Built with the discretized Stieltjes
/// procedure; the result integrates polynomials of degree <= 2k - 1 exactly
/// against the discrete measure. k is reduced if the measure has fewer
/// distinct atoms.
struct DiscreteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
DiscreteRule gaussFromDiscrete(std::span<const double> atoms, std::span<const double> weights, int k);

}  // namespace lokern
