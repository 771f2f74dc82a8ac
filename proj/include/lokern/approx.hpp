#pragma once

// Translation operator, even-order differences, the L^2 modulus of smoothness,
// best L^2 approximation and near-best convergence tables.

#include <Eigen/Dense>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "lokern/basis.hpp"
#include "lokern/kernels.hpp"

namespace lokern {

/// m_n = P_n(cos theta) / P_n(1) for the kernel Jacobi parameters of the domain.
struct MultiplierSequence {
  DomainSpec spec = DomainSpec::interval(0.0, 0.0);
  double theta = 0.0;
  JacobiParams params;
  std::vector<double> m;

  int maxDegree() const { return static_cast<int>(m.size()) - 1; }
  double operator[](int n) const { return m[n]; }
};

/// Throws ParameterError unless theta is in (0, pi) and, on the interval,
/// alpha >= beta and alpha >= -1/2 (so that |m_n| <= 1).
MultiplierSequence multiplierSequence(const KernelEvaluator& ev, double theta, int max_degree);

/// Basis coefficients of f up to its degree (polynomials) or up to the
/// evaluator's degree (other functions). CapacityError if a polynomial is too long.
Eigen::VectorXd expansionCoefficients(const KernelEvaluator& ev, const OrthonormalBasis& basis,
                                      const BandlimitedFunction& f);

/// Polynomial with the given coefficients in the basis.
BandlimitedFunction fromCoefficients(std::shared_ptr<const OrthonormalBasis> basis, Eigen::VectorXd coef);

/// Scales each degree block of coef by c[n].
Eigen::VectorXd applyMultiplier(const OrthonormalBasis& basis, const std::vector<double>& c,
                                const Eigen::VectorXd& coef);

/// S_theta f = sum_n m_n proj_n f.
BandlimitedFunction translate(const KernelEvaluator& ev, double theta, const BandlimitedFunction& f);

/// Multipliers of sum_{k <= r/2} (-1)^k binom(r/2, k) S_theta^k.
std::vector<double> differenceMultipliers(const MultiplierSequence& ms, int r);

/// Delta_theta^r f for positive even r.
BandlimitedFunction differenceOp(const KernelEvaluator& ev, double theta, int r, const BandlimitedFunction& f);

/// sup over a 32-point geometric grid of theta in (0, t] of ||Delta_theta^r f||_2.
/// Only p = 2 is supported.
double modulus(const KernelEvaluator& ev, double t, int r, const BandlimitedFunction& f, int p = 2);

/// Discrete L^2 norm through a reference quadrature of the given degree.
double l2Norm(const DomainSpec& spec, const BandlimitedFunction& f, int quad_degree);

/// E_n(f)_2 = ||f - sum_{k <= n} proj_k f||_2.
double bestApproxL2(const KernelEvaluator& ev, int n, const BandlimitedFunction& f);

/// ||f - L_n * f||_2, measured on the same quadrature as bestApproxL2.
double nearBestErrorL2(const KernelEvaluator& ev, int n, const BandlimitedFunction& f);

struct KinkFunction {
  std::string name;
  BandlimitedFunction f;
};

/// Five fixed non-smooth test functions on the domain; degree is the
/// quadrature resolution used for their projections.
std::vector<KinkFunction> kinkBattery(const DomainSpec& spec, int resolution = 256);

struct ConvergenceRow {
  std::string function;
  int n = 0;
  double best = 0.0;
  double near_best = 0.0;
  double ratio = 0.0;
};

std::vector<ConvergenceRow> convergenceTable(const KernelEvaluator& ev, const std::vector<KinkFunction>& battery,
                                             const std::vector<int>& degrees);

void writeConvergenceCsv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

}  // namespace lokern
