#pragma once

// Reproducing kernels P_n from the addition formulas, partial sums K_n,
// localized kernels L_n, projections and the near-best operator.

#include <functional>
#include <span>
#include <vector>

#include "lokern/basis.hpp"
#include "lokern/cutoff.hpp"
#include "lokern/domain.hpp"
#include "lokern/orthopoly.hpp"

namespace lokern {

class KernelEvaluator {
 public:
  /// inner_scale multiplies the inner Gauss-Jacobi node counts (used to check
  /// that the inner rules are already exact).
  KernelEvaluator(const DomainSpec& spec, int max_degree, CutoffFunction cutoff = CutoffFunction(),
                  int inner_scale = 1);

  const DomainSpec& spec() const { return spec_; }
  int maxDegree() const { return N_; }
  const CutoffFunction& cutoff() const { return cutoff_; }
  /// Jacobi parameters of the kernel polynomial in the addition formula.
  const JacobiParams& kernelJacobi() const { return z_.params(); }

  /// P_n(w; p, q).
  double reproducingKernel(int n, const Point& p, const Point& q) const;
  /// sum_k c_k P_k(w; p, q) for k < c.size().
  double multiplierKernel(std::span<const double> c, const Point& p, const Point& q) const;
  /// Several multiplier sequences at once (shares the inner integration).
  std::vector<double> multiplierKernels(const std::vector<std::vector<double>>& cs, const Point& p,
                                        const Point& q) const;

 private:
  struct Axis {
    double scale;
    const DiscreteRule* rule;
  };
  std::vector<double> evaluateSeries(const std::vector<std::vector<double>>& cs, const Point& p,
                                     const Point& q) const;

  DomainSpec spec_;
  int N_;
  CutoffFunction cutoff_;
  OrthonormalJacobi z_;                 // kernel polynomial
  bool squared_argument_ = false;       // simplex and cone use 2 xi^2 - 1
  std::vector<DiscreteRule> inner_;     // per auxiliary axis
};

/// P_n(w; p, q). Throws CapacityError if n exceeds the evaluator's degree.
double reproducingKernel(const KernelEvaluator& ev, int n, const Point& p, const Point& q);
/// K_n(w; p, p) = sum_{k <= n} P_k(w; p, p).
double christoffelKernelDiag(const KernelEvaluator& ev, int n, const Point& p);
/// L_n(w; p, q) = sum_{j <= 2n} a(j/n) P_j(w; p, q).
double localizedKernel(const KernelEvaluator& ev, int n, const Point& p, const Point& q);

/// Kernel matrix sum_k c_k P_k(p_i, q_j) through the orthonormal basis.
Eigen::MatrixXd multiplierKernelMatrix(const OrthonormalBasis& basis, std::span<const double> c,
                                       const std::vector<Point>& ps, const std::vector<Point>& qs);

/// A function on a domain, either a polynomial of known degree or a black box
/// whose projections are computed with a quadrature of the given degree.
struct BandlimitedFunction {
  DomainSpec spec;
  int degree = 0;  // polynomial degree, or a bound that sets the quadrature degree
  std::function<double(const Point&)> f;
  bool exact_polynomial = true;

  double operator()(const Point& p) const { return f(p); }
};

/// Coefficients of f in the orthonormal basis of degree <= n, via a reference
/// quadrature of degree n + f.degree.
Eigen::VectorXd basisCoefficients(const OrthonormalBasis& basis, int n, const BandlimitedFunction& f);

/// proj_n f at the given points.
std::vector<double> project(const KernelEvaluator& ev, int n, const BandlimitedFunction& f,
                            const std::vector<Point>& points);

/// (L_n * f)(x) at the given points.
std::vector<double> nearBestApply(const KernelEvaluator& ev, int n, const BandlimitedFunction& f,
                                  const std::vector<Point>& points);

/// Random polynomial of degree n: random combination of the orthonormal basis.
BandlimitedFunction randomPolynomial(const DomainSpec& spec, int n, Rng& rng);

struct AssertionReport {
  std::string domain;
  int n = 0;
  double kappa = 0.0;
  double A1 = 0.0;
  double A2 = 0.0;
  double Jn = 0.0;
  int pairs = 0;
  int clamped_pairs = 0;
};

struct AssertionOptions {
  int base_points = 64;
  int far_points = 256;
  double delta = 0.25;
  std::uint64_t seed = 1;
  int jn_points = 8;           // x points for the J_n integral
  double jn_kappa = -1.0;      // < 0: use kappa
};

/// Pointwise and Lipschitz-type localization constants over sampled pairs, and the decay integral J_n.
AssertionReport assertionSuite(const KernelEvaluator& ev, int n, double kappa, const AssertionOptions& opt = {});

/// J_n(x) = int (W(y))^{-1} (1 + n d(x,y))^{-kappa} dmu(y) for W the surrogate at radius 1/n.
double assertion3Integral(const DomainSpec& spec, int n, double kappa, const Point& x,
                          const ReferenceQuadrature& quad);

/// Largest exponent alpha with W(y)/W(x) <= (1 + n d(x,y))^alpha over a random sweep.
double doublingExponent(const DomainSpec& spec, std::uint64_t seed = 7);

}  // namespace lokern
