#pragma once

// Positive cubature rules on maximal separated sets and the Christoffel function.

#include <iosfwd>
#include <string>
#include <vector>

#include "lokern/domain.hpp"
#include "lokern/kernels.hpp"

namespace lokern {

enum class CubatureMethod {
  Auto,         // least-norm correction, then shifted NNLS when that is not positive
  ShiftedNnls,  // lambda = theta * prior + NNLS correction, theta in {1/2, 1/4, 1/8, 0}
  LeastNorm,    // minimal relative change of the cell prior (conjugate gradients)
};

struct CubatureOptions {
  CubatureMethod method = CubatureMethod::Auto;
  int max_halvings = 4;       // retries at delta/2, delta/4, ...
  int auto_nnls_limit = 700;  // Auto falls back to NNLS only while dim Pi_n is at most this
};

struct CubatureRule {
  DomainSpec spec = DomainSpec::interval(0.0, 0.0);
  int degree = 0;
  double delta = 0.0;
  SeparatedSet nodes;
  std::vector<double> weights;
  double residual = 0.0;  // max moment error over the orthonormal basis
  std::string method;
  int halvings = 0;

  std::size_t size() const { return weights.size(); }
};

/// Weights on a maximal (delta/n)-separated set. Throws InfeasibleError when
/// the residual exceeds 1e-8 at this delta or the set is too small.
CubatureRule computeCubature(const KernelEvaluator& ev, int n, double delta, const CubatureOptions& opt = {});

/// computeCubature, halving delta after each InfeasibleError.
CubatureRule computeCubatureWithRetry(const KernelEvaluator& ev, int n, double delta,
                                      const CubatureOptions& opt = {});

/// Weights of degree n on a prescribed node set (epsilon is only recorded).
CubatureRule cubatureOnNodes(const DomainSpec& spec, int n, const SeparatedSet& nodes,
                             const CubatureOptions& opt = {});

/// Max moment error of a rule over the orthonormal basis of degree <= n.
double cubatureResidual(const DomainSpec& spec, int n, const std::vector<Point>& nodes,
                        const std::vector<double>& weights);

struct WeightRatioReport {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double radius = 0.0;
};

/// Range of lambda_z / surrogate(z, delta/n); radius capped at pi (n = 0 too).
WeightRatioReport weightLowerBoundCheck(const CubatureRule& rule);

/// lambda_n(w; p) = 1 / K_n(w; p, p).
double christoffel(const KernelEvaluator& ev, int n, const Point& p);

/// Variational upper bound int g^2 with g = [L_m(p,.)/L_m(p,p)]^2, m = floor(n/4).
double christoffelUpperCertificate(const KernelEvaluator& ev, int n, const Point& p);

/// Values of the certificate polynomial g at the given points.
std::vector<double> certificatePolynomial(const KernelEvaluator& ev, int n, const Point& p,
                                          const std::vector<Point>& ys);

struct ChristoffelSample {
  Point point;
  double lambda = 0.0;
  double surrogate = 0.0;
  double ratio = 0.0;
};

struct ChristoffelProfile {
  DomainSpec spec = DomainSpec::interval(0.0, 0.0);
  int degree = 0;
  std::vector<ChristoffelSample> samples;
};

ChristoffelProfile christoffelProfile(const KernelEvaluator& ev, int n, const std::vector<Point>& points);

/// CSV: coordinates then lambda.
void writeCubatureCsv(std::ostream& os, const CubatureRule& rule);
/// CSV: coordinates then lambda_n, surrogate, ratio.
void writeChristoffelCsv(std::ostream& os, const ChristoffelProfile& profile);

}  // namespace lokern
