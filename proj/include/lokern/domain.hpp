#pragma once

// The five concrete spaces of homogeneous type (interval, sphere, ball,
// simplex, conic surface): metric, weight, measure normalization, the
// closed-form ball-measure surrogate, reference quadrature and separated sets.
//
// All weighted measures are normalized to unit mass.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

namespace lokern {

enum class DomainKind { Interval, Sphere, Ball, Simplex, ConicSurface };

std::string kindName(DomainKind kind);
DomainKind domainKindFromString(const std::string& name);

/// Ambient coordinates. Interval: (t). Sphere S^{d-1}: d coordinates.
/// Ball, simplex: d coordinates. Conic surface: (x_1, ..., x_d, t) with |x| = t.
using Point = std::vector<double>;

class DomainSpec {
 public:
  /// Jacobi weight (1-t)^alpha (1+t)^beta. Localizability needs alpha, beta >= -1/2;
  /// allow_nonlocalizable relaxes this to > -1.
  static DomainSpec interval(double alpha, double beta, bool allow_nonlocalizable = false);
  /// Surface measure on S^{d-1} in R^d, d >= 2.
  static DomainSpec sphere(int d);
  /// (1 - |x|^2)^{mu - 1/2} on the unit ball of R^d, mu >= 0.
  static DomainSpec ball(int d, double mu);
  /// x_1^{g_1} ... x_d^{g_d} (1 - |x|)^{g_{d+1}} on the simplex of R^d, g_i >= 0.
  static DomainSpec simplex(int d, std::vector<double> gamma);
  /// t^{-1} (1 - t)^gamma on the cone surface {(x, t) : |x| = t <= 1} of R^{d+1}.
  static DomainSpec conicSurface(int d, double gamma);

  DomainKind kind() const { return kind_; }
  int dim() const { return dim_; }
  double alpha() const { return params_.at(0); }
  double beta() const { return params_.at(1); }
  double mu() const { return params_.at(0); }
  double gamma() const { return params_.at(0); }
  const std::vector<double>& params() const { return params_; }

  /// Number of stored coordinates of a point.
  int coordCount() const;
  /// Short identifier such as "ball_d2_mu0.5".
  std::string name() const;
  /// Total weighted mass before normalization (w.r.t. Lebesgue measure for
  /// interval/ball/simplex, unnormalized surface measure for sphere/cone).
  double mass() const { return mass_; }

  /// Membership residual of a point (0 when on the domain).
  double membershipResidual(const Point& p) const;
  /// Throws MembershipError if the residual exceeds 1e-12.
  void checkMember(const Point& p) const;

 private:
  DomainSpec(DomainKind kind, int dim, std::vector<double> params);

  DomainKind kind_;
  int dim_;
  std::vector<double> params_;
  double mass_ = 1.0;
};

/// Argument of the arccos in the intrinsic distance, clamped to [-1, 1].
/// Monotone decreasing in the distance; no membership check.
double similarity(const DomainSpec& spec, const Point& p, const Point& q);

/// Intrinsic (arccos-form) distance.
double distance(const DomainSpec& spec, const Point& p, const Point& q);

/// Unit-mass normalized weight density. Throws SingularityError on the
/// singular set of the weight.
double weightDensity(const DomainSpec& spec, const Point& p);

/// Closed-form surrogate for w(B(p, r)) with n replaced by 1/r, with the
/// constant fixed so it matches the true measure of small interior balls.
double ballMeasureSurrogate(const DomainSpec& spec, const Point& p, double r);

/// Weighted measure of B(p, r) by quadrature (ground truth for the surrogate).
double ballMeasureNumeric(const DomainSpec& spec, const Point& p, double r);

/// dim V_n: orthogonal polynomials of exact degree n.
std::int64_t dimensionVn(const DomainSpec& spec, int n);
/// dim Pi_n restricted to the domain.
std::int64_t dimensionPin(const DomainSpec& spec, int n);

struct ReferenceQuadrature {
  std::vector<Point> nodes;
  std::vector<double> weights;  // positive, sum to 1
  int exact_degree = 0;

  std::size_t size() const { return nodes.size(); }
};

/// Product Gauss rule exact for polynomials of degree <= degree against the
/// normalized weighted measure.
ReferenceQuadrature referenceQuadrature(const DomainSpec& spec, int degree);

/// Structured candidate grid whose covering radius is about mesh.
std::vector<Point> candidateGrid(const DomainSpec& spec, double mesh);

struct SeparatedSet {
  std::vector<Point> points;
  double epsilon = 0.0;
  int maximality_bound = 0;  // max_x #{z : d(x, z) < epsilon} over the grid
};

/// Greedy farthest-point selection over a candidate grid of mesh epsilon/4.
/// Deterministic; the first point is the lexicographically smallest candidate
/// and ties are broken lexicographically.
SeparatedSet maximalSeparatedSet(const DomainSpec& spec, double epsilon);

/// Max over grid points of the number of epsilon-balls containing them.
int coveringMultiplicity(const DomainSpec& spec, const std::vector<Point>& centers, double epsilon,
                         const std::vector<Point>& grid);

/// Deterministic 64-bit generator with explicit uniform/normal draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double normal();

 private:
  std::mt19937_64 engine_;
};

/// Random points distributed uniformly with respect to the intrinsic metric
/// (pulled back from the sphere for interval, ball, simplex and cone).
std::vector<Point> samplePoints(const DomainSpec& spec, int count, Rng& rng);

/// Points within about 1/n^2 (Euclidean) of the boundary or singular set.
std::vector<Point> boundaryAdjacentPoints(const DomainSpec& spec, int n);

/// Point at intrinsic distance approximately s from p, moved in a fixed
/// direction indexed by direction (clamped to stay on the domain).
Point offsetPoint(const DomainSpec& spec, const Point& p, double s, int direction);

/// CSV export: header "c0,...,c{k-1},weight" then one row per node.
void writePointsCsv(std::ostream& os, const std::vector<Point>& points, const std::vector<double>& weights,
                    const std::string& weight_column = "weight");

}  // namespace lokern
