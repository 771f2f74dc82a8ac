#pragma once

// Explicit orthonormal polynomial bases for each domain, grouped by degree.
// Used for projections, cubature moment matrices and frame synthesis; the
// reproducing kernels built from them agree with the addition formulas.

#include <Eigen/Dense>
#include <memory>
#include <span>
#include <vector>

#include "lokern/domain.hpp"
#include "lokern/orthopoly.hpp"

namespace lokern {

/// Homogeneous harmonic polynomials on R^D of degree <= M, orthonormal on
/// S^{D-1} with respect to the normalized surface measure.
class SolidHarmonics {
 public:
  SolidHarmonics(int D, int max_degree);

  int ambient() const { return D_; }
  int maxDegree() const { return M_; }
  /// Number of harmonics of degree m.
  int count(int m) const { return counts_[m]; }
  /// Offset of the degree-m block in the output of evaluate().
  int offset(int m) const { return offsets_[m]; }
  int size() const { return offsets_[M_ + 1]; }

  /// All harmonics of degree <= degree at x (any point of R^D).
  void evaluate(const double* x, int degree, std::span<double> out) const;

 private:
  int D_, M_;
  std::vector<int> counts_, offsets_;
  std::unique_ptr<SolidHarmonics> sub_;
  std::vector<OrthonormalJacobi> radial_;  // per sub-degree k, params (k + (D-3)/2, same)
  std::vector<double> scale_;              // per k
};

class OrthonormalBasis {
 public:
  OrthonormalBasis(const DomainSpec& spec, int max_degree);
  ~OrthonormalBasis();
  OrthonormalBasis(OrthonormalBasis&&) noexcept;
  OrthonormalBasis& operator=(OrthonormalBasis&&) noexcept;

  const DomainSpec& spec() const { return spec_; }
  int maxDegree() const { return N_; }
  /// dim Pi_N.
  int size() const { return offsets_[N_ + 1]; }
  /// Offset of the degree-n block; blocks are contiguous and ordered by degree.
  int blockStart(int n) const { return offsets_[n]; }
  int blockSize(int n) const { return offsets_[n + 1] - offsets_[n]; }

  /// Basis functions of degree <= degree at p, written to out[0, blockStart(degree+1)).
  void evaluate(const Point& p, int degree, std::span<double> out) const;
  void evaluate(const Point& p, std::span<double> out) const { evaluate(p, N_, out); }

  /// Rows: points; columns: basis functions of degree <= degree.
  Eigen::MatrixXd matrix(const std::vector<Point>& points, int degree) const;
  Eigen::MatrixXd matrix(const std::vector<Point>& points) const { return matrix(points, N_); }

  /// matrix(points, degree)^T v without storing the matrix.
  Eigen::VectorXd transposeApply(const std::vector<Point>& points, const Eigen::VectorXd& v, int degree) const;
  /// Values of the expansion with the given coefficients (length dim Pi_n for some n).
  Eigen::VectorXd expand(const std::vector<Point>& points, const Eigen::VectorXd& coef) const;
  /// n with dim Pi_n == size; ConsistencyError otherwise.
  int degreeOfSize(int size) const;

 private:
  struct SimplexLevel;

  DomainSpec spec_;
  int N_;
  std::vector<int> offsets_;
  OrthonormalJacobi interval_;
  std::unique_ptr<SolidHarmonics> harmonics_;
  std::vector<OrthonormalJacobi> radial_;  // ball: per (m), conic: per m
  std::vector<double> radial_scale_;
  std::unique_ptr<SimplexLevel> simplex_;
};

}  // namespace lokern
