#pragma once

// Needlet-type tight frames built from the frame generator and per-level
// positive cubature rules.

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "lokern/cubature.hpp"
#include "lokern/kernels.hpp"

namespace lokern {

struct FrameLevel {
  int level = 0;
  int degree = 0;         // cubature exactness, 2^{j+1} - 2 (0 for j = 0)
  double delta = 0.0;     // separation parameter after retries, epsilon_j = delta / 2^j
  CubatureRule rule;
};

class FrameSystem {
 public:
  FrameSystem(const KernelEvaluator& ev, int max_level, double delta, std::vector<FrameLevel> levels);

  const DomainSpec& spec() const { return ev_.spec(); }
  const KernelEvaluator& evaluator() const { return ev_; }
  const OrthonormalBasis& basis() const { return *basis_; }
  int maxLevel() const { return J_; }
  double delta() const { return delta_; }
  double rho() const { return rho_; }
  const std::vector<FrameLevel>& levels() const { return levels_; }
  const FrameLevel& level(int j) const { return levels_.at(j); }

  /// b(k / 2^{j-1}) for k = 0..2^j - 1; level 0 is the constant multiplier.
  const std::vector<double>& multipliers(int j) const { return multipliers_.at(j); }
  /// Highest polynomial degree of F_j (0 for j = 0).
  int kernelDegree(int j) const { return j == 0 ? 0 : (1 << j) - 1; }

 private:
  KernelEvaluator ev_;
  std::shared_ptr<const OrthonormalBasis> basis_;
  int J_;
  double delta_;
  double rho_;
  std::vector<FrameLevel> levels_;
  std::vector<std::vector<double>> multipliers_;
};

struct FrameCoefficients {
  std::vector<std::vector<double>> levels;  // levels[j][z] = <f, psi_{z,j}>

  double squaredNorm() const;
  double levelSquaredNorm(int j) const;
};

/// Frame of levels 0..J with nodes maximal (delta / 2^j)-separated. Each level
/// halves its own delta up to four times when its cubature is infeasible.
FrameSystem buildFrame(const KernelEvaluator& ev, int max_level, double delta, const CubatureOptions& opt = {});

/// Range of lambda_{z,j} / surrogate(z, 2^-j) over the nodes of level j.
WeightRatioReport frameWeightRatios(const FrameSystem& fs, int j);

/// F_j(w; p, q) through the addition formula.
double levelKernel(const FrameSystem& fs, int j, const Point& p, const Point& q);

/// Frame element psi_{z,j} at the given points.
std::vector<double> frameElement(const FrameSystem& fs, int j, std::size_t z, const std::vector<Point>& points);

/// Coefficients <f, psi_{z,j}> = sqrt(lambda_{z,j}) (F_j * f)(z). Requires
/// deg f < 2^{J-1}.
FrameCoefficients analyze(const FrameSystem& fs, const BandlimitedFunction& f);

/// sum_{j,z} c_{z,j} psi_{z,j} at the given points.
std::vector<double> synthesize(const FrameSystem& fs, const FrameCoefficients& coeffs, const std::vector<Point>& points);

/// sum_{j <= J} F_j * F_j * f at the given points.
std::vector<double> calderon(const FrameSystem& fs, const BandlimitedFunction& f, const std::vector<Point>& points);

/// sup over far-field points of |psi_{z,j}(x)| sqrt(W(z, 2^-j)) (1 + 2^j d(x, z))^kappa.
double frameDecayCheck(const FrameSystem& fs, int j, std::size_t z, double kappa);

/// JSON summary: domain, levels, delta, rho, per-level node counts.
std::string frameDescriptionJson(const FrameSystem& fs);

}  // namespace lokern
