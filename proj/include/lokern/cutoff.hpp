#pragma once

#include <vector>

namespace lokern {

enum class CutoffKind { Base, FrameGenerator };

/// Smooth cut-off: equal to 1 on [0, 1], 0 on [2, inf), with the transition
/// h(2 - t) / (h(2 - t) + h(t - 1)), h(s) = exp(-1/s).
double evalBase(double t);

/// Frame generator b(t) = sqrt(max(0, a(t)^2 - a(2t)^2)). Supported in
/// [1/2, 2], with b(t)^2 + b(2t)^2 = 1 on [1/2, 1].
double evalFrameGen(double t);

/// (value(j / n))_{j = 0..2n}.
std::vector<double> sampleMultipliers(int n, CutoffKind kind);

/// Minimum of the frame generator on a 1e-4 grid of [3/5, 5/3].
double frameGeneratorRho();

class CutoffFunction {
 public:
  explicit CutoffFunction(CutoffKind kind = CutoffKind::Base) : kind_(kind) {}

  CutoffKind kind() const { return kind_; }
  double operator()(double t) const { return kind_ == CutoffKind::Base ? evalBase(t) : evalFrameGen(t); }

  /// Multipliers value(k / scale) for k = 0..max_index.
  std::vector<double> samples(double scale, int max_index) const;

 private:
  CutoffKind kind_;
};

}  // namespace lokern
