#include "lokern/cutoff.hpp"

#include <algorithm>
#include <cmath>

#include "lokern/error.hpp"

namespace lokern {

namespace {

double bump(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

void checkNonnegative(double t) {
  if (!(t >= 0.0)) throw ParameterError("cut-off argument must be nonnegative");
}

}  // namespace

double evalBase(double t) {
  checkNonnegative(t);
  if (t <= 1.0) return 1.0;
  if (t >= 2.0) return 0.0;
  const double left = bump(2.0 - t);
  const double right = bump(t - 1.0);
  return left / (left + right);
}

double evalFrameGen(double t) {
  checkNonnegative(t);
  const double a = evalBase(t);
  const double a2 = evalBase(2.0 * t);
  return std::sqrt(std::max(0.0, a * a - a2 * a2));
}

std::vector<double> sampleMultipliers(int n, CutoffKind kind) {
  if (n < 1) throw ParameterError("multiplier scale must be at least 1");
  return CutoffFunction(kind).samples(static_cast<double>(n), 2 * n);
}

std::vector<double> CutoffFunction::samples(double scale, int max_index) const {
  std::vector<double> out(max_index + 1);
  for (int k = 0; k <= max_index; ++k) out[k] = (*this)(k / scale);
  return out;
}

double frameGeneratorRho() {
  double rho = 1.0;
  const int steps = static_cast<int>(std::lround((5.0 / 3.0 - 3.0 / 5.0) / 1e-4));
  for (int i = 0; i <= steps; ++i) {
    const double t = 3.0 / 5.0 + (5.0 / 3.0 - 3.0 / 5.0) * i / steps;
    rho = std::min(rho, evalFrameGen(t));
  }
  return rho;
}

}  // namespace lokern
