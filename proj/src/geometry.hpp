#pragma once

// Small shared helpers for the domain code.

#include <cmath>
#include <functional>
#include <numbers>

namespace lokern::detail {

inline double logBeta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

/// Surface area of the unit sphere S^{D-1} in R^D.
inline double sphereArea(int D) { return 2.0 * std::pow(std::numbers::pi, 0.5 * D) / std::tgamma(0.5 * D); }

/// Volume of the unit ball in R^d.
inline double ballVolume(int d) { return std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0); }

inline double dot(const double* a, const double* b, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

inline double clampUnit(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

/// int_0^psi sin^n.
double sinPowerIntegral(int n, double psi);

/// Normalized surface measure of a cap of angular radius psi on S^{D-1} in R^D.
double capFraction(int D, double psi);

/// Composite Gauss-Legendre integral of f over [a, b].
double integratePanels(const std::function<double(double)>& f, double a, double b, int panels, int order = 16);

}  // namespace lokern::detail

#include <vector>

#include "lokern/domain.hpp"

namespace lokern::detail {

/// Points stored in a form where similarity is cheap: a lifted unit vector
/// (similarity = inner product) for all domains except the cone, which keeps
/// (x, t, sqrt(1 - t)).
class MetricCache {
 public:
  MetricCache(const DomainSpec& spec, const std::vector<Point>& points);

  std::size_t size() const { return count_; }
  int stride() const { return stride_; }
  const double* row(std::size_t i) const { return data_.data() + i * stride_; }
  /// Lifted/packed form of an arbitrary point.
  std::vector<double> pack(const Point& p) const;
  double similarity(const double* a, const double* b) const;
  double similarity(std::size_t i, std::size_t j) const { return similarity(row(i), row(j)); }

 private:
  DomainSpec spec_;
  bool conic_;
  int stride_;
  std::size_t count_;
  std::vector<double> data_;
};

}  // namespace lokern::detail
