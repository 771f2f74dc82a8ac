#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "geometry.hpp"
#include "lokern/domain.hpp"
#include "lokern/error.hpp"

namespace lokern {

using detail::clampUnit;
using detail::dot;

namespace {

constexpr double kPi = std::numbers::pi;

double sqrtPos(double x) { return x > 0.0 ? std::sqrt(x) : 0.0; }

double binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

void checkRadius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw ParameterError("ball radius must be positive");
}

}  // namespace

double similarity(const DomainSpec& spec, const Point& p, const Point& q) {
  const int d = spec.dim();
  switch (spec.kind()) {
    case DomainKind::Interval: return clampUnit(p[0] * q[0] + sqrtPos(1.0 - p[0] * p[0]) * sqrtPos(1.0 - q[0] * q[0]));
    case DomainKind::Sphere: return clampUnit(dot(p.data(), q.data(), d));
    case DomainKind::Ball: {
      const double xx = dot(p.data(), p.data(), d), yy = dot(q.data(), q.data(), d);
      return clampUnit(dot(p.data(), q.data(), d) + sqrtPos(1.0 - xx) * sqrtPos(1.0 - yy));
    }
    case DomainKind::Simplex: {
      double s = 0.0, sx = 0.0, sy = 0.0;
      for (int i = 0; i < d; ++i) {
        s += sqrtPos(p[i]) * sqrtPos(q[i]);
        sx += p[i];
        sy += q[i];
      }
      return clampUnit(s + sqrtPos(1.0 - sx) * sqrtPos(1.0 - sy));
    }
    case DomainKind::ConicSurface: {
      const double t = p[d], s = q[d];
      return clampUnit(sqrtPos(0.5 * (dot(p.data(), q.data(), d) + t * s)) + sqrtPos(1.0 - t) * sqrtPos(1.0 - s));
    }
  }
  return 1.0;
}

double distance(const DomainSpec& spec, const Point& p, const Point& q) {
  spec.checkMember(p);
  spec.checkMember(q);
  return std::acos(similarity(spec, p, q));
}

double weightDensity(const DomainSpec& spec, const Point& p) {
  spec.checkMember(p);
  const int d = spec.dim();
  auto power = [](double base, double e) {
    if (e == 0.0) return 1.0;
    if (base <= 0.0) {
      if (e < 0.0) throw SingularityError("weight is singular at this point");
      return 0.0;
    }
    return std::pow(base, e);
  };
  switch (spec.kind()) {
    case DomainKind::Interval:
      return power(1.0 - p[0], spec.alpha()) * power(1.0 + p[0], spec.beta()) / spec.mass();
    case DomainKind::Sphere: return 1.0;
    case DomainKind::Ball: return power(1.0 - dot(p.data(), p.data(), d), spec.mu() - 0.5) / spec.mass();
    case DomainKind::Simplex: {
      const auto& g = spec.params();
      double w = 1.0, sum = 0.0;
      for (int i = 0; i < d; ++i) {
        w *= power(std::max(p[i], 0.0), g[i]);
        sum += p[i];
      }
      return w * power(std::max(1.0 - sum, 0.0), g[d]) / spec.mass();
    }
    case DomainKind::ConicSurface: {
      const double t = p[d];
      if (t <= 0.0) throw SingularityError("conic weight is singular at the apex");
      return power(1.0 - t, spec.gamma()) / t / spec.mass();
    }
  }
  return 0.0;
}

double ballMeasureSurrogate(const DomainSpec& spec, const Point& p, double r) {
  checkRadius(r);
  spec.checkMember(p);
  const int d = spec.dim();
  const double h = r;  // n^{-1}
  const double h2 = r * r;
  switch (spec.kind()) {
    case DomainKind::Interval: {
      const double t = p[0];
      return 2.0 * h * std::pow(1.0 - t + h2, spec.alpha() + 0.5) * std::pow(1.0 + t + h2, spec.beta() + 0.5) /
             spec.mass();
    }
    case DomainKind::Sphere:
      return detail::sphereArea(d - 1) * std::pow(r, d - 1) / ((d - 1) * detail::sphereArea(d));
    case DomainKind::Ball: {
      const double rho = sqrtPos(1.0 - dot(p.data(), p.data(), d));
      return detail::ballVolume(d) * std::pow(h, d) * std::pow(rho + h, 2.0 * spec.mu()) / spec.mass();
    }
    case DomainKind::Simplex: {
      const auto& g = spec.params();
      double prod = 1.0, sum = 0.0;
      for (int i = 0; i <= d; ++i) {
        double xi;
        if (i < d) {
          xi = p[i];
          sum += p[i];
        } else {
          xi = 1.0 - sum;
        }
        prod *= std::pow(sqrtPos(xi) + h, 2.0 * g[i] + 1.0);
      }
      // Lebesgue measure on the simplex is 2^d prod(sqrt x_i) times the orthant surface measure.
      const double lebesgue_mass = spec.mass();
      return detail::ballVolume(d) * std::pow(2.0, d) * std::pow(h, d) * prod / lebesgue_mass;
    }
    case DomainKind::ConicSurface: {
      const double t = p[d];
      const double m = detail::sphereArea(d) * std::exp(detail::logBeta(d - 1.0, spec.gamma() + 1.0));
      return std::pow(2.0, d) * detail::ballVolume(d) * std::pow(h, d) * std::pow(t + h2, 0.5 * (d - 2)) *
             std::pow(1.0 - t + h2, spec.gamma() + 0.5) / m;
    }
  }
  return 0.0;
}

std::int64_t dimensionVn(const DomainSpec& spec, int n) {
  if (n < 0) throw ParameterError("degree must be nonnegative");
  if (n == 0) return 1;
  const int d = spec.dim();
  switch (spec.kind()) {
    case DomainKind::Interval: return 1;
    case DomainKind::Sphere: return static_cast<std::int64_t>(binom(n + d - 2, n) + binom(n + d - 3, n - 1));
    case DomainKind::ConicSurface: return static_cast<std::int64_t>(binom(n + d - 1, n) + binom(n + d - 2, n - 1));
    default: return static_cast<std::int64_t>(binom(n + d - 1, n));
  }
}

std::int64_t dimensionPin(const DomainSpec& spec, int n) {
  std::int64_t total = 0;
  for (int k = 0; k <= n; ++k) total += dimensionVn(spec, k);
  return total;
}

}  // namespace lokern
