#include <algorithm>
#include <cmath>
#include <numbers>

#include "geometry.hpp"
#include "lokern/domain.hpp"
#include "lokern/error.hpp"

namespace lokern {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> gaussianDirection(int D, Rng& rng) {
  std::vector<double> v(D);
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& x : v) {
      x = rng.normal();
      n2 += x * x;
    }
  } while (n2 < 1e-20);
  const double n = std::sqrt(n2);
  for (double& x : v) x /= n;
  return v;
}

// Map a unit vector on the lifted sphere back to the domain.
Point dropLift(const DomainSpec& spec, const std::vector<double>& Y) {
  const int d = spec.dim();
  switch (spec.kind()) {
    case DomainKind::Interval: return {std::clamp(Y[0], -1.0, 1.0)};
    case DomainKind::Sphere: return Y;
    case DomainKind::Ball: {
      Point x(Y.begin(), Y.begin() + d);
      const double n = std::sqrt(detail::dot(x.data(), x.data(), d));
      if (n > 1.0)
        for (double& v : x) v /= n;
      return x;
    }
    case DomainKind::Simplex: {
      Point x(d);
      double s = 0.0;
      for (int i = 0; i <= d; ++i) s += Y[i] * Y[i];
      for (int i = 0; i < d; ++i) x[i] = Y[i] * Y[i] / s;
      return x;
    }
    case DomainKind::ConicSurface: break;
  }
  throw ParameterError("no spherical lift for this domain");
}

std::vector<double> lift(const DomainSpec& spec, const Point& p) {
  const int d = spec.dim();
  std::vector<double> Y;
  switch (spec.kind()) {
    case DomainKind::Interval: return {p[0], std::sqrt(std::max(0.0, 1.0 - p[0] * p[0]))};
    case DomainKind::Sphere: return p;
    case DomainKind::Ball:
      Y = p;
      Y.push_back(std::sqrt(std::max(0.0, 1.0 - detail::dot(p.data(), p.data(), d))));
      return Y;
    case DomainKind::Simplex: {
      double s = 0.0;
      for (int i = 0; i < d; ++i) {
        Y.push_back(std::sqrt(std::max(0.0, p[i])));
        s += p[i];
      }
      Y.push_back(std::sqrt(std::max(0.0, 1.0 - s)));
      return Y;
    }
    case DomainKind::ConicSurface: break;
  }
  throw ParameterError("no spherical lift for this domain");
}

Point conePoint(int d, double t, const std::vector<double>& dir) {
  Point p(d + 1);
  for (int k = 0; k < d; ++k) p[k] = t * dir[k];
  p[d] = t;
  return p;
}

}  // namespace

double Rng::normal() {
  // Box-Muller with explicit uniforms keeps streams identical across standard libraries.
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

std::vector<Point> samplePoints(const DomainSpec& spec, int count, Rng& rng) {
  const int d = spec.dim();
  std::vector<Point> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    switch (spec.kind()) {
      case DomainKind::Interval: out.push_back({std::cos(kPi * rng.uniform())}); break;
      case DomainKind::Sphere: out.push_back(gaussianDirection(d, rng)); break;
      case DomainKind::Ball: {
        auto Y = gaussianDirection(d + 1, rng);
        Y[d] = std::abs(Y[d]);
        out.push_back(dropLift(spec, Y));
        break;
      }
      case DomainKind::Simplex: {
        auto Y = gaussianDirection(d + 1, rng);
        for (double& y : Y) y = std::abs(y);
        out.push_back(dropLift(spec, Y));
        break;
      }
      case DomainKind::ConicSurface: {
        const double a = 0.5 * kPi * rng.uniform();
        out.push_back(conePoint(d, std::pow(std::sin(a), 2), gaussianDirection(d, rng)));
        break;
      }
    }
  }
  return out;
}

std::vector<Point> boundaryAdjacentPoints(const DomainSpec& spec, int n) {
  if (n < 1) throw ParameterError("n must be positive");
  const int d = spec.dim();
  const double e = 1.0 / (static_cast<double>(n) * n);
  std::vector<Point> out;
  switch (spec.kind()) {
    case DomainKind::Interval:
      out = {{1.0 - e}, {-1.0 + e}, {1.0}, {-1.0}, {1.0 - 4.0 * e}};
      break;
    case DomainKind::Sphere: {
      Point a(d, 0.0), b(d, 0.0);
      a[d - 1] = 1.0;
      b[0] = -1.0;
      out = {a, b};
      break;
    }
    case DomainKind::Ball: {
      Point a(d, 0.0), b(d, 0.0), c(d, 0.0);
      a[0] = 1.0 - e;
      b[d - 1] = 1.0;
      c[0] = c[1] = (1.0 - e) / std::sqrt(2.0);
      out = {a, b, c};
      break;
    }
    case DomainKind::Simplex: {
      Point vertex(d, 0.0), near_vertex(d, e), edge(d, 0.0), face(d, 0.5 / d), far(d, 0.0);
      edge[0] = 0.5;
      face[0] = e;
      far[d - 1] = 1.0 - e;
      out = {vertex, near_vertex, edge, face, far};
      break;
    }
    case DomainKind::ConicSurface: {
      std::vector<double> dir(d, 0.0);
      dir[0] = 1.0;
      out = {conePoint(d, e, dir), conePoint(d, 1.0 - e, dir), conePoint(d, 1.0, dir), conePoint(d, 0.0, dir)};
      break;
    }
  }
  return out;
}

Point offsetPoint(const DomainSpec& spec, const Point& p, double s, int direction) {
  const int d = spec.dim();
  if (spec.kind() == DomainKind::Interval) {
    const double theta = std::acos(std::clamp(p[0], -1.0, 1.0));
    double moved = direction % 2 == 0 ? theta + s : theta - s;
    if (moved > kPi || moved < 0.0) moved = direction % 2 == 0 ? theta - s : theta + s;
    return {std::cos(std::clamp(moved, 0.0, kPi))};
  }
  if (spec.kind() == DomainKind::ConicSurface) {
    const double t = p[d];
    const double a = std::asin(std::sqrt(std::clamp(t, 0.0, 1.0)));
    std::vector<double> dir(d, 0.0);
    if (t > 0.0)
      for (int k = 0; k < d; ++k) dir[k] = p[k] / t;
    else
      dir[0] = 1.0;
    if (direction % 2 == 0) {
      double moved = (direction / 2) % 2 == 0 ? a + s : a - s;
      if (moved > 0.5 * kPi || moved < 0.0) moved = (direction / 2) % 2 == 0 ? a - s : a + s;
      return conePoint(d, std::pow(std::sin(std::clamp(moved, 0.0, 0.5 * kPi)), 2), dir);
    }
    // Rotate the direction in the (axis, axis+1) plane by 2s, which moves about s * sin(a).
    const int i = (direction / 2) % d, j = (i + 1) % d;
    const double c = std::cos(2.0 * s), sn = std::sin(2.0 * s);
    const double u = dir[i], v = dir[j];
    dir[i] = c * u - sn * v;
    dir[j] = sn * u + c * v;
    return conePoint(d, t, dir);
  }
  auto X = lift(spec, p);
  const int D = static_cast<int>(X.size());
  // Tangent direction from a coordinate axis, falling back to the next axis.
  std::vector<double> v(D, 0.0);
  for (int attempt = 0; attempt < D; ++attempt) {
    std::fill(v.begin(), v.end(), 0.0);
    v[(direction + attempt) % D] = 1.0;
    const double c = detail::dot(v.data(), X.data(), D);
    for (int i = 0; i < D; ++i) v[i] -= c * X[i];
    const double nv = std::sqrt(detail::dot(v.data(), v.data(), D));
    if (nv > 1e-6) {
      for (double& x : v) x /= nv;
      break;
    }
  }
  if ((direction / D) % 2 == 1)
    for (double& x : v) x = -x;
  std::vector<double> Y(D);
  for (int i = 0; i < D; ++i) Y[i] = std::cos(s) * X[i] + std::sin(s) * v[i];
  if (spec.kind() == DomainKind::Ball) Y[D - 1] = std::abs(Y[D - 1]);
  if (spec.kind() == DomainKind::Simplex)
    for (double& y : Y) y = std::abs(y);
  return dropLift(spec, Y);
}

}  // namespace lokern
