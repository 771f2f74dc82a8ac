#include <algorithm>
#include <cmath>
#include <numbers>

#include "geometry.hpp"
#include "lokern/domain.hpp"
#include "lokern/error.hpp"
#include "lokern/orthopoly.hpp"

namespace lokern {

using detail::capFraction;
using detail::clampUnit;
using detail::dot;
using detail::integratePanels;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinRadius = 1e-4;
constexpr int kPanels = 32;

double intervalMeasure(const DomainSpec& spec, double t, double r) {
  const double theta0 = std::acos(clampUnit(t));
  const double a = spec.alpha(), b = spec.beta();
  auto f = [&](double phi) {
    const double c = std::cos(phi);
    return std::pow(1.0 - c, a) * std::pow(1.0 + c, b) * std::sin(phi);
  };
  return integratePanels(f, std::max(0.0, theta0 - r), std::min(kPi, theta0 + r), kPanels) / spec.mass();
}

// Lift to the upper hemisphere of S^d; integrate over the polar angle of the
// lifted point, with the cap fraction of the remaining directions in closed form.
double ballMeasure(const DomainSpec& spec, const Point& x, double r) {
  const int d = spec.dim();
  const double xn = std::sqrt(dot(x.data(), x.data(), d));
  const double h = std::sqrt(std::max(0.0, 1.0 - xn * xn));
  const double a0 = std::acos(clampUnit(h));
  const double cr = std::cos(r);
  const double mu = spec.mu();
  auto f = [&](double psi) {
    const double z = std::cos(psi), s = std::sin(psi);
    double frac;
    if (s * xn < 1e-300) {
      frac = h * z >= cr ? 1.0 : 0.0;
    } else {
      const double c = (cr - h * z) / (s * xn);
      frac = c >= 1.0 ? 0.0 : (c <= -1.0 ? 1.0 : capFraction(d, std::acos(c)));
    }
    return (mu == 0.0 ? 1.0 : std::pow(z, 2.0 * mu)) * std::pow(s, d - 1) * frac;
  };
  const double total = 0.5 * std::exp(detail::logBeta(mu + 0.5, 0.5 * d));
  return integratePanels(f, std::max(0.0, a0 - r), std::min(0.5 * kPi, a0 + r), kPanels) / total;
}

// Geodesic polar coordinates on S^d around the lifted point sqrt(x).
double simplexMeasure(const DomainSpec& spec, const Point& x, double r) {
  const int d = spec.dim();
  const int D = d + 1;
  const auto& g = spec.params();
  std::vector<double> X(D);
  double sum = 0.0;
  for (int i = 0; i < d; ++i) {
    X[i] = std::sqrt(std::max(0.0, x[i]));
    sum += x[i];
  }
  X[d] = std::sqrt(std::max(0.0, 1.0 - sum));
  // Orthonormal basis of the tangent space by Gram-Schmidt on the unit vectors.
  std::vector<std::vector<double>> basis;
  for (int e = 0; e < D && static_cast<int>(basis.size()) < d; ++e) {
    std::vector<double> v(D, 0.0);
    v[e] = 1.0;
    const double px = X[e];
    for (int i = 0; i < D; ++i) v[i] -= px * X[i];
    for (const auto& b : basis) {
      const double c = dot(v.data(), b.data(), D);
      for (int i = 0; i < D; ++i) v[i] -= c * b[i];
    }
    const double nv = std::sqrt(dot(v.data(), v.data(), D));
    if (nv < 1e-8) continue;
    for (double& vi : v) vi /= nv;
    basis.push_back(std::move(v));
  }
  const auto dirs = referenceQuadrature(DomainSpec::sphere(d), d == 2 ? 1439 : 160);
  const double area = detail::sphereArea(d);
  std::vector<double> Y(D);
  auto f = [&](double rho) {
    const double c = std::cos(rho), s = std::sin(rho);
    double acc = 0.0;
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      const auto& w = dirs.nodes[k];
      double val = dirs.weights[k];
      for (int i = 0; i < D && val != 0.0; ++i) {
        double yi = c * X[i];
        for (int j = 0; j < d; ++j) yi += s * w[j] * basis[j][i];
        if (yi <= 0.0) {
          val = 0.0;
          break;
        }
        val *= std::pow(yi, 2.0 * g[i] + 1.0);
      }
      acc += val;
    }
    return acc * area * std::pow(s, d - 1);
  };
  return std::pow(2.0, d) * integratePanels(f, 0.0, std::min(r, kPi), d == 2 ? 8 : 4) / spec.mass();
}

// With t = sin^2 a the metric becomes the spherical law of cosines in
// (a, half the angle between directions).
double conicMeasure(const DomainSpec& spec, const Point& p, double r) {
  const int d = spec.dim();
  const double t = std::clamp(p[d], 0.0, 1.0);
  const double a = std::asin(std::sqrt(t));
  const double sa = std::sin(a), ca = std::cos(a), cr = std::cos(r);
  const double g = spec.gamma();
  auto f = [&](double b) {
    const double sb = std::sin(b), cb = std::cos(b);
    double frac;
    if (sa * sb < 1e-300) {
      frac = ca * cb >= cr ? 1.0 : 0.0;
    } else {
      const double c = (cr - ca * cb) / (sa * sb);
      frac = c >= 1.0 ? 0.0 : (c <= -1.0 ? 1.0 : capFraction(d, std::min(kPi, 2.0 * std::acos(c))));
    }
    if (frac == 0.0) return 0.0;
    return std::pow(sb, 2 * d - 3) * std::pow(cb, 2.0 * g + 1.0) * 2.0 * frac;
  };
  const double total = std::exp(detail::logBeta(d - 1.0, g + 1.0));
  return integratePanels(f, std::max(0.0, a - r), std::min(0.5 * kPi, a + r), kPanels) / total;
}

}  // namespace

double ballMeasureNumeric(const DomainSpec& spec, const Point& p, double r) {
  if (!(r > 0.0)) throw ParameterError("ball radius must be positive");
  if (r < kMinRadius) throw ResolutionError("radius below the resolution of the numeric ball measure");
  spec.checkMember(p);
  r = std::min(r, kPi);
  switch (spec.kind()) {
    case DomainKind::Interval: return intervalMeasure(spec, p[0], r);
    case DomainKind::Sphere: return capFraction(spec.dim(), r);
    case DomainKind::Ball: return ballMeasure(spec, p, r);
    case DomainKind::Simplex: return simplexMeasure(spec, p, r);
    case DomainKind::ConicSurface: return conicMeasure(spec, p, r);
  }
  return 0.0;
}

}  // namespace lokern
