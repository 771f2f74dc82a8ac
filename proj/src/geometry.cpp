#include "geometry.hpp"

#include <algorithm>

#include "lokern/orthopoly.hpp"

namespace lokern::detail {

double sinPowerIntegral(int n, double psi) {
  if (n == 0) return psi;
  if (n == 1) return 1.0 - std::cos(psi);
  return -std::pow(std::sin(psi), n - 1) * std::cos(psi) / n + (n - 1.0) / n * sinPowerIntegral(n - 2, psi);
}

double capFraction(int D, double psi) {
  psi = std::clamp(psi, 0.0, std::numbers::pi);
  return sinPowerIntegral(D - 2, psi) / sinPowerIntegral(D - 2, std::numbers::pi);
}

double integratePanels(const std::function<double(double)>& f, double a, double b, int panels, int order) {
  if (!(b > a)) return 0.0;
  static thread_local int cached_order = -1;
  static thread_local QuadratureRule1D rule;
  if (cached_order != order) {
    rule = gaussJacobi(order, {0.0, 0.0});
    cached_order = order;
  }
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    total += 0.5 * h * s;
  }
  return total;
}

}  // namespace lokern::detail

namespace lokern::detail {

MetricCache::MetricCache(const DomainSpec& spec, const std::vector<Point>& points)
    : spec_(spec), conic_(spec.kind() == DomainKind::ConicSurface), count_(points.size()) {
  switch (spec.kind()) {
    case DomainKind::Interval: stride_ = 2; break;
    case DomainKind::Sphere: stride_ = spec.dim(); break;
    case DomainKind::ConicSurface: stride_ = spec.dim() + 2; break;
    default: stride_ = spec.dim() + 1; break;
  }
  data_.reserve(count_ * stride_);
  for (const auto& p : points) {
    const auto packed = pack(p);
    data_.insert(data_.end(), packed.begin(), packed.end());
  }
}

std::vector<double> MetricCache::pack(const Point& p) const {
  const int d = spec_.dim();
  auto sq = [](double v) { return v > 0.0 ? std::sqrt(v) : 0.0; };
  std::vector<double> out(stride_);
  switch (spec_.kind()) {
    case DomainKind::Interval:
      out[0] = p[0];
      out[1] = sq(1.0 - p[0] * p[0]);
      break;
    case DomainKind::Sphere: std::copy(p.begin(), p.end(), out.begin()); break;
    case DomainKind::Ball:
      std::copy(p.begin(), p.end(), out.begin());
      out[d] = sq(1.0 - dot(p.data(), p.data(), d));
      break;
    case DomainKind::Simplex: {
      double s = 0.0;
      for (int i = 0; i < d; ++i) {
        out[i] = sq(p[i]);
        s += p[i];
      }
      out[d] = sq(1.0 - s);
      break;
    }
    case DomainKind::ConicSurface:
      std::copy(p.begin(), p.end(), out.begin());
      out[d + 1] = sq(1.0 - p[d]);
      break;
  }
  return out;
}

double MetricCache::similarity(const double* a, const double* b) const {
  if (!conic_) return clampUnit(dot(a, b, stride_));
  const int d = stride_ - 2;
  const double inner = 0.5 * (dot(a, b, d) + a[d] * b[d]);
  return clampUnit((inner > 0.0 ? std::sqrt(inner) : 0.0) + a[d + 1] * b[d + 1]);
}

}  // namespace lokern::detail
