#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <sstream>

#include "lokern/domain.hpp"
#include "lokern/error.hpp"
#include "geometry.hpp"
#include "lokern/orthopoly.hpp"

namespace lokern {

std::string kindName(DomainKind kind) {
  switch (kind) {
    case DomainKind::Interval: return "interval";
    case DomainKind::Sphere: return "sphere";
    case DomainKind::Ball: return "ball";
    case DomainKind::Simplex: return "simplex";
    case DomainKind::ConicSurface: return "conic";
  }
  return "unknown";
}

DomainKind domainKindFromString(const std::string& name) {
  if (name == "interval") return DomainKind::Interval;
  if (name == "sphere") return DomainKind::Sphere;
  if (name == "ball") return DomainKind::Ball;
  if (name == "simplex") return DomainKind::Simplex;
  if (name == "conic" || name == "conicSurface" || name == "conic-surface") return DomainKind::ConicSurface;
  throw ParameterError("unknown domain '" + name + "'");
}

DomainSpec::DomainSpec(DomainKind kind, int dim, std::vector<double> params)
    : kind_(kind), dim_(dim), params_(std::move(params)) {
  using detail::logBeta;
  using detail::sphereArea;
  switch (kind_) {
    case DomainKind::Interval: mass_ = jacobiMass({alpha(), beta()}); break;
    case DomainKind::Sphere: mass_ = sphereArea(dim_); break;
    case DomainKind::Ball: mass_ = 0.5 * sphereArea(dim_) * std::exp(logBeta(0.5 * dim_, mu() + 0.5)); break;
    case DomainKind::Simplex: {
      double s = 0.0, lg = 0.0;
      for (double g : params_) {
        s += g;
        lg += std::lgamma(g + 1.0);
      }
      mass_ = std::exp(lg - std::lgamma(s + dim_ + 1.0));
      break;
    }
    case DomainKind::ConicSurface:
      mass_ = std::numbers::sqrt2 * sphereArea(dim_) * std::exp(logBeta(dim_ - 1.0, gamma() + 1.0));
      break;
  }
}

DomainSpec DomainSpec::interval(double alpha, double beta, bool allow_nonlocalizable) {
  const double lo = allow_nonlocalizable ? -1.0 : -0.5;
  const bool ok = allow_nonlocalizable ? (alpha > lo && beta > lo) : (alpha >= lo && beta >= lo);
  if (!ok || !std::isfinite(alpha) || !std::isfinite(beta))
    throw ParameterError("interval weight needs alpha, beta >= -1/2");
  return DomainSpec(DomainKind::Interval, 1, {alpha, beta});
}

DomainSpec DomainSpec::sphere(int d) {
  if (d < 2) throw ParameterError("sphere needs d >= 2");
  return DomainSpec(DomainKind::Sphere, d, {});
}

DomainSpec DomainSpec::ball(int d, double mu) {
  if (d < 2) throw ParameterError("ball needs d >= 2");
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw ParameterError("ball weight needs mu >= 0");
  if (mu > 0.0 && mu < 1e-8) throw ParameterError("ball weight mu in (0, 1e-8) is numerically ill-posed; use 0");
  return DomainSpec(DomainKind::Ball, d, {mu});
}

DomainSpec DomainSpec::simplex(int d, std::vector<double> gamma) {
  if (d < 2) throw ParameterError("simplex needs d >= 2");
  if (gamma.size() != static_cast<std::size_t>(d + 1)) throw ParameterError("simplex weight needs d + 1 exponents");
  for (double g : gamma)
    if (!(g >= 0.0) || !std::isfinite(g)) throw ParameterError("simplex weight needs gamma_i >= 0");
  return DomainSpec(DomainKind::Simplex, d, std::move(gamma));
}

DomainSpec DomainSpec::conicSurface(int d, double gamma) {
  if (d < 2) throw ParameterError("conic surface needs d >= 2");
  if (!(gamma > -0.5) || !std::isfinite(gamma)) throw ParameterError("conic weight needs gamma > -1/2");
  return DomainSpec(DomainKind::ConicSurface, d, {gamma});
}

int DomainSpec::coordCount() const {
  switch (kind_) {
    case DomainKind::Interval: return 1;
    case DomainKind::ConicSurface: return dim_ + 1;
    default: return dim_;
  }
}

std::string DomainSpec::name() const {
  std::ostringstream os;
  os << kindName(kind_);
  if (kind_ != DomainKind::Interval) os << "_d" << dim_;
  switch (kind_) {
    case DomainKind::Interval: os << "_a" << alpha() << "_b" << beta(); break;
    case DomainKind::Ball: os << "_mu" << mu(); break;
    case DomainKind::ConicSurface: os << "_g" << gamma(); break;
    case DomainKind::Simplex:
      os << "_g";
      for (std::size_t i = 0; i < params_.size(); ++i) os << (i ? "-" : "") << params_[i];
      break;
    case DomainKind::Sphere: break;
  }
  return os.str();
}

double DomainSpec::membershipResidual(const Point& p) const {
  if (static_cast<int>(p.size()) != coordCount()) return std::numeric_limits<double>::infinity();
  for (double v : p)
    if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
  const double norm = std::sqrt(detail::dot(p.data(), p.data(), dim_));
  switch (kind_) {
    case DomainKind::Interval: return std::max(0.0, std::abs(p[0]) - 1.0);
    case DomainKind::Sphere: return std::abs(norm - 1.0);
    case DomainKind::Ball: return std::max(0.0, norm - 1.0);
    case DomainKind::Simplex: {
      const double sum = std::accumulate(p.begin(), p.end(), 0.0);
      const double lo = *std::min_element(p.begin(), p.end());
      return std::max({0.0, -lo, sum - 1.0});
    }
    case DomainKind::ConicSurface: {
      const double t = p[dim_];
      return std::max({std::abs(norm - t), -t, t - 1.0, 0.0});
    }
  }
  return 0.0;
}

void DomainSpec::checkMember(const Point& p) const {
  if (!(membershipResidual(p) <= 1e-12)) throw MembershipError("point is not on " + name());
}

}  // namespace lokern
