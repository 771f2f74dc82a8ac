#include "lokern/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "geometry.hpp"
#include "lokern/error.hpp"

namespace lokern {

namespace {

DiscreteRule twoPoint() { return {{-1.0, 1.0}, {0.5, 0.5}}; }

DiscreteRule gaussRule(int m, double exponent) {
  const auto r = gaussJacobiProbability(m, {exponent, exponent});
  return {r.nodes, r.weights};
}

double sqrtPos(double x) { return x > 0.0 ? std::sqrt(x) : 0.0; }

}  // namespace

KernelEvaluator::KernelEvaluator(const DomainSpec& spec, int max_degree, CutoffFunction cutoff, int inner_scale)
    : spec_(spec), N_(max_degree), cutoff_(cutoff) {
  if (max_degree < 0) throw ParameterError("degree must be nonnegative");
  if (inner_scale < 1) throw ParameterError("inner rule scale must be positive");
  const int d = spec.dim();
  const int full = (N_ + 1) * inner_scale;
  switch (spec.kind()) {
    case DomainKind::Interval: z_ = OrthonormalJacobi({spec.alpha(), spec.beta()}, N_); break;
    case DomainKind::Sphere: {
      const double a = 0.5 * (d - 3);
      z_ = OrthonormalJacobi({a, a}, N_);
      break;
    }
    case DomainKind::Ball: {
      const double a = spec.mu() + 0.5 * (d - 2);
      z_ = OrthonormalJacobi({a, a}, N_);
      inner_.push_back(spec.mu() == 0.0 ? twoPoint() : gaussRule(((N_ + 2) / 2) * inner_scale, spec.mu() - 1.0));
      break;
    }
    case DomainKind::Simplex: {
      double g = 0.0;
      for (double x : spec.params()) g += x;
      z_ = OrthonormalJacobi({g + d - 0.5, -0.5}, N_);
      squared_argument_ = true;
      for (double x : spec.params()) inner_.push_back(gaussRule(full, x - 0.5));
      break;
    }
    case DomainKind::ConicSurface: {
      z_ = OrthonormalJacobi({spec.gamma() + d - 1.5, -0.5}, N_);
      squared_argument_ = true;
      inner_.push_back(d == 2 ? twoPoint() : gaussRule(full, 0.5 * (d - 2) - 1.0));
      inner_.push_back(gaussRule(full, spec.gamma() - 0.5));
      break;
    }
  }
}

std::vector<double> KernelEvaluator::evaluateSeries(const std::vector<std::vector<double>>& cs, const Point& p,
                                                    const Point& q) const {
  std::size_t len = 0;
  for (const auto& c : cs) len = std::max(len, c.size());
  if (len == 0) return std::vector<double>(cs.size(), 0.0);
  const int top = static_cast<int>(len) - 1;
  if (top > N_) throw CapacityError("kernel degree exceeds the evaluator capacity");
  const int d = spec_.dim();
  std::vector<double> out(cs.size(), 0.0);
  std::vector<double> buf(len), buf2(len);

  if (spec_.kind() == DomainKind::Interval) {
    z_.evaluate(p[0], top, buf);
    z_.evaluate(q[0], top, buf2);
    for (std::size_t j = 0; j < cs.size(); ++j)
      for (std::size_t k = 0; k < cs[j].size(); ++k) out[j] += cs[j][k] * (buf[k] * buf2[k]);
    return out;
  }

  // Distribution of the addition-formula argument as weighted atoms.
  std::vector<double> atoms{0.0}, weights{1.0};
  auto addAxis = [&](double scale, const DiscreteRule& rule, bool compress) {
    if (scale == 0.0) return;
    std::vector<double> na, nw;
    na.reserve(atoms.size() * rule.nodes.size());
    nw.reserve(atoms.size() * rule.nodes.size());
    for (std::size_t i = 0; i < atoms.size(); ++i)
      for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        na.push_back(atoms[i] + scale * rule.nodes[k]);
        nw.push_back(weights[i] * rule.weights[k]);
      }
    // Moments up to degree 2 top of the partial sum are all the final integrand sees.
    const std::size_t keep = static_cast<std::size_t>(top) + 1;
    if (compress && na.size() > keep) {
      auto g = gaussFromDiscrete(na, nw, static_cast<int>(keep));
      atoms = std::move(g.nodes);
      weights = std::move(g.weights);
    } else {
      atoms = std::move(na);
      weights = std::move(nw);
    }
  };

  switch (spec_.kind()) {
    case DomainKind::Sphere: atoms[0] = detail::dot(p.data(), q.data(), d); break;
    case DomainKind::Ball: {
      atoms[0] = detail::dot(p.data(), q.data(), d);
      const double b = sqrtPos(1.0 - detail::dot(p.data(), p.data(), d)) * sqrtPos(1.0 - detail::dot(q.data(), q.data(), d));
      addAxis(b, inner_[0], false);
      break;
    }
    case DomainKind::Simplex: {
      double sp = 0.0, sq = 0.0;
      std::vector<double> scales(d + 1);
      for (int i = 0; i < d; ++i) {
        scales[i] = sqrtPos(p[i]) * sqrtPos(q[i]);
        sp += p[i];
        sq += q[i];
      }
      scales[d] = sqrtPos(1.0 - sp) * sqrtPos(1.0 - sq);
      int last = -1;
      for (int i = 0; i <= d; ++i)
        if (scales[i] != 0.0) last = i;
      for (int i = 0; i <= d; ++i) addAxis(scales[i], inner_[i], i != last);
      break;
    }
    case DomainKind::ConicSurface: {
      const double t = p[d], s = q[d];
      const double a1 = sqrtPos(0.5 * (detail::dot(p.data(), q.data(), d) + t * s));
      const double a2 = sqrtPos(1.0 - t) * sqrtPos(1.0 - s);
      addAxis(a1, inner_[0], a2 != 0.0);
      addAxis(a2, inner_[1], false);
      break;
    }
    case DomainKind::Interval: break;
  }

  std::vector<std::vector<double>> scaled(cs.size());
  for (std::size_t j = 0; j < cs.size(); ++j) {
    scaled[j].resize(cs[j].size());
    for (std::size_t k = 0; k < cs[j].size(); ++k) scaled[j][k] = cs[j][k] * z_.atOne(static_cast<int>(k));
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const double x = atoms[i];
    const double arg = squared_argument_ ? 2.0 * x * x - 1.0 : x;
    z_.evaluate(arg, top, buf);
    for (std::size_t j = 0; j < cs.size(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < scaled[j].size(); ++k) s += scaled[j][k] * buf[k];
      out[j] += weights[i] * s;
    }
  }
  return out;
}

double KernelEvaluator::reproducingKernel(int n, const Point& p, const Point& q) const {
  if (n < 0) throw ParameterError("degree must be nonnegative");
  if (n > N_) throw CapacityError("kernel degree exceeds the evaluator capacity");
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  return evaluateSeries({c}, p, q)[0];
}

double KernelEvaluator::multiplierKernel(std::span<const double> c, const Point& p, const Point& q) const {
  return evaluateSeries({std::vector<double>(c.begin(), c.end())}, p, q)[0];
}

std::vector<double> KernelEvaluator::multiplierKernels(const std::vector<std::vector<double>>& cs, const Point& p,
                                                       const Point& q) const {
  return evaluateSeries(cs, p, q);
}

double reproducingKernel(const KernelEvaluator& ev, int n, const Point& p, const Point& q) {
  ev.spec().checkMember(p);
  ev.spec().checkMember(q);
  return ev.reproducingKernel(n, p, q);
}

double christoffelKernelDiag(const KernelEvaluator& ev, int n, const Point& p) {
  ev.spec().checkMember(p);
  if (n < 0) throw ParameterError("degree must be nonnegative");
  if (n > ev.maxDegree()) throw CapacityError("kernel degree exceeds the evaluator capacity");
  const std::vector<double> c(n + 1, 1.0);
  return ev.multiplierKernel(c, p, p);
}

double localizedKernel(const KernelEvaluator& ev, int n, const Point& p, const Point& q) {
  ev.spec().checkMember(p);
  ev.spec().checkMember(q);
  if (n < 1) throw ParameterError("localized kernel needs n >= 1");
  if (2 * n > ev.maxDegree()) throw CapacityError("localized kernel needs 2n <= max degree");
  const auto c = ev.cutoff().samples(static_cast<double>(n), 2 * n);
  return ev.multiplierKernel(c, p, q);
}

}  // namespace lokern
