#include <cmath>
#include <numbers>

#include "lokern/domain.hpp"
#include "lokern/error.hpp"
#include "lokern/orthopoly.hpp"

namespace lokern {

namespace {

constexpr double kPi = std::numbers::pi;

int gaussCount(int degree) { return std::max(1, (degree + 2) / 2); }

// Probability rule on S^{D-1}: Gauss rule in the last coordinate with weight
// (1 - z^2)^{(D-3)/2} times a rule on S^{D-2}.
void sphereRule(int D, int degree, std::vector<Point>& nodes, std::vector<double>& weights) {
  nodes.clear();
  weights.clear();
  if (D == 2) {
    const int m = degree + 1;
    for (int k = 0; k < m; ++k) {
      const double phi = 2.0 * kPi * k / m;
      nodes.push_back({std::cos(phi), std::sin(phi)});
      weights.push_back(1.0 / m);
    }
    return;
  }
  const double a = 0.5 * (D - 3);
  const auto z = gaussJacobiProbability(gaussCount(degree), {a, a});
  std::vector<Point> sub;
  std::vector<double> subw;
  sphereRule(D - 1, degree, sub, subw);
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double s = std::sqrt(std::max(0.0, 1.0 - z.nodes[i] * z.nodes[i]));
    for (std::size_t j = 0; j < sub.size(); ++j) {
      Point p(D);
      for (int k = 0; k < D - 1; ++k) p[k] = s * sub[j][k];
      p[D - 1] = z.nodes[i];
      nodes.push_back(std::move(p));
      weights.push_back(z.weights[i] * subw[j]);
    }
  }
}

// Collapsed rule on the simplex {y_i >= 0, sum y_i <= 1} in R^d with weight
// prod y_i^{g_i} (1 - |y|)^{g_d}: x = (u, (1 - u) y') recursively.
void simplexRule(int d, const double* g, int degree, std::vector<Point>& nodes, std::vector<double>& weights) {
  nodes.clear();
  weights.clear();
  if (d == 1) {
    const auto r = gaussJacobiProbability(gaussCount(degree), {g[1], g[0]});
    for (std::size_t i = 0; i < r.size(); ++i) {
      nodes.push_back({0.5 * (1.0 + r.nodes[i])});
      weights.push_back(r.weights[i]);
    }
    return;
  }
  double rest = 0.0;
  for (int i = 1; i <= d; ++i) rest += g[i];
  const auto u = gaussJacobiProbability(gaussCount(degree), {rest + d - 1, g[0]});
  std::vector<Point> sub;
  std::vector<double> subw;
  simplexRule(d - 1, g + 1, degree, sub, subw);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double ui = 0.5 * (1.0 + u.nodes[i]);
    for (std::size_t j = 0; j < sub.size(); ++j) {
      Point p(d);
      p[0] = ui;
      for (int k = 0; k < d - 1; ++k) p[k + 1] = (1.0 - ui) * sub[j][k];
      nodes.push_back(std::move(p));
      weights.push_back(u.weights[i] * subw[j]);
    }
  }
}

}  // namespace

ReferenceQuadrature referenceQuadrature(const DomainSpec& spec, int degree) {
  if (degree < 0) throw ParameterError("quadrature degree must be nonnegative");
  ReferenceQuadrature q;
  q.exact_degree = degree;
  const int d = spec.dim();
  switch (spec.kind()) {
    case DomainKind::Interval: {
      const auto r = gaussJacobiProbability(gaussCount(degree), {spec.alpha(), spec.beta()});
      for (std::size_t i = 0; i < r.size(); ++i) q.nodes.push_back({r.nodes[i]});
      q.weights = r.weights;
      break;
    }
    case DomainKind::Sphere: sphereRule(d, degree, q.nodes, q.weights); break;
    case DomainKind::Ball: {
      // Radial part in s = 2|x|^2 - 1; only even total degree survives the sphere average.
      const auto s = gaussJacobiProbability(gaussCount(degree / 2), {spec.mu() - 0.5, 0.5 * d - 1.0});
      std::vector<Point> dirs;
      std::vector<double> dw;
      sphereRule(d, degree, dirs, dw);
      for (std::size_t i = 0; i < s.size(); ++i) {
        const double r = std::sqrt(0.5 * (1.0 + s.nodes[i]));
        for (std::size_t j = 0; j < dirs.size(); ++j) {
          Point p(d);
          for (int k = 0; k < d; ++k) p[k] = r * dirs[j][k];
          q.nodes.push_back(std::move(p));
          q.weights.push_back(s.weights[i] * dw[j]);
        }
      }
      break;
    }
    case DomainKind::Simplex: simplexRule(d, spec.params().data(), degree, q.nodes, q.weights); break;
    case DomainKind::ConicSurface: {
      const auto t = gaussJacobiProbability(gaussCount(degree), {spec.gamma(), d - 2.0});
      std::vector<Point> dirs;
      std::vector<double> dw;
      sphereRule(d, degree, dirs, dw);
      for (std::size_t i = 0; i < t.size(); ++i) {
        const double ti = 0.5 * (1.0 + t.nodes[i]);
        for (std::size_t j = 0; j < dirs.size(); ++j) {
          Point p(d + 1);
          for (int k = 0; k < d; ++k) p[k] = ti * dirs[j][k];
          p[d] = ti;
          q.nodes.push_back(std::move(p));
          q.weights.push_back(t.weights[i] * dw[j]);
        }
      }
      break;
    }
  }
  double total = 0.0;
  for (double w : q.weights) total += w;
  for (double& w : q.weights) w /= total;
  return q;
}

}  // namespace lokern
