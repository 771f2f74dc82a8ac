#include "lokern/orthopoly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lokern/error.hpp"

namespace lokern {

namespace {

constexpr double kEndpointSlack = 1e-12;

void checkDegree(int n) {
  if (n < 0) throw ParameterError("degree must be nonnegative, got " + std::to_string(n));
}

void checkArgument(double t) {
  if (!(std::abs(t) <= 1.0 + kEndpointSlack))
    throw ParameterError("Jacobi argument outside [-1, 1]: " + std::to_string(t));
}

// Monic recurrence coefficients of the Jacobi weight (Gautschi's r_jacobi).
double monicDiag(int k, double a, double b) {
  if (k == 0) return (b - a) / (a + b + 2.0);
  const double s = 2.0 * k + a + b;
  return (b * b - a * a) / (s * (s + 2.0));
}

double monicOffSquared(int k, double a, double b) {
  if (k == 1) return 4.0 * (a + 1.0) * (b + 1.0) / ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
  const double s = 2.0 * k + a + b;
  return 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
}

// P_m and its derivative at an interior point.
std::pair<double, double> jacobiWithDerivative(int m, JacobiParams p, double t) {
  const double pm = evalJacobi(m, p, t);
  if (m == 0) return {pm, 0.0};
  const JacobiParams shifted{p.alpha + 1.0, p.beta + 1.0};
  const double dpm = 0.5 * (m + p.alpha + p.beta + 1.0) * evalJacobi(m - 1, shifted, t);
  return {pm, dpm};
}

bool newtonRoots(int m, JacobiParams p, std::vector<double>& roots) {
  roots.assign(m, 0.0);
  const double denom = m + 0.5 * (p.alpha + p.beta + 1.0);
  for (int i = 1; i <= m; ++i) {
    double x = std::cos(std::numbers::pi * (i - 0.25 + 0.5 * p.alpha) / denom);
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      auto [f, df] = jacobiWithDerivative(m, p, x);
      if (df == 0.0 || !std::isfinite(df)) return false;
      const double dx = f / df;
      x -= dx;
      if (!(x > -1.0 && x < 1.0)) return false;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) {
        converged = true;
        break;
      }
    }
    if (!converged) return false;
    roots[i - 1] = x;
  }
  std::sort(roots.begin(), roots.end());
  for (int i = 1; i < m; ++i)
    if (roots[i] - roots[i - 1] < 1e-11) return false;
  return true;
}

std::vector<double> bracketedRoots(int m, JacobiParams p) {
  // Roots are separated by O(1/m) in the angle t = cos(theta).
  const int grid = 32 * m + 64;
  std::vector<double> roots;
  auto f = [&](double theta) { return evalJacobi(m, p, std::cos(theta)); };
  double lo = 0.0;
  double flo = f(1e-300);
  for (int g = 1; g <= grid; ++g) {
    const double hi = std::numbers::pi * g / grid;
    const double fhi = f(std::min(hi, std::numbers::pi - 1e-300));
    if ((flo < 0.0) != (fhi < 0.0)) {
      double a = lo, b = hi, fa = flo;
      for (int it = 0; it < 200 && b - a > 1e-17; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if ((fa < 0.0) == (fm < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back(std::cos(0.5 * (a + b)));
    }
    lo = hi;
    flo = fhi;
  }
  if (static_cast<int>(roots.size()) != m)
    throw InfeasibleError("Gauss-Jacobi root bracketing found " + std::to_string(roots.size()) + " of " +
                          std::to_string(m) + " roots");
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

void JacobiParams::validate() const {
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw ParameterError("Jacobi parameters must exceed -1 (alpha=" + std::to_string(alpha) +
                         ", beta=" + std::to_string(beta) + ")");
}

double evalJacobi(int n, JacobiParams p, double t) {
  checkDegree(n);
  p.validate();
  checkArgument(t);
  const double a = p.alpha, b = p.beta;
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 0.5 * ((a + b + 2.0) * t + (a - b));
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * t + a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = (c2 * cur - c3 * prev) / c1;
    prev = cur;
    cur = next;
  }
  return cur;
}

void evalJacobiAll(int n, JacobiParams p, double t, std::span<double> out) {
  checkDegree(n);
  p.validate();
  checkArgument(t);
  if (out.size() < static_cast<std::size_t>(n + 1)) throw ParameterError("output span too small");
  const double a = p.alpha, b = p.beta;
  out[0] = 1.0;
  if (n == 0) return;
  out[1] = 0.5 * ((a + b + 2.0) * t + (a - b));
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * t + a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    out[k] = (c2 * out[k - 1] - c3 * out[k - 2]) / c1;
  }
}

double jacobiMass(JacobiParams p) {
  p.validate();
  const double a = p.alpha, b = p.beta;
  return std::exp((a + b + 1.0) * std::numbers::ln2 + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                  std::lgamma(a + b + 2.0));
}

double jacobiNorm(int n, JacobiParams p) {
  checkDegree(n);
  p.validate();
  if (n == 0) return jacobiMass(p);
  const double a = p.alpha, b = p.beta;
  const double log_h = (a + b + 1.0) * std::numbers::ln2 - std::log(2.0 * n + a + b + 1.0) +
                       std::lgamma(n + a + 1.0) + std::lgamma(n + b + 1.0) - std::lgamma(n + a + b + 1.0) -
                       std::lgamma(n + 1.0);
  return std::exp(log_h);
}

double evalZJacobi(int n, JacobiParams p, double t) {
  return evalJacobi(n, p, 1.0) * evalJacobi(n, p, t) / jacobiNorm(n, p);
}

double evalZGegenbauer(int n, double lambda, double t) {
  checkDegree(n);
  if (!(lambda >= 0.0)) throw ParameterError("Gegenbauer index must be nonnegative");
  checkArgument(t);
  if (n == 0) return 1.0;
  if (lambda == 0.0) {
    // 2 T_n(t): the normalization under which the circle kernel is a projection.
    double prev = 1.0, cur = t;
    for (int k = 2; k <= n; ++k) {
      const double next = 2.0 * t * cur - prev;
      prev = cur;
      cur = next;
    }
    return 2.0 * cur;
  }
  double prev = 1.0, cur = 2.0 * lambda * t;
  for (int k = 2; k <= n; ++k) {
    const double next = (2.0 * (k + lambda - 1.0) * t * cur - (k + 2.0 * lambda - 2.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return (n + lambda) / lambda * cur;
}

QuadratureRule1D gaussJacobi(int m, JacobiParams p) {
  if (m <= 0) throw ParameterError("Gauss-Jacobi node count must be positive");
  p.validate();
  QuadratureRule1D rule;
  rule.params = p;
  rule.exact_degree = 2 * m - 1;
  if (!newtonRoots(m, p, rule.nodes)) rule.nodes = bracketedRoots(m, p);

  // Christoffel numbers from the orthonormal recurrence.
  const OrthonormalJacobi q(p, m - 1);
  const double mass = jacobiMass(p);
  std::vector<double> vals(m);
  rule.weights.resize(m);
  for (int i = 0; i < m; ++i) {
    q.evaluate(rule.nodes[i], vals);
    double s = 0.0;
    for (double v : vals) s += v * v;
    rule.weights[i] = mass / s;
  }
  return rule;
}

QuadratureRule1D gaussJacobiProbability(int m, JacobiParams p) {
  QuadratureRule1D rule = gaussJacobi(m, p);
  const double mass = jacobiMass(p);
  for (double& w : rule.weights) w /= mass;
  return rule;
}

OrthonormalJacobi::OrthonormalJacobi(JacobiParams p, int max_degree) : params_(p), max_degree_(max_degree) {
  p.validate();
  checkDegree(max_degree);
  a_.resize(max_degree + 1);
  b_.assign(max_degree + 2, 0.0);
  for (int k = 0; k <= max_degree; ++k) a_[k] = monicDiag(k, p.alpha, p.beta);
  for (int k = 1; k <= max_degree + 1; ++k) b_[k] = std::sqrt(monicOffSquared(k, p.alpha, p.beta));
  at_one_.resize(max_degree + 1);
  evaluate(1.0, at_one_);
}

void OrthonormalJacobi::evaluate(double t, int degree, std::span<double> out) const {
  if (degree > max_degree_) throw CapacityError("orthonormal Jacobi degree exceeds capacity");
  out[0] = 1.0;
  if (degree == 0) return;
  out[1] = (t - a_[0]) / b_[1];
  for (int k = 1; k < degree; ++k) out[k + 1] = ((t - a_[k]) * out[k] - b_[k] * out[k - 1]) / b_[k + 1];
}

void OrthonormalJacobi::evaluateHomogeneous(double z, double r2, int degree, std::span<double> out) const {
  if (params_.alpha != params_.beta) throw ParameterError("homogeneous form needs symmetric parameters");
  if (degree > max_degree_) throw CapacityError("orthonormal Jacobi degree exceeds capacity");
  out[0] = 1.0;
  if (degree == 0) return;
  out[1] = z / b_[1];
  for (int k = 1; k < degree; ++k) out[k + 1] = (z * out[k] - b_[k] * r2 * out[k - 1]) / b_[k + 1];
}

double OrthonormalJacobi::series(std::span<const double> c, double t) const {
  const int n = static_cast<int>(c.size()) - 1;
  if (n > max_degree_) throw CapacityError("series length exceeds capacity");
  if (n < 0) return 0.0;
  double prev = 0.0, cur = 1.0, sum = c[0];
  for (int k = 0; k < n; ++k) {
    const double next = ((t - a_[k]) * cur - b_[k] * prev) / b_[k + 1];
    prev = cur;
    cur = next;
    sum += c[k + 1] * cur;
  }
  return sum;
}

DiscreteRule gaussFromDiscrete(std::span<const double> atoms, std::span<const double> weights, int k) {
  const std::size_t m = atoms.size();
  if (m == 0 || weights.size() != m) throw ParameterError("discrete measure must be nonempty");
  k = std::min<int>(k, static_cast<int>(m));
  std::vector<double> diag, off;
  diag.reserve(k);
  off.reserve(k);
  std::vector<double> prev(m, 0.0), cur(m, 1.0), next(m);
  double total = 0.0;
  for (double w : weights) total += w;
  const double scale = 1.0 / std::sqrt(total);
  for (double& c : cur) c = scale;
  double b_prev = 0.0;
  for (int j = 0; j < k; ++j) {
    double a = 0.0;
    for (std::size_t i = 0; i < m; ++i) a += weights[i] * atoms[i] * cur[i] * cur[i];
    diag.push_back(a);
    if (j + 1 == k) break;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      next[i] = (atoms[i] - a) * cur[i] - b_prev * prev[i];
      norm2 += weights[i] * next[i] * next[i];
    }
    const double b = std::sqrt(norm2);
    if (!(b > 1e-13)) break;  // fewer distinct atoms than requested nodes
    for (std::size_t i = 0; i < m; ++i) next[i] /= b;
    off.push_back(b);
    std::swap(prev, cur);
    std::swap(cur, next);
    b_prev = b;
  }
  const int kk = static_cast<int>(diag.size());
  Eigen::VectorXd d = Eigen::Map<Eigen::VectorXd>(diag.data(), kk);
  Eigen::VectorXd s(std::max(kk - 1, 0));
  for (int j = 0; j + 1 < kk; ++j) s[j] = off[j];
  DiscreteRule rule;
  if (kk == 1) {
    rule.nodes = {d[0]};
    rule.weights = {total};
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(d, s, Eigen::EigenvaluesOnly);
  rule.nodes.resize(kk);
  rule.weights.resize(kk);
  for (int i = 0; i < kk; ++i) {
    const double x = es.eigenvalues()[i];
    double p0 = 1.0, pm = 0.0, sum = 1.0;
    for (int j = 0; j + 1 < kk; ++j) {
      const double p1 = ((x - diag[j]) * p0 - (j > 0 ? off[j - 1] : 0.0) * pm) / off[j];
      pm = p0;
      p0 = p1;
      sum += p1 * p1;
    }
    rule.nodes[i] = x;
    rule.weights[i] = total / sum;
  }
  return rule;
}

}  // namespace lokern
