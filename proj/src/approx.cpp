#include "lokern/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "lokern/error.hpp"

namespace lokern {

namespace {

int expansionDegree(const KernelEvaluator& ev, const BandlimitedFunction& f) {
  if (!f.exact_polynomial) return ev.maxDegree();
  if (f.degree > ev.maxDegree()) throw CapacityError("function degree exceeds the evaluator capacity");
  return std::max(f.degree, 0);
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

void checkOrder(int r) {
  if (r <= 0 || r % 2 != 0) throw ParameterError("difference order must be a positive even integer");
}

}  // namespace

MultiplierSequence multiplierSequence(const KernelEvaluator& ev, double theta, int max_degree) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) throw ParameterError("translation angle must lie in (0, pi)");
  if (max_degree < 0) throw ParameterError("degree must be nonnegative");
  const JacobiParams jp = ev.kernelJacobi();
  if (ev.spec().kind() == DomainKind::Interval && (jp.alpha < jp.beta || jp.alpha < -0.5))
    throw ParameterError("translation needs alpha >= beta and alpha >= -1/2");
  MultiplierSequence ms;
  ms.spec = ev.spec();
  ms.theta = theta;
  ms.params = jp;
  ms.m.resize(max_degree + 1);
  std::vector<double> at(max_degree + 1), one(max_degree + 1);
  evalJacobiAll(max_degree, jp, std::cos(theta), at);
  evalJacobiAll(max_degree, jp, 1.0, one);
  for (int n = 0; n <= max_degree; ++n) ms.m[n] = at[n] / one[n];
  return ms;
}

Eigen::VectorXd expansionCoefficients(const KernelEvaluator& ev, const OrthonormalBasis& basis,
                                      const BandlimitedFunction& f) {
  const int d = expansionDegree(ev, f);
  if (d > basis.maxDegree()) throw CapacityError("function degree exceeds the basis degree");
  BandlimitedFunction g = f;
  if (!f.exact_polynomial) g.degree = std::max(f.degree, d);
  return basisCoefficients(basis, d, g);
}

BandlimitedFunction fromCoefficients(std::shared_ptr<const OrthonormalBasis> basis, Eigen::VectorXd coef) {
  const int degree = basis->degreeOfSize(static_cast<int>(coef.size()));
  BandlimitedFunction f{basis->spec(), degree, nullptr, true};
  auto c = std::make_shared<const Eigen::VectorXd>(std::move(coef));
  f.f = [basis, c](const Point& p) { return basis->expand({p}, *c)(0); };
  return f;
}

Eigen::VectorXd applyMultiplier(const OrthonormalBasis& basis, const std::vector<double>& c,
                                const Eigen::VectorXd& coef) {
  const int degree = basis.degreeOfSize(static_cast<int>(coef.size()));
  if (static_cast<int>(c.size()) <= degree) throw CapacityError("multiplier shorter than the expansion");
  Eigen::VectorXd out = coef;
  for (int k = 0; k <= degree; ++k) out.segment(basis.blockStart(k), basis.blockSize(k)) *= c[k];
  return out;
}

BandlimitedFunction translate(const KernelEvaluator& ev, double theta, const BandlimitedFunction& f) {
  const int d = expansionDegree(ev, f);
  auto basis = std::make_shared<const OrthonormalBasis>(ev.spec(), d);
  const auto ms = multiplierSequence(ev, theta, d);
  return fromCoefficients(basis, applyMultiplier(*basis, ms.m, expansionCoefficients(ev, *basis, f)));
}

std::vector<double> differenceMultipliers(const MultiplierSequence& ms, int r) {
  checkOrder(r);
  const int h = r / 2;
  std::vector<double> c(ms.m.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    double s = 0.0, power = 1.0;
    for (int k = 0; k <= h; ++k) {
      s += (k % 2 == 0 ? 1.0 : -1.0) * binomial(h, k) * power;
      power *= ms.m[n];
    }
    c[n] = s;
  }
  return c;
}

BandlimitedFunction differenceOp(const KernelEvaluator& ev, double theta, int r, const BandlimitedFunction& f) {
  checkOrder(r);
  const int d = expansionDegree(ev, f);
  auto basis = std::make_shared<const OrthonormalBasis>(ev.spec(), d);
  const auto c = differenceMultipliers(multiplierSequence(ev, theta, d), r);
  return fromCoefficients(basis, applyMultiplier(*basis, c, expansionCoefficients(ev, *basis, f)));
}

double modulus(const KernelEvaluator& ev, double t, int r, const BandlimitedFunction& f, int p) {
  if (p != 2) throw ParameterError("only the L^2 modulus is supported");
  if (!(t > 0.0 && t < std::numbers::pi)) throw ParameterError("modulus scale must lie in (0, pi)");
  checkOrder(r);
  const int d = expansionDegree(ev, f);
  const OrthonormalBasis basis(ev.spec(), d);
  const Eigen::VectorXd coef = expansionCoefficients(ev, basis, f);
  // Orthonormal coefficients: the L^2 norm is the Euclidean norm.
  double best = 0.0;
  for (int i = 0; i < 32; ++i) {
    const double theta = t * std::exp2(-0.25 * i);
    const auto c = differenceMultipliers(multiplierSequence(ev, theta, d), r);
    best = std::max(best, applyMultiplier(basis, c, coef).norm());
  }
  return best;
}

double l2Norm(const DomainSpec& spec, const BandlimitedFunction& f, int quad_degree) {
  const auto quad = referenceQuadrature(spec, quad_degree);
  double s = 0.0;
  for (std::size_t i = 0; i < quad.size(); ++i) {
    const double v = f(quad.nodes[i]);
    s += quad.weights[i] * v * v;
  }
  return std::sqrt(s);
}

namespace {

// ||f - sum_k c_k proj_k f|| on a quadrature exact for the squared residual of
// polynomials and fine enough for the battery.
double multiplierErrorL2(const KernelEvaluator& ev, int top, const std::vector<double>& c,
                         const BandlimitedFunction& f) {
  if (top > ev.maxDegree()) throw CapacityError("degree exceeds the evaluator capacity");
  const int q = 2 * std::max(std::max(f.degree, 0), top);
  const auto quad = referenceQuadrature(f.spec, q);
  const OrthonormalBasis basis(f.spec, top);
  Eigen::VectorXd fv(quad.size()), wf(quad.size());
  for (std::size_t i = 0; i < quad.size(); ++i) {
    fv(i) = f(quad.nodes[i]);
    wf(i) = quad.weights[i] * fv(i);
  }
  const Eigen::VectorXd coef = applyMultiplier(basis, c, basis.transposeApply(quad.nodes, wf, top));
  const Eigen::VectorXd r = fv - basis.expand(quad.nodes, coef);
  double s = 0.0;
  for (std::size_t i = 0; i < quad.size(); ++i) s += quad.weights[i] * r(i) * r(i);
  return std::sqrt(s);
}

}  // namespace

double bestApproxL2(const KernelEvaluator& ev, int n, const BandlimitedFunction& f) {
  if (n < 0) throw ParameterError("degree must be nonnegative");
  return multiplierErrorL2(ev, n, std::vector<double>(n + 1, 1.0), f);
}

double nearBestErrorL2(const KernelEvaluator& ev, int n, const BandlimitedFunction& f) {
  if (n < 1) throw ParameterError("near-best operator needs n >= 1");
  if (2 * n > ev.maxDegree()) throw CapacityError("near-best operator needs 2n <= max degree");
  return multiplierErrorL2(ev, 2 * n, ev.cutoff().samples(static_cast<double>(n), 2 * n), f);
}

namespace {

struct Range {
  double lo, hi;
  double at(double frac) const { return lo + frac * (hi - lo); }
};

Range coordinateRange(const DomainSpec& spec, bool last) {
  switch (spec.kind()) {
    case DomainKind::Simplex: return {0.0, 1.0};
    case DomainKind::ConicSurface: return last ? Range{0.0, 1.0} : Range{-1.0, 1.0};
    default: return {-1.0, 1.0};
  }
}

}  // namespace

std::vector<KinkFunction> kinkBattery(const DomainSpec& spec, int resolution) {
  const Range ra = coordinateRange(spec, false), rb = coordinateRange(spec, true);
  const double s1 = ra.at(0.55), s2 = rb.at(0.4), s3 = ra.at(0.5);
  const double s4 = ra.at(0.45) + rb.at(0.45);
  auto make = [&](std::string name, std::function<double(const Point&)> g) {
    return KinkFunction{std::move(name), BandlimitedFunction{spec, resolution, std::move(g), false}};
  };
  return {
      make("abs_first", [s1](const Point& p) { return std::abs(p.front() - s1); }),
      make("abs_last", [s2](const Point& p) { return std::abs(p.back() - s2); }),
      make("ramp_first", [s3](const Point& p) { return std::max(0.0, p.front() - s3); }),
      make("cube_abs_first", [s1](const Point& p) { return std::pow(std::abs(p.front() - s1), 3); }),
      make("abs_sum", [s4](const Point& p) { return std::abs(p.front() + p.back() - s4); }),
  };
}

std::vector<ConvergenceRow> convergenceTable(const KernelEvaluator& ev, const std::vector<KinkFunction>& battery,
                                             const std::vector<int>& degrees) {
  std::vector<ConvergenceRow> rows;
  for (const auto& k : battery)
    for (int n : degrees) {
      ConvergenceRow row{k.name, n, bestApproxL2(ev, n, k.f), nearBestErrorL2(ev, n, k.f), 0.0};
      row.ratio = row.near_best / row.best;
      rows.push_back(row);
    }
  return rows;
}

void writeConvergenceCsv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  os << "function,n,best_error,near_best_error,ratio\n";
  const auto old = os.precision(17);
  for (const auto& r : rows)
    os << r.function << ',' << r.n << ',' << r.best << ',' << r.near_best << ',' << r.ratio << '\n';
  os.precision(old);
}

}  // namespace lokern
