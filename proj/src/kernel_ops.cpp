#include <algorithm>
#include <cmath>
#include <memory>

#include "geometry.hpp"
#include "lokern/error.hpp"
#include "lokern/kernels.hpp"

namespace lokern {

namespace {

Eigen::VectorXd blockScaled(const OrthonormalBasis& basis, std::span<const double> c, const Eigen::VectorXd& v) {
  Eigen::VectorXd out = v;
  const int top = static_cast<int>(c.size()) - 1;
  for (int k = 0; k <= top; ++k) out.segment(basis.blockStart(k), basis.blockSize(k)) *= c[k];
  return out;
}

}  // namespace

Eigen::MatrixXd multiplierKernelMatrix(const OrthonormalBasis& basis, std::span<const double> c,
                                       const std::vector<Point>& ps, const std::vector<Point>& qs) {
  const int top = static_cast<int>(c.size()) - 1;
  if (top > basis.maxDegree()) throw CapacityError("multiplier length exceeds the basis degree");
  const Eigen::MatrixXd A = basis.matrix(ps, top);
  const Eigen::MatrixXd B = basis.matrix(qs, top);
  Eigen::VectorXd scale(basis.blockStart(top + 1));
  for (int k = 0; k <= top; ++k) scale.segment(basis.blockStart(k), basis.blockSize(k)).setConstant(c[k]);
  return A * scale.asDiagonal() * B.transpose();
}

Eigen::VectorXd basisCoefficients(const OrthonormalBasis& basis, int n, const BandlimitedFunction& f) {
  if (n > basis.maxDegree()) throw CapacityError("projection degree exceeds the basis degree");
  const auto quad = referenceQuadrature(f.spec, n + std::max(f.degree, 0));
  Eigen::VectorXd wf(quad.size());
  for (std::size_t i = 0; i < quad.size(); ++i) wf(i) = quad.weights[i] * f(quad.nodes[i]);
  return basis.transposeApply(quad.nodes, wf, n);
}

std::vector<double> project(const KernelEvaluator& ev, int n, const BandlimitedFunction& f,
                            const std::vector<Point>& points) {
  if (n < 0) throw ParameterError("degree must be nonnegative");
  if (n > ev.maxDegree()) throw CapacityError("projection degree exceeds the evaluator capacity");
  const OrthonormalBasis basis(ev.spec(), n);
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  const Eigen::VectorXd coef = blockScaled(basis, c, basisCoefficients(basis, n, f));
  const Eigen::VectorXd v = basis.expand(points, coef);
  return {v.data(), v.data() + v.size()};
}

std::vector<double> nearBestApply(const KernelEvaluator& ev, int n, const BandlimitedFunction& f,
                                  const std::vector<Point>& points) {
  if (n < 1) throw ParameterError("near-best operator needs n >= 1");
  if (2 * n > ev.maxDegree()) throw CapacityError("near-best operator needs 2n <= max degree");
  const OrthonormalBasis basis(ev.spec(), 2 * n);
  const auto c = ev.cutoff().samples(static_cast<double>(n), 2 * n);
  const Eigen::VectorXd coef = blockScaled(basis, c, basisCoefficients(basis, 2 * n, f));
  const Eigen::VectorXd v = basis.expand(points, coef);
  return {v.data(), v.data() + v.size()};
}

BandlimitedFunction randomPolynomial(const DomainSpec& spec, int n, Rng& rng) {
  auto basis = std::make_shared<OrthonormalBasis>(spec, n);
  auto coef = std::make_shared<std::vector<double>>(basis->size());
  for (double& c : *coef) c = rng.normal();
  BandlimitedFunction f{spec, n, nullptr, true};
  f.f = [basis, coef](const Point& p) {
    std::vector<double> v(basis->size());
    basis->evaluate(p, v);
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += (*coef)[i] * v[i];
    return s;
  };
  return f;
}

double assertion3Integral(const DomainSpec& spec, int n, double kappa, const Point& x,
                          const ReferenceQuadrature& quad) {
  const detail::MetricCache cache(spec, quad.nodes);
  const auto px = cache.pack(x);
  const double r = 1.0 / n;
  double s = 0.0;
  for (std::size_t i = 0; i < quad.size(); ++i) {
    const double dist = std::acos(cache.similarity(px.data(), cache.row(i)));
    s += quad.weights[i] / (ballMeasureSurrogate(spec, quad.nodes[i], r) * std::pow(1.0 + n * dist, kappa));
  }
  return s;
}

double doublingExponent(const DomainSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  auto pts = samplePoints(spec, 400, rng);
  for (int n : {8, 16, 32})
    for (const auto& b : boundaryAdjacentPoints(spec, n)) pts.push_back(b);
  double alpha = 0.0;
  for (int n : {8, 16, 32}) {
    std::vector<double> W(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) W[i] = ballMeasureSurrogate(spec, pts[i], 1.0 / n);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); j += 7) {
        const double base = std::log1p(n * std::acos(similarity(spec, pts[i], pts[j])));
        if (base < 1e-6) continue;
        alpha = std::max(alpha, std::abs(std::log(W[j] / W[i])) / base);
      }
  }
  return alpha;
}

AssertionReport assertionSuite(const KernelEvaluator& ev, int n, double kappa, const AssertionOptions& opt) {
  const DomainSpec& spec = ev.spec();
  if (n < 1 || 2 * n > ev.maxDegree()) throw CapacityError("assertion suite needs 1 <= n and 2n <= max degree");
  AssertionReport rep;
  rep.domain = spec.name();
  rep.n = n;
  rep.kappa = kappa;

  Rng rng(opt.seed);
  auto base = samplePoints(spec, opt.base_points, rng);
  for (const auto& b : boundaryAdjacentPoints(spec, n)) base.push_back(b);
  std::vector<Point> targets = samplePoints(spec, opt.far_points, rng);
  for (const auto& p : base) {
    targets.push_back(p);
    for (double s : {0.5, 1.0, 2.0, 4.0, 8.0})
      for (int dir = 0; dir < 2; ++dir) targets.push_back(offsetPoint(spec, p, s / n, dir));
  }
  // Perturbed copies x1 of each base point x2 for the Lipschitz constant.
  std::vector<Point> moved;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (int dir = 0; dir < 3; ++dir) {
      moved.push_back(offsetPoint(spec, base[i], opt.delta / n * (dir + 1) / 3.0, dir));
      origin.push_back(i);
    }

  const OrthonormalBasis basis(spec, 2 * n);
  const auto c = ev.cutoff().samples(static_cast<double>(n), 2 * n);
  const Eigen::MatrixXd L = multiplierKernelMatrix(basis, c, base, targets);
  const Eigen::MatrixXd Lm = multiplierKernelMatrix(basis, c, moved, targets);

  const double r = 1.0 / n;
  std::vector<double> Wb(base.size()), Wt(targets.size()), Wm(moved.size());
  for (std::size_t i = 0; i < base.size(); ++i) Wb[i] = ballMeasureSurrogate(spec, base[i], r);
  for (std::size_t j = 0; j < targets.size(); ++j) Wt[j] = ballMeasureSurrogate(spec, targets[j], r);
  for (std::size_t i = 0; i < moved.size(); ++i) Wm[i] = ballMeasureSurrogate(spec, moved[i], r);

  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < targets.size(); ++j) {
      const double sim = similarity(spec, base[i], targets[j]);
      if (sim <= -1.0 || sim >= 1.0) ++rep.clamped_pairs;
      const double dist = std::acos(sim);
      rep.A1 = std::max(rep.A1, std::abs(L(i, j)) * std::sqrt(Wb[i] * Wt[j]) * std::pow(1.0 + n * dist, kappa));
      ++rep.pairs;
    }
  for (std::size_t m = 0; m < moved.size(); ++m) {
    const std::size_t i = origin[m];
    const double d12 = std::acos(similarity(spec, moved[m], base[i]));
    if (d12 <= 0.0) continue;
    for (std::size_t j = 0; j < targets.size(); ++j) {
      const double dist = std::acos(similarity(spec, base[i], targets[j]));
      const double diff = std::abs(Lm(m, j) - L(i, j));
      rep.A2 = std::max(rep.A2, diff * std::sqrt(Wm[m] * Wb[i]) * std::pow(1.0 + n * dist, kappa) / (n * d12));
    }
  }

  const double jk = opt.jn_kappa < 0.0 ? kappa : opt.jn_kappa;
  const auto quad = referenceQuadrature(spec, std::max(64, 16 * n));
  std::vector<Point> xs(base.begin(), base.begin() + std::min<std::size_t>(opt.jn_points, opt.base_points));
  for (const auto& b : boundaryAdjacentPoints(spec, n)) xs.push_back(b);
  for (const auto& x : xs) rep.Jn = std::max(rep.Jn, assertion3Integral(spec, n, jk, x, quad));
  return rep;
}

}  // namespace lokern
