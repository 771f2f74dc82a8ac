#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "lokern/error.hpp"
#include "lokern/kernels.hpp"

using namespace lokern;

namespace {

std::vector<DomainSpec> specs() {
  return {DomainSpec::interval(0, 0),         DomainSpec::interval(-0.5, -0.5), DomainSpec::interval(1.0, 0.5),
          DomainSpec::sphere(2),              DomainSpec::sphere(3),            DomainSpec::sphere(4),
          DomainSpec::ball(2, 0.0),           DomainSpec::ball(2, 0.5),         DomainSpec::ball(3, 1.5),
          DomainSpec::ball(2, 0.3),           DomainSpec::simplex(2, {0, 0, 0}), DomainSpec::simplex(2, {0.5, 0.5, 0.5}),
          DomainSpec::simplex(3, {1, 0, 0.5, 2}), DomainSpec::conicSurface(2, 0.5), DomainSpec::conicSurface(2, -0.25),
          DomainSpec::conicSurface(3, 0.0)};
}

double basisKernel(const OrthonormalBasis& b, int n, const Point& p, const Point& q) {
  std::vector<double> u(b.size()), v(b.size());
  b.evaluate(p, u);
  b.evaluate(q, v);
  double s = 0.0;
  for (int i = b.blockStart(n); i < b.blockStart(n + 1); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace

TEST_CASE("kernel examples") {
  const auto s3 = DomainSpec::sphere(3);
  const KernelEvaluator ev(s3, 20);
  CHECK(reproducingKernel(ev, 4, {0, 0, 1}, {0, 0, 1}) == doctest::Approx(9.0).epsilon(1e-13));
  for (int n = 0; n <= 10; ++n) CHECK(christoffelKernelDiag(ev, n, {0.6, 0.8, 0}) == doctest::Approx((n + 1.0) * (n + 1.0)));
  CHECK_THROWS_AS(reproducingKernel(ev, 21, {0, 0, 1}, {0, 0, 1}), CapacityError);
  CHECK_THROWS_AS(localizedKernel(ev, 11, {0, 0, 1}, {0, 0, 1}), CapacityError);
  const KernelEvaluator cheb(DomainSpec::interval(-0.5, -0.5), 30);
  for (int n = 0; n <= 30; ++n) CHECK(christoffelKernelDiag(cheb, n, {1.0}) == doctest::Approx(2.0 * n + 1.0).epsilon(1e-12));
  for (const auto& spec : specs()) {
    const KernelEvaluator e(spec, 4);
    Rng rng(1);
    const auto pts = samplePoints(spec, 2, rng);
    CHECK(e.reproducingKernel(0, pts[0], pts[1]) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("interval product form matches the recurrence sum") {
  for (JacobiParams jp : {JacobiParams{0, 0}, JacobiParams{-0.5, -0.5}, JacobiParams{2.0, 0.5}}) {
    const KernelEvaluator ev(DomainSpec::interval(jp.alpha, jp.beta), 40);
    const double mass = jacobiMass(jp);
    for (int n = 0; n <= 40; ++n)
      for (auto [t, s] : {std::pair{0.3, -0.7}, std::pair{1.0, 0.99}, std::pair{-1.0, 0.2}}) {
        const double oracle = mass * evalJacobi(n, jp, t) * evalJacobi(n, jp, s) / jacobiNorm(n, jp);
        CHECK(std::abs(ev.reproducingKernel(n, {t}, {s}) - oracle) <= 1e-12 * std::max(1.0, std::abs(oracle)));
      }
  }
}

TEST_CASE("addition formulas agree with basis sums") {
  for (const auto& spec : specs()) {
    const int N = spec.kind() == DomainKind::Interval ? 30 : (spec.dim() >= 3 ? 10 : 16);
    const KernelEvaluator ev(spec, N);
    const OrthonormalBasis basis(spec, N);
    Rng rng(5);
    auto pts = samplePoints(spec, 4, rng);
    for (const auto& b : boundaryAdjacentPoints(spec, 4)) pts.push_back(b);
    double worst = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i; j < pts.size(); j += 2)
        for (int n = 0; n <= N; ++n) {
          const double a = ev.reproducingKernel(n, pts[i], pts[j]);
          const double b = basisKernel(basis, n, pts[i], pts[j]);
          worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), static_cast<double>(dimensionVn(spec, n))));
        }
    INFO(spec.name());
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("symmetry, positive semidefiniteness and inner-rule exactness") {
  for (const auto& spec : specs()) {
    const KernelEvaluator ev(spec, 12);
    const KernelEvaluator fine(spec, 12, CutoffFunction(), 2);
    Rng rng(9);
    const auto pts = samplePoints(spec, 30, rng);
    for (int n : {3, 12}) {
      Eigen::MatrixXd G(30, 30);
      for (int i = 0; i < 30; ++i)
        for (int j = 0; j < 30; ++j) G(i, j) = ev.reproducingKernel(n, pts[i], pts[j]);
      CHECK((G - G.transpose()).cwiseAbs().maxCoeff() == 0.0);
      const double lo = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(G).eigenvalues().minCoeff();
      CHECK(lo >= -1e-8 * G.trace());
      double change = 0.0;
      for (int i = 0; i < 6; ++i)
        change = std::max(change, std::abs(ev.reproducingKernel(n, pts[i], pts[i + 1]) -
                                           fine.reproducingKernel(n, pts[i], pts[i + 1])));
      INFO(spec.name());
      CHECK(change <= 1e-12 * std::max(1.0, static_cast<double>(dimensionVn(spec, n))));
    }
  }
}

TEST_CASE("reproducing property") {
  for (const auto& spec : specs()) {
    const int n = spec.kind() == DomainKind::Simplex && spec.dim() == 3 ? 6 : 10;
    const KernelEvaluator ev(spec, n);
    const auto quad = referenceQuadrature(spec, 2 * n);
    Rng rng(21);
    const auto xs = samplePoints(spec, 3, rng);
    std::vector<std::vector<double>> K(xs.size(), std::vector<double>(quad.size()));
    const std::vector<double> ones(n + 1, 1.0);
    for (std::size_t a = 0; a < xs.size(); ++a)
      for (std::size_t i = 0; i < quad.size(); ++i) K[a][i] = ev.multiplierKernel(ones, xs[a], quad.nodes[i]);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const auto f = randomPolynomial(spec, n, rng);
      std::vector<double> fy(quad.size());
      for (std::size_t i = 0; i < quad.size(); ++i) fy[i] = f(quad.nodes[i]);
      for (std::size_t a = 0; a < xs.size(); ++a) {
        double s = 0.0;
        for (std::size_t i = 0; i < quad.size(); ++i) s += quad.weights[i] * K[a][i] * fy[i];
        worst = std::max(worst, std::abs(s - f(xs[a])));
      }
    }
    INFO(spec.name());
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("localized kernel") {
  for (const auto& spec : specs()) {
    const int n = 6;
    const KernelEvaluator ev(spec, 2 * n);
    const auto quad = referenceQuadrature(spec, 2 * n);
    Rng rng(4);
    const auto p = samplePoints(spec, 1, rng)[0];
    double s = 0.0;
    for (std::size_t i = 0; i < quad.size(); ++i) s += quad.weights[i] * localizedKernel(ev, n, p, quad.nodes[i]);
    CHECK(s == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(localizedKernel(ev, n, p, p) >= christoffelKernelDiag(ev, n, p));
  }
}

TEST_CASE("projection and near-best operator") {
  const auto s3 = DomainSpec::sphere(3);
  const KernelEvaluator ev(s3, 16);
  const BandlimitedFunction x1{s3, 1, [](const Point& p) { return p[0]; }};
  Rng rng(2);
  const auto pts = samplePoints(s3, 10, rng);
  const auto p1 = project(ev, 1, x1, pts);
  const auto p2 = project(ev, 2, x1, pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(p1[i] == doctest::Approx(pts[i][0]).epsilon(1e-12));
    CHECK(std::abs(p2[i]) < 1e-13);
  }
  for (const auto& spec : specs()) {
    const KernelEvaluator e(spec, 16);
    Rng r2(8);
    const auto f = randomPolynomial(spec, 8, r2);
    const auto xs = samplePoints(spec, 8, r2);
    const auto g = nearBestApply(e, 8, f, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(g[i] == doctest::Approx(f(xs[i])).epsilon(1e-9).scale(1.0));
    const BandlimitedFunction one{spec, 0, [](const Point&) { return 1.0; }};
    for (double v : nearBestApply(e, 3, one, xs)) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    for (int n : {0, 2}) {
      const auto pr = project(e, n, one, xs);
      for (double v : pr) CHECK(v == doctest::Approx(n == 0 ? 1.0 : 0.0).epsilon(1e-12).scale(1.0));
    }
    // proj_n of the reproducing kernel itself.
    const Point x0 = xs[0];
    const BandlimitedFunction kern{spec, 4, [&](const Point& y) { return e.reproducingKernel(4, x0, y); }};
    const auto pk = project(e, 4, kern, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(pk[i] == doctest::Approx(kern(xs[i])).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("assertion suite smoke") {
  const auto s3 = DomainSpec::sphere(3);
  const KernelEvaluator ev(s3, 16);
  AssertionOptions opt;
  opt.base_points = 8;
  opt.far_points = 32;
  const auto rep = assertionSuite(ev, 8, 4.0, opt);
  CHECK(rep.A1 > 0.0);
  CHECK(rep.A2 > 0.0);
  CHECK(rep.Jn > 0.0);
  CHECK(rep.pairs > 0);
}
