#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lokern/approx.hpp"
#include "lokern/error.hpp"

using namespace lokern;

namespace {

std::vector<DomainSpec> specs() {
  return {DomainSpec::interval(0, 0),        DomainSpec::interval(-0.5, -0.5), DomainSpec::sphere(3),
          DomainSpec::ball(2, 0.0),          DomainSpec::ball(2, 0.5),         DomainSpec::simplex(2, {0, 0, 0}),
          DomainSpec::simplex(2, {0.5, 0.5, 0.5}), DomainSpec::conicSurface(2, 0.5)};
}

BandlimitedFunction firstCoordinate(const DomainSpec& spec) {
  return {spec, 1, [](const Point& p) { return p[0]; }, true};
}

BandlimitedFunction constantOne(const DomainSpec& spec) {
  return {spec, 0, [](const Point&) { return 1.0; }, true};
}

double coefficientNorm(const KernelEvaluator& ev, const BandlimitedFunction& f) {
  const OrthonormalBasis basis(ev.spec(), f.degree);
  return expansionCoefficients(ev, basis, f).norm();
}

}  // namespace

TEST_CASE("multiplier sequences start at one and stay in [-1, 1]") {
  for (const auto& s : specs()) {
    const KernelEvaluator ev(s, 24);
    for (double theta : {0.05, 0.7, 2.0, 3.1}) {
      const auto ms = multiplierSequence(ev, theta, 24);
      CHECK(ms[0] == doctest::Approx(1.0).epsilon(1e-14));
      for (double m : ms.m) CHECK(std::abs(m) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("multiplier sequences reject bad angles and interval weights without the bound") {
  const KernelEvaluator ev(DomainSpec::interval(0.0, 0.0), 4);
  CHECK_THROWS_AS(multiplierSequence(ev, 0.0, 4), ParameterError);
  CHECK_THROWS_AS(multiplierSequence(ev, std::numbers::pi, 4), ParameterError);
  const KernelEvaluator skew(DomainSpec::interval(0.0, 0.5), 4);
  CHECK_THROWS_AS(multiplierSequence(skew, 0.3, 4), ParameterError);
}

TEST_CASE("chebyshev closed forms for translation, difference and modulus") {
  const auto spec = DomainSpec::interval(-0.5, -0.5);
  const KernelEvaluator ev(spec, 8);
  const auto T1 = firstCoordinate(spec);
  Rng rng(11);
  const auto pts = samplePoints(spec, 25, rng);
  for (double theta : {0.1, 0.9, 2.5}) {
    const auto S = translate(ev, theta, T1);
    const auto D = differenceOp(ev, theta, 2, T1);
    for (const auto& p : pts) {
      CHECK(std::abs(S(p) - std::cos(theta) * p[0]) <= 1e-10);
      CHECK(std::abs(D(p) - (1.0 - std::cos(theta)) * p[0]) <= 1e-10);
    }
  }
  const double norm = std::sqrt(0.5);
  CHECK(coefficientNorm(ev, T1) == doctest::Approx(norm).epsilon(1e-13));
  for (double t : {0.05, 0.5, 1.5, 3.0})
    CHECK(std::abs(modulus(ev, t, 2, T1) - (1.0 - std::cos(t)) * norm) <= 1e-10);
}

TEST_CASE("constants are fixed by translation and killed by differences") {
  for (const auto& s : specs()) {
    const KernelEvaluator ev(s, 6);
    const auto one = constantOne(s);
    Rng rng(3);
    const auto pts = samplePoints(s, 10, rng);
    const auto S = translate(ev, 0.8, one);
    const auto D = differenceOp(ev, 0.8, 2, one);
    for (const auto& p : pts) {
      CHECK(std::abs(S(p) - 1.0) <= 1e-12);
      CHECK(std::abs(D(p)) <= 1e-12);
    }
    CHECK(modulus(ev, 1.0, 2, one) <= 1e-12);
  }
}

TEST_CASE("translation multiplies each degree component by its multiplier") {
  for (const auto& s : specs()) {
    const int n = 6;
    const KernelEvaluator ev(s, n);
    Rng rng(17);
    const auto f = randomPolynomial(s, n, rng);
    const OrthonormalBasis basis(s, n);
    const Eigen::VectorXd c = expansionCoefficients(ev, basis, f);
    for (double theta : {0.3, 1.7}) {
      const auto ms = multiplierSequence(ev, theta, n);
      const Eigen::VectorXd cs = expansionCoefficients(ev, basis, translate(ev, theta, f));
      for (int k = 0; k <= n; ++k)
        for (int i = basis.blockStart(k); i < basis.blockStart(k) + basis.blockSize(k); ++i)
          CHECK(std::abs(cs(i) - ms[k] * c(i)) <= 1e-9 * (1.0 + std::abs(c(i))));
    }
  }
}

TEST_CASE("translation is a contraction on random polynomials and angles") {
  const auto all = specs();
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& s = all[trial % all.size()];
    const int n = 1 + trial % 7;
    const KernelEvaluator ev(s, n);
    const auto f = randomPolynomial(s, n, rng);
    const double theta = 0.01 + (std::numbers::pi - 0.02) * rng.uniform();
    const double before = l2Norm(s, f, 2 * n);
    const double after = l2Norm(s, translate(ev, theta, f), 2 * n);
    CHECK(after <= before + 1e-9);
  }
}

TEST_CASE("translation converges to the identity as the angle shrinks") {
  for (const auto& s : specs()) {
    const int n = 8;
    const KernelEvaluator ev(s, n);
    Rng rng(5);
    const auto f = randomPolynomial(s, n, rng);
    const OrthonormalBasis basis(s, n);
    const Eigen::VectorXd c = expansionCoefficients(ev, basis, f);
    double previous = INFINITY;
    for (double theta : {0.4, 0.2, 0.1, 0.05}) {
      const Eigen::VectorXd cs = expansionCoefficients(ev, basis, translate(ev, theta, f));
      const double gap = (cs - c).norm();
      CHECK(gap < previous);
      previous = gap;
    }
    CHECK(previous < 0.05 * c.norm());
  }
}

TEST_CASE("fourth differences are second differences applied twice") {
  for (const auto& s : specs()) {
    const KernelEvaluator ev(s, 5);
    Rng rng(8);
    const auto f = randomPolynomial(s, 5, rng);
    const auto pts = samplePoints(s, 10, rng);
    const auto d4 = differenceOp(ev, 0.6, 4, f);
    const auto d22 = differenceOp(ev, 0.6, 2, differenceOp(ev, 0.6, 2, f));
    for (const auto& p : pts) CHECK(std::abs(d4(p) - d22(p)) <= 1e-10 * (1.0 + std::abs(d4(p))));
  }
}

TEST_CASE("unsupported orders and norms are rejected") {
  const auto spec = DomainSpec::sphere(3);
  const KernelEvaluator ev(spec, 4);
  const auto f = firstCoordinate(spec);
  CHECK_THROWS_AS(differenceOp(ev, 0.5, 3, f), ParameterError);
  CHECK_THROWS_AS(differenceOp(ev, 0.5, 0, f), ParameterError);
  CHECK_THROWS_AS(modulus(ev, 0.5, 2, f, 1), ParameterError);
  CHECK_THROWS_AS(modulus(ev, 4.0, 2, f), ParameterError);
  Rng rng(1);
  CHECK_THROWS_AS(translate(ev, 0.5, randomPolynomial(spec, 6, rng)), CapacityError);
}

TEST_CASE("modulus grows with the scale") {
  for (const auto& s : specs()) {
    const KernelEvaluator ev(s, 6);
    Rng rng(9);
    const auto f = randomPolynomial(s, 6, rng);
    double previous = 0.0;
    for (double t : {0.05, 0.1, 0.3, 0.8, 1.6}) {
      const double w = modulus(ev, t, 2, f);
      CHECK(w >= previous);
      previous = w;
    }
  }
}

TEST_CASE("best approximation error vanishes on polynomials and decreases with the degree") {
  for (const auto& s : specs()) {
    const KernelEvaluator ev(s, 8);
    Rng rng(21);
    const auto p = randomPolynomial(s, 4, rng);
    const double scale = l2Norm(s, p, 8);
    CHECK(bestApproxL2(ev, 4, p) <= 1e-9 * scale);
    CHECK(bestApproxL2(ev, 6, p) <= 1e-9 * scale);
    const auto kink = kinkBattery(s, 64).front().f;
    double previous = INFINITY;
    for (int n = 0; n <= 8; ++n) {
      const double e = bestApproxL2(ev, n, kink);
      CHECK(e <= previous + 1e-12);
      previous = e;
    }
  }
}

TEST_CASE("a single-term tail equals its projection norm") {
  const auto spec = DomainSpec::interval(0.0, 0.0);
  for (int n : {3, 7, 12}) {
    const KernelEvaluator ev(spec, n + 1);
    const BandlimitedFunction f{spec, n + 1, [n](const Point& p) { return std::cos((n + 1) * std::acos(p[0])); }, true};
    const OrthonormalBasis basis(spec, n + 1);
    const double top = expansionCoefficients(ev, basis, f)(basis.blockStart(n + 1));
    CHECK(bestApproxL2(ev, n, f) == doctest::Approx(std::abs(top)).epsilon(1e-10));
  }
}

TEST_CASE("near-best operator reproduces low-degree polynomials") {
  for (const auto& s : specs()) {
    const KernelEvaluator ev(s, 12);
    Rng rng(4);
    const auto p = randomPolynomial(s, 6, rng);
    CHECK(nearBestErrorL2(ev, 6, p) <= 1e-9 * l2Norm(s, p, 12));
  }
}

TEST_CASE("near-best sandwich constants are stable on the interval battery") {
  for (const auto& s : {DomainSpec::interval(0.0, 0.0), DomainSpec::interval(-0.5, -0.5)}) {
    const KernelEvaluator ev(s, 64);
    double c8 = 0.0, c32 = 0.0;
    for (const auto& k : kinkBattery(s)) {
      for (int n : {8, 16, 32}) {
        const double err = nearBestErrorL2(ev, n, k.f);
        CHECK(bestApproxL2(ev, 2 * n, k.f) <= err * (1.0 + 1e-9));
        const double ratio = err / bestApproxL2(ev, n, k.f);
        if (n == 8) c8 = std::max(c8, ratio);
        if (n == 32) c32 = std::max(c32, ratio);
      }
    }
    CHECK(c8 > 0.0);
    CHECK(c32 / c8 <= 2.0);
    CHECK(c8 / c32 <= 2.0);
  }
}

TEST_CASE("modulus and best error shrink together on the battery") {
  const auto spec = DomainSpec::interval(0.0, 0.0);
  const KernelEvaluator ev(spec, 64);
  for (const auto& k : kinkBattery(spec)) {
    double w_prev = INFINITY, e_prev = INFINITY;
    for (int n : {8, 16, 32}) {
      const double w = modulus(ev, 1.0 / n, 2, k.f);
      const double e = bestApproxL2(ev, n, k.f);
      CHECK(w < w_prev);
      CHECK(e < e_prev);
      w_prev = w;
      e_prev = e;
    }
  }
}

TEST_CASE("convergence table csv has a header and one row per entry") {
  const auto spec = DomainSpec::interval(0.0, 0.0);
  const KernelEvaluator ev(spec, 16);
  const auto rows = convergenceTable(ev, kinkBattery(spec, 64), {4, 8});
  CHECK(rows.size() == 10);
  std::ostringstream os;
  writeConvergenceCsv(os, rows);
  const std::string out = os.str();
  CHECK(out.rfind("function,n,best_error,near_best_error,ratio\n", 0) == 0);
  CHECK(std::count(out.begin(), out.end(), '\n') == 11);
}
