#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "lokern/error.hpp"
#include "lokern/orthopoly.hpp"

using namespace lokern;

namespace {

constexpr double kPi = std::numbers::pi;

double legendreBonnet(int n, double t) {
  double p0 = 1.0, p1 = t;
  if (n == 0) return p0;
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2 * k + 1) * t * p1 - k * p0) / (k + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

// C_n^lambda via its own recurrence, independent of the Jacobi code.
double gegenbauerC(int n, double lam, double t) {
  double c0 = 1.0, c1 = 2.0 * lam * t;
  if (n == 0) return c0;
  for (int k = 1; k < n; ++k) {
    const double c2 = (2.0 * (k + lam) * t * c1 - (k + 2.0 * lam - 1.0) * c0) / (k + 1);
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

// int (1-t)^a (1+t)^{b+k} dt over [-1, 1].
double shiftedMoment(double a, double b, int k) {
  const double bb = b + k;
  return std::exp((a + bb + 1) * std::log(2.0) + std::lgamma(a + 1) + std::lgamma(bb + 1) - std::lgamma(a + bb + 2));
}

}  // namespace

TEST_CASE("jacobi values") {
  CHECK(evalJacobi(2, {1, 0}, 1.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(evalJacobi(0, {0.3, 0.7}, 0.2) == 1.0);
  const JacobiParams p{0.3, -0.4};
  CHECK(evalJacobi(1, p, 0.25) == doctest::Approx((p.alpha - p.beta) / 2 + (p.alpha + p.beta + 2) * 0.25 / 2));
  for (int n = 0; n <= 30; ++n) {
    for (double t : {-1.0, -0.7, 0.0, 0.33, 1.0}) {
      CHECK(evalJacobi(n, {0, 0}, t) == doctest::Approx(legendreBonnet(n, t)).epsilon(1e-12));
    }
  }
  std::vector<double> all(11);
  evalJacobiAll(10, {1.5, 0.5}, 0.4, all);
  for (int n = 0; n <= 10; ++n) CHECK(all[n] == doctest::Approx(evalJacobi(n, {1.5, 0.5}, 0.4)));
}

TEST_CASE("jacobi norms") {
  CHECK(jacobiNorm(0, {-0.5, -0.5}) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(jacobiNorm(3, {0, 0}) == doctest::Approx(2.0 / 7.0).epsilon(1e-14));
  CHECK(jacobiMass({0.5, 0.5}) == doctest::Approx(kPi / 2).epsilon(1e-14));
  // Norms against a direct quadrature sum.
  const auto rule = gaussJacobi(40, {-0.5, -0.5});
  for (int n = 1; n <= 12; ++n) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * std::pow(evalJacobi(n, {-0.5, -0.5}, rule.nodes[i]), 2);
    CHECK(jacobiNorm(n, {-0.5, -0.5}) == doctest::Approx(s).epsilon(1e-12));
  }
}

TEST_CASE("normalized kernels") {
  CHECK(evalZGegenbauer(4, 0.5, 1.0) == doctest::Approx(9.0).epsilon(1e-13));
  CHECK(evalZGegenbauer(2, 1.0, 0.0) == doctest::Approx(-3.0).epsilon(1e-13));
  CHECK(evalZGegenbauer(0, 0.7, 0.3) == doctest::Approx(1.0));
  for (int n = 1; n <= 20; ++n) {
    const double th = 0.37 * n;
    CHECK(evalZGegenbauer(n, 0.0, std::cos(th)) == doctest::Approx(2.0 * std::cos(n * th)).epsilon(1e-11));
    for (double lam : {0.5, 1.0, 2.5}) {
      CHECK(evalZGegenbauer(n, lam, 0.41) == doctest::Approx((n + lam) / lam * gegenbauerC(n, lam, 0.41)).epsilon(1e-11));
      const double a = lam - 0.5;
      CHECK(jacobiMass({a, a}) * evalZJacobi(n, {a, a}, 0.41) ==
            doctest::Approx(evalZGegenbauer(n, lam, 0.41)).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(evalZGegenbauer(2, -0.5, 0.0), ParameterError);
}

TEST_CASE("gauss-jacobi exactness") {
  const auto leg = gaussJacobi(2, {0, 0});
  double s = 0.0;
  for (std::size_t i = 0; i < leg.size(); ++i) s += leg.weights[i] * leg.nodes[i] * leg.nodes[i];
  CHECK(s == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(leg.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));

  for (JacobiParams p : {JacobiParams{0, 0}, JacobiParams{-0.5, -0.5}, JacobiParams{2.5, -0.3}, JacobiParams{0.5, 7.0},
                         JacobiParams{-0.9, 1.5}}) {
    for (int m : {1, 3, 8, 25, 80}) {
      const auto rule = gaussJacobi(m, p);
      REQUIRE(rule.size() == static_cast<std::size_t>(m));
      CHECK(rule.exact_degree == 2 * m - 1);
      for (std::size_t i = 0; i < rule.size(); ++i) {
        CHECK(rule.weights[i] > 0.0);
        if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
      }
      for (int k : {0, 1, m, 2 * m - 1}) {
        double q = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) q += rule.weights[i] * std::pow(1.0 + rule.nodes[i], k);
        CHECK(q == doctest::Approx(shiftedMoment(p.alpha, p.beta, k)).epsilon(1e-11));
      }
    }
  }
  const auto prob = gaussJacobiProbability(10, {1.0, 2.0});
  double w = 0.0;
  for (double x : prob.weights) w += x;
  CHECK(w == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(gaussJacobi(0, {0, 0}), ParameterError);
  CHECK_THROWS_AS(gaussJacobi(3, {-1.0, 0}), ParameterError);
}

TEST_CASE("orthonormal jacobi") {
  const JacobiParams p{0.7, -0.2};
  const OrthonormalJacobi q(p, 30);
  const auto rule = gaussJacobiProbability(40, p);
  std::vector<double> v(31);
  std::vector<std::vector<double>> gram(31, std::vector<double>(31, 0.0));
  for (std::size_t i = 0; i < rule.size(); ++i) {
    q.evaluate(rule.nodes[i], v);
    for (int a = 0; a <= 30; ++a)
      for (int b = 0; b <= 30; ++b) gram[a][b] += rule.weights[i] * v[a] * v[b];
  }
  for (int a = 0; a <= 30; ++a)
    for (int b = 0; b <= 30; ++b) CHECK(gram[a][b] == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-11).scale(1.0));

  // q_k(1) q_k(t) equals the normalized kernel times the mass.
  for (int k = 0; k <= 30; ++k) {
    q.evaluate(0.3, v);
    CHECK(q.atOne(k) * v[k] == doctest::Approx(jacobiMass(p) * evalZJacobi(k, p, 0.3)).epsilon(1e-10));
  }

  const OrthonormalJacobi sym({1.5, 1.5}, 12);
  std::vector<double> h(13), direct(13);
  const double z = 0.3, r = 0.8;
  sym.evaluateHomogeneous(z, r * r, 12, h);
  sym.evaluate(z / r, direct);
  for (int k = 0; k <= 12; ++k) CHECK(h[k] == doctest::Approx(std::pow(r, k) * direct[k]).epsilon(1e-12));
}

TEST_CASE("gauss rule from a discrete measure") {
  const auto fine = gaussJacobiProbability(200, {0, 0});
  const auto coarse = gaussFromDiscrete(fine.nodes, fine.weights, 12);
  const auto ref = gaussJacobiProbability(12, {0, 0});
  REQUIRE(coarse.nodes.size() == 12);
  for (int i = 0; i < 12; ++i) {
    CHECK(coarse.nodes[i] == doctest::Approx(ref.nodes[i]).epsilon(1e-11).scale(1.0));
    CHECK(coarse.weights[i] == doctest::Approx(ref.weights[i]).epsilon(1e-11));
  }
  const std::vector<double> atoms{-0.5, 0.25, 0.25, 0.9};
  const std::vector<double> w{0.25, 0.25, 0.25, 0.25};
  const auto few = gaussFromDiscrete(atoms, w, 10);
  CHECK(few.nodes.size() == 3);
  double m2 = 0.0, ref2 = 0.0;
  for (std::size_t i = 0; i < few.nodes.size(); ++i) m2 += few.weights[i] * std::pow(few.nodes[i], 5);
  for (std::size_t i = 0; i < atoms.size(); ++i) ref2 += w[i] * std::pow(atoms[i], 5);
  CHECK(m2 == doctest::Approx(ref2).epsilon(1e-12));
}
