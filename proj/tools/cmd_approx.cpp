#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>

#include "cli.hpp"
#include "lokern/approx.hpp"

namespace lokern::cli {

int cmdApprox(const RunConfig& cfg, const DomainSpec& spec) {
  const auto& t = cfg.thresholds;
  Rng rng(cfg.seed);
  nlohmann::json j = {{"domain", spec.name()}, {"config", configJson(cfg)}};
  const bool flagged = spec.kind() == DomainKind::Simplex || spec.kind() == DomainKind::ConicSurface;
  j["multiplier_argument"] = flagged ? "cos_theta (convention not fixed for this domain)" : "cos_theta";

  // Multiplier identity, coefficientwise.
  const int n0 = 8;
  const KernelEvaluator small(spec, n0);
  const OrthonormalBasis basis(spec, n0);
  double identity = 0.0;
  for (double theta : {0.3, 1.1, 2.4}) {
    const auto f = randomPolynomial(spec, n0, rng);
    const Eigen::VectorXd c = expansionCoefficients(small, basis, f);
    const Eigen::VectorXd cs = expansionCoefficients(small, basis, translate(small, theta, f));
    const Eigen::VectorXd expected = applyMultiplier(basis, multiplierSequence(small, theta, n0).m, c);
    identity = std::max(identity, (cs - expected).cwiseAbs().maxCoeff() / (1.0 + c.cwiseAbs().maxCoeff()));
  }
  j["multiplier_identity_error"] = identity;

  // Contraction on random (theta, f).
  double excess = -INFINITY;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % n0;
    const auto f = randomPolynomial(spec, n, rng);
    const double theta = 0.01 + (std::numbers::pi - 0.02) * rng.uniform();
    excess = std::max(excess, l2Norm(spec, translate(small, theta, f), 2 * n) - l2Norm(spec, f, 2 * n));
  }
  j["contraction_max_excess"] = excess;

  bool pass = identity <= t.multiplier_identity && excess <= t.contraction;

  // Near-best constants on the kink battery.
  const auto sweep = degreeSweep(cfg, 8);
  const int top = *std::max_element(sweep.begin(), sweep.end());
  const KernelEvaluator ev(spec, 2 * top);
  const auto battery = kinkBattery(spec);
  const auto rows = convergenceTable(ev, battery, sweep);
  nlohmann::json constants = nlohmann::json::object();
  std::vector<double> cs;
  for (int n : sweep) {
    double c = 0.0;
    for (const auto& r : rows)
      if (r.n == n) c = std::max(c, r.ratio);
    constants[std::to_string(n)] = c;
    cs.push_back(c);
  }
  const double c_spread = *std::max_element(cs.begin(), cs.end()) / *std::min_element(cs.begin(), cs.end());
  j["near_best_constants"] = constants;
  j["near_best_spread"] = c_spread;
  pass = pass && c_spread <= t.ratio_stability;

  nlohmann::json jackson = nlohmann::json::object();
  for (const auto& k : battery) {
    nlohmann::json per = nlohmann::json::array();
    for (int n : sweep) per.push_back({n, modulus(ev, 1.0 / n, 2, k.f), bestApproxL2(ev, n, k.f)});
    jackson[k.name] = per;
  }
  j["modulus_and_best_error"] = jackson;
  j["pass"] = pass;

  std::ostringstream csv;
  writeConvergenceCsv(csv, rows);
  writeText(cfg, "approx_" + spec.name() + "_convergence.csv", csv.str());
  writeJson(cfg, "approx_" + spec.name() + ".json", j);
  std::cerr << "approx " << spec.name() << " identity=" << identity << " contraction=" << excess
            << " near_best_spread=" << c_spread << '\n';
  return pass ? kOk : kThresholdFailure;
}

}  // namespace lokern::cli
