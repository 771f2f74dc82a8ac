#include <algorithm>
#include <cmath>
#include <iostream>

#include "cli.hpp"
#include "lokern/error.hpp"
#include "lokern/frames.hpp"

namespace lokern::cli {

namespace {

double relativeL2(const std::vector<double>& g, const BandlimitedFunction& f, const ReferenceQuadrature& quad) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < quad.size(); ++i) {
    const double fv = f(quad.nodes[i]);
    num += quad.weights[i] * (g[i] - fv) * (g[i] - fv);
    den += quad.weights[i] * fv * fv;
  }
  return std::sqrt(num / den);
}

}  // namespace

int cmdFrame(const RunConfig& cfg, const DomainSpec& spec) {
  if (cfg.levels < 0 || cfg.levels > 8) throw ParameterError("--levels must lie in [0, 8]");
  const int J = cfg.levels;
  const double delta = frameDelta(cfg);
  const KernelEvaluator ev(spec, std::max((1 << J) - 1, 0));
  const FrameSystem fs = buildFrame(ev, J, delta);
  for (const auto& lv : fs.levels())
    if (lv.delta < delta) std::cerr << "frame " << spec.name() << " level " << lv.level << ": delta reduced to " << lv.delta << '\n';
  const auto& t = cfg.thresholds;

  // Band-limited test functions: analysis needs 2 deg f < 2^J, Calderon deg f < 2^{J-1}.
  const int deg = J >= 2 ? (1 << (J - 1)) - 1 : 0;
  const ReferenceQuadrature quad = referenceQuadrature(spec, 2 * std::max(deg, 1));
  Rng rng(cfg.seed);
  double parseval = 0.0, roundtrip = 0.0, calderon_err = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const BandlimitedFunction f = randomPolynomial(spec, deg, rng);
    const FrameCoefficients c = analyze(fs, f);
    const double fn = basisCoefficients(fs.basis(), deg, f).squaredNorm();
    parseval = std::max(parseval, std::abs(c.squaredNorm() - fn) / fn);
    roundtrip = std::max(roundtrip, relativeL2(synthesize(fs, c, quad.nodes), f, quad));
    calderon_err = std::max(calderon_err, relativeL2(calderon(fs, f, quad.nodes), f, quad));
  }

  // Decay constants over three fixed nodes per level.
  nlohmann::json decay = nlohmann::json::object();
  std::vector<double> constants;
  for (int j = 2; j <= std::min(J, 4); ++j) {
    const std::size_t m = fs.level(j).rule.size();
    double worst = 0.0;
    for (std::size_t z : {std::size_t{0}, m / 2, m - 1}) worst = std::max(worst, frameDecayCheck(fs, j, z, cfg.kappa));
    decay[std::to_string(j)] = worst;
    constants.push_back(worst);
  }
  double decay_spread = 1.0;
  if (!constants.empty())
    decay_spread = *std::max_element(constants.begin(), constants.end()) /
                   *std::min_element(constants.begin(), constants.end());

  nlohmann::json ratios = nlohmann::json::object();
  for (int j = 1; j <= J; ++j) {
    const WeightRatioReport r = frameWeightRatios(fs, j);
    ratios[std::to_string(j)] = {r.min_ratio, r.max_ratio};
  }

  const bool exact = parseval <= t.parseval && roundtrip <= t.parseval && calderon_err <= t.calderon;
  const bool stable = decay_spread <= t.ratio_stability;
  nlohmann::json j = {{"domain", spec.name()},
                      {"config", configJson(cfg)},
                      {"frame", nlohmann::json::parse(frameDescriptionJson(fs))},
                      {"test_degree", deg},
                      {"parseval_relative_error", parseval},
                      {"roundtrip_relative_error", roundtrip},
                      {"calderon_relative_error", calderon_err},
                      {"decay_constants", decay},
                      {"decay_spread", decay_spread},
                      {"weight_ratios", ratios},
                      {"pass_exactness", exact},
                      {"pass_decay", stable},
                      {"pass", exact && stable}};
  writeJson(cfg, "frame_" + spec.name() + ".json", j);
  std::cerr << "frame " << spec.name() << " J=" << J << " parseval=" << parseval << " roundtrip=" << roundtrip
            << " calderon=" << calderon_err << " decay_spread=" << decay_spread << '\n';
  return exact && stable ? kOk : kThresholdFailure;
}

}  // namespace lokern::cli
