#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "lokern/cubature.hpp"

namespace lokern::cli {

namespace {

double spread(double a, double b) { return std::max(a, b) / std::min(a, b); }

}  // namespace

int cmdCubature(const RunConfig& cfg, const DomainSpec& spec) {
  const auto sweep = degreeSweep(cfg, 4);
  const double delta = cubatureDelta(cfg, spec);
  const auto& t = cfg.thresholds;
  bool pass = true;
  nlohmann::json reports = nlohmann::json::array();
  double lo_min = INFINITY, lo_max = 0.0, hi_min = INFINITY, hi_max = 0.0;
  double chr_lo = INFINITY, chr_hi = 0.0;
  for (int n : sweep) {
    const KernelEvaluator ev(spec, std::max(n, 1));
    const CubatureRule rule = computeCubatureWithRetry(ev, n, delta);
    if (rule.halvings > 0)
      std::cerr << "cubature " << spec.name() << " n=" << n << ": delta halved " << rule.halvings << " time(s)\n";
    double sum = 0.0, wmin = INFINITY;
    for (double w : rule.weights) {
      sum += w;
      wmin = std::min(wmin, w);
    }
    const WeightRatioReport ratios = weightLowerBoundCheck(rule);
    const bool ok = rule.residual <= t.cubature_residual && wmin > 0.0 && std::abs(sum - 1.0) <= t.weight_sum;
    pass = pass && ok;
    nlohmann::json j = {{"domain", spec.name()},
                        {"n", n},
                        {"delta_requested", delta},
                        {"delta", rule.delta},
                        {"halvings", rule.halvings},
                        {"nodes", rule.size()},
                        {"residual", rule.residual},
                        {"weight_sum_error", std::abs(sum - 1.0)},
                        {"min_weight", wmin},
                        {"method", rule.method},
                        {"ratio_min", ratios.min_ratio},
                        {"ratio_max", ratios.max_ratio},
                        {"ratio_radius", ratios.radius},
                        {"pass", ok}};
    if (n > 0) {
      lo_min = std::min(lo_min, ratios.min_ratio);
      lo_max = std::max(lo_max, ratios.min_ratio);
      hi_min = std::min(hi_min, ratios.max_ratio);
      hi_max = std::max(hi_max, ratios.max_ratio);
    }
    const std::string stem = "cubature_" + spec.name() + "_n" + std::to_string(n);
    std::ostringstream rule_csv;
    writeCubatureCsv(rule_csv, rule);
    writeText(cfg, stem + ".csv", rule_csv.str());
    if (n > 0) {
      Rng rng(cfg.seed);
      auto pts = samplePoints(spec, 40, rng);
      for (auto& p : boundaryAdjacentPoints(spec, n)) pts.push_back(std::move(p));
      const ChristoffelProfile prof = christoffelProfile(ev, n, pts);
      double a = INFINITY, b = 0.0;
      for (const auto& s : prof.samples) {
        a = std::min(a, s.ratio);
        b = std::max(b, s.ratio);
      }
      chr_lo = std::min(chr_lo, a);
      chr_hi = std::max(chr_hi, b);
      j["christoffel_ratio_min"] = a;
      j["christoffel_ratio_max"] = b;
      std::ostringstream chr_csv;
      writeChristoffelCsv(chr_csv, prof);
      writeText(cfg, "christoffel_" + spec.name() + "_n" + std::to_string(n) + ".csv", chr_csv.str());
    }
    writeJson(cfg, stem + ".json", j);
    reports.push_back(j);
    std::cerr << "cubature " << spec.name() << " n=" << n << " nodes=" << rule.size() << " residual=" << rule.residual
              << '\n';
  }
  nlohmann::json summary = {{"domain", spec.name()}, {"config", configJson(cfg)}, {"reports", reports}};
  if (lo_max > 0.0) {
    const bool stable = spread(lo_min, lo_max) <= t.ratio_stability && spread(hi_min, hi_max) <= t.ratio_stability;
    summary["ratio_min_spread"] = spread(lo_min, lo_max);
    summary["ratio_max_spread"] = spread(hi_min, hi_max);
    summary["christoffel_interval"] = {chr_lo, chr_hi};
    summary["ratio_stable"] = stable;
    pass = pass && stable;
  }
  summary["pass"] = pass;
  writeJson(cfg, "cubature_" + spec.name() + ".json", summary);
  return pass ? kOk : kThresholdFailure;
}

}  // namespace lokern::cli
