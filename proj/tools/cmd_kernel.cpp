#include <algorithm>
#include <array>
#include <cmath>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "lokern/kernels.hpp"

namespace lokern::cli {

namespace {

double spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi / *lo;
}

// |L_n(x0, y)| and its normalized form against d(x0, y), sorted by distance.
std::string decayCsv(const KernelEvaluator& ev, int n, double kappa, std::uint64_t seed) {
  const DomainSpec& spec = ev.spec();
  Rng rng(seed);
  const Point x0 = samplePoints(spec, 1, rng).front();
  auto ys = samplePoints(spec, 400, rng);
  const double wx = ballMeasureSurrogate(spec, x0, 1.0 / n);
  std::vector<std::array<double, 3>> rows;
  for (const auto& y : ys) {
    const double d = distance(spec, x0, y);
    const double k = localizedKernel(ev, n, x0, y);
    const double scaled =
        std::abs(k) * std::sqrt(wx * ballMeasureSurrogate(spec, y, 1.0 / n)) * std::pow(1.0 + n * d, kappa);
    rows.push_back({d, k, scaled});
  }
  std::sort(rows.begin(), rows.end());
  std::ostringstream os;
  os.precision(17);
  os << "distance,kernel,scaled\n";
  for (const auto& r : rows) os << r[0] << ',' << r[1] << ',' << r[2] << '\n';
  return os.str();
}

}  // namespace

int cmdKernel(const RunConfig& cfg, const DomainSpec& spec) {
  const auto sweep = degreeSweep(cfg, 8);
  const double alpha_w = doublingExponent(spec, cfg.seed);
  std::vector<double> a1, a2, jn;
  nlohmann::json reports = nlohmann::json::array();
  for (int n : sweep) {
    const KernelEvaluator ev(spec, 2 * n);
    AssertionOptions opt;
    opt.seed = cfg.seed;
    opt.jn_kappa = alpha_w + cfg.kappa;
    const AssertionReport r = assertionSuite(ev, n, cfg.kappa, opt);
    const nlohmann::json j = {{"domain", r.domain}, {"n", r.n},          {"kappa", r.kappa},
                              {"jn_kappa", opt.jn_kappa}, {"A1", r.A1},  {"A2", r.A2},
                              {"Jn", r.Jn},          {"pairs", r.pairs}, {"clamped_pairs", r.clamped_pairs}};
    const std::string stem = "kernel_" + spec.name() + "_n" + std::to_string(n);
    writeJson(cfg, stem + ".json", j);
    writeText(cfg, stem + "_decay.csv", decayCsv(ev, n, cfg.kappa, cfg.seed));
    reports.push_back(j);
    a1.push_back(r.A1);
    a2.push_back(r.A2);
    jn.push_back(r.Jn);
    std::cerr << "kernel " << spec.name() << " n=" << n << " A1=" << r.A1 << " A2=" << r.A2 << " Jn=" << r.Jn << '\n';
  }
  const auto& t = cfg.thresholds;
  const double a1_limit = spec.kind() == DomainKind::Sphere ? t.sphere_assertion_ratio : t.assertion_ratio;
  const bool pass = spread(a1) <= a1_limit && spread(a2) <= t.assertion_ratio && spread(jn) <= t.assertion_ratio;
  writeJson(cfg, "kernel_" + spec.name() + ".json",
            {{"domain", spec.name()},
             {"config", configJson(cfg)},
             {"doubling_exponent", alpha_w},
             {"reports", reports},
             {"A1_ratio", spread(a1)},
             {"A2_ratio", spread(a2)},
             {"Jn_ratio", spread(jn)},
             {"pass", pass}});
  return pass ? kOk : kThresholdFailure;
}

}  // namespace lokern::cli
