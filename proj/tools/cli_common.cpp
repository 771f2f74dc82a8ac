#include <fstream>

#include "cli.hpp"
#include "lokern/error.hpp"

namespace lokern::cli {

namespace {

double pick(const std::vector<double>& v, std::size_t i, double fallback) {
  if (v.empty()) return fallback;
  return v.size() == 1 ? v[0] : v.at(i);
}

}  // namespace

std::vector<DomainSpec> makeDomains(const RunConfig& cfg) {
  const DomainKind kind = domainKindFromString(cfg.domain);
  std::vector<DomainSpec> out;
  switch (kind) {
    case DomainKind::Interval: {
      const std::size_t count = std::max<std::size_t>({1, cfg.alpha.size(), cfg.beta.size()});
      if ((cfg.alpha.size() > 1 && cfg.alpha.size() != count) || (cfg.beta.size() > 1 && cfg.beta.size() != count))
        throw ParameterError("--alpha and --beta lists must have equal length");
      for (std::size_t i = 0; i < count; ++i)
        out.push_back(DomainSpec::interval(pick(cfg.alpha, i, 0.0), pick(cfg.beta, i, 0.0)));
      break;
    }
    case DomainKind::Sphere: out.push_back(DomainSpec::sphere(cfg.dim > 0 ? cfg.dim : 3)); break;
    case DomainKind::Ball: {
      const std::vector<double> mus = cfg.mu.empty() ? std::vector<double>{0.0} : cfg.mu;
      for (double m : mus) out.push_back(DomainSpec::ball(cfg.dim > 0 ? cfg.dim : 2, m));
      break;
    }
    case DomainKind::Simplex: {
      const int d = cfg.dim > 0 ? cfg.dim : 2;
      std::vector<double> g = cfg.gamma;
      if (g.empty()) g.assign(d + 1, 0.0);
      if (g.size() == 1) g.assign(d + 1, g[0]);
      out.push_back(DomainSpec::simplex(d, g));
      break;
    }
    case DomainKind::ConicSurface: {
      const std::vector<double> gs = cfg.gamma.empty() ? std::vector<double>{0.0} : cfg.gamma;
      for (double g : gs) out.push_back(DomainSpec::conicSurface(cfg.dim > 0 ? cfg.dim : 2, g));
      break;
    }
  }
  return out;
}

std::vector<int> degreeSweep(const RunConfig& cfg, int first) {
  if (!cfg.degrees.empty()) return cfg.degrees;
  std::vector<int> out;
  for (int n = first; n <= cfg.nmax; n *= 2) out.push_back(n);
  if (out.empty()) out.push_back(cfg.nmax);
  return out;
}

double cubatureDelta(const RunConfig& cfg, const DomainSpec& spec) {
  if (cfg.delta > 0.0) return cfg.delta;
  return spec.kind() == DomainKind::Simplex ? 0.25 : 0.5;
}

double frameDelta(const RunConfig& cfg) { return cfg.delta > 0.0 ? cfg.delta : 1.0; }

nlohmann::json thresholdsJson(const Thresholds& t) {
  return {{"assertion_ratio", t.assertion_ratio},
          {"sphere_assertion_ratio", t.sphere_assertion_ratio},
          {"cubature_residual", t.cubature_residual},
          {"weight_sum", t.weight_sum},
          {"ratio_stability", t.ratio_stability},
          {"parseval", t.parseval},
          {"calderon", t.calderon},
          {"multiplier_identity", t.multiplier_identity},
          {"contraction", t.contraction}};
}

nlohmann::json configJson(const RunConfig& cfg) {
  return {{"domain", cfg.domain}, {"alpha", cfg.alpha}, {"beta", cfg.beta},   {"mu", cfg.mu},
          {"gamma", cfg.gamma},   {"dim", cfg.dim},     {"nmax", cfg.nmax},   {"degrees", cfg.degrees},
          {"kappa", cfg.kappa},   {"delta", cfg.delta}, {"levels", cfg.levels}, {"seed", cfg.seed},
          {"thresholds", thresholdsJson(cfg.thresholds)}};
}

void writeText(const RunConfig& cfg, const std::string& name, const std::string& text) {
  std::filesystem::create_directories(cfg.out);
  std::ofstream os(cfg.out / name, std::ios::binary);
  if (!os) throw ParameterError("cannot write " + (cfg.out / name).string());
  os << text;
}

void writeJson(const RunConfig& cfg, const std::string& name, const nlohmann::json& j) {
  writeText(cfg, name, j.dump(2) + "\n");
}

}  // namespace lokern::cli
