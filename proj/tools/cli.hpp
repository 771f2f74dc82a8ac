#pragma once

#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

#include "lokern/domain.hpp"

namespace lokern::cli {

enum ExitCode { kOk = 0, kConfigError = 2, kInfeasible = 3, kThresholdFailure = 4 };

struct Thresholds {
  double assertion_ratio = 4.0;         // max/min of A1, A2, J_n over the sweep
  double sphere_assertion_ratio = 2.0;  // sphere A1 target
  double cubature_residual = 1e-8;
  double weight_sum = 1e-10;
  double ratio_stability = 2.0;  // cubature ratio endpoints, frame decay, near-best C
  double parseval = 1e-6;
  double calderon = 1e-8;
  double multiplier_identity = 1e-9;
  double contraction = 1e-9;
};

struct RunConfig {
  std::string domain = "interval";
  std::vector<double> alpha, beta, mu, gamma;
  int dim = 0;  // 0: domain default
  int nmax = 32;
  std::vector<int> degrees;  // explicit sweep; empty: derived from nmax
  double kappa = 4.0;
  double delta = 0.0;  // 0: per-command default
  int levels = 5;
  std::uint64_t seed = 1;
  std::filesystem::path out = "lokern_out";
  Thresholds thresholds;
};

/// Domains named by the config. Repeated --alpha/--beta (paired, a single value
/// broadcasts), --mu and cone --gamma give one domain each; simplex --gamma
/// values form the weight vector. ParameterError on invalid combinations.
std::vector<DomainSpec> makeDomains(const RunConfig& cfg);

/// Explicit degrees, or powers of two from `first` up to nmax.
std::vector<int> degreeSweep(const RunConfig& cfg, int first);

/// Separation parameter: --delta, else 1/2 (simplex 1/4) for cubature and 1 for frames.
double cubatureDelta(const RunConfig& cfg, const DomainSpec& spec);
double frameDelta(const RunConfig& cfg);

nlohmann::json configJson(const RunConfig& cfg);
nlohmann::json thresholdsJson(const Thresholds& t);

/// Writes text with LF endings, creating the output directory.
void writeText(const RunConfig& cfg, const std::string& name, const std::string& text);
void writeJson(const RunConfig& cfg, const std::string& name, const nlohmann::json& j);

// Each returns kOk or kThresholdFailure; numerical and parameter errors propagate.
int cmdKernel(const RunConfig& cfg, const DomainSpec& spec);
int cmdCubature(const RunConfig& cfg, const DomainSpec& spec);
int cmdFrame(const RunConfig& cfg, const DomainSpec& spec);
int cmdApprox(const RunConfig& cfg, const DomainSpec& spec);

}  // namespace lokern::cli
