#include <CLI11.hpp>
#include <iostream>

#include "cli.hpp"
#include "lokern/error.hpp"

using namespace lokern;
using namespace lokern::cli;

namespace {

void addOptions(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--domain", cfg.domain, "interval, sphere, ball, simplex or conic")->capture_default_str();
  sub->add_option("--alpha", cfg.alpha, "interval alpha (repeatable)");
  sub->add_option("--beta", cfg.beta, "interval beta (repeatable)");
  sub->add_option("--mu", cfg.mu, "ball mu (repeatable)");
  sub->add_option("--gamma", cfg.gamma, "simplex weight vector or cone gamma (repeatable)");
  sub->add_option("--dim", cfg.dim, "dimension d (0: domain default)")->check(CLI::NonNegativeNumber);
  sub->add_option("--nmax", cfg.nmax, "largest degree of the sweep")->check(CLI::NonNegativeNumber)->capture_default_str();
  sub->add_option("--n", cfg.degrees, "explicit degrees (repeatable, overrides --nmax)");
  sub->add_option("--kappa", cfg.kappa, "decay exponent")->capture_default_str();
  sub->add_option("--delta", cfg.delta, "separation parameter (0: command default)");
  sub->add_option("--levels", cfg.levels, "frame levels J")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  sub->add_option("--out", cfg.out, "output directory")->capture_default_str();
}

int runAll(const std::string& which, const RunConfig& cfg) {
  int worst = kOk;
  for (const DomainSpec& spec : makeDomains(cfg)) {
    auto step = [&](int code) { worst = std::max(worst, code); };
    if (which == "kernel" || which == "all") step(cmdKernel(cfg, spec));
    if (which == "cubature" || which == "all") step(cmdCubature(cfg, spec));
    if (which == "frame" || which == "all") step(cmdFrame(cfg, spec));
    if (which == "approx" || which == "all") step(cmdApprox(cfg, spec));
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Localized polynomial kernels: verification suites and reports"};
  app.require_subcommand(1);
  RunConfig cfg;
  for (const char* name : {"kernel", "cubature", "frame", "approx", "all"}) addOptions(app.add_subcommand(name), cfg);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }
  for (int n : cfg.degrees)
    if (n < 0) {
      std::cerr << "error: degrees must be nonnegative\n";
      return kConfigError;
    }
  try {
    return runAll(app.get_subcommands().front()->get_name(), cfg);
  } catch (const ParameterError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const MembershipError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kInfeasible;
  }
}
