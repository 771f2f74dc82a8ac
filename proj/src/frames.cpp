#include "lokern/frames.hpp"

#include <cmath>
#include <limits>
#include <json.hpp>

#include "lokern/error.hpp"

namespace lokern {

namespace {

int levelCubatureDegree(int j) { return j == 0 ? 0 : (1 << (j + 1)) - 2; }

// Multiplies each degree block k of v by c[k].
Eigen::VectorXd scaleBlocks(const OrthonormalBasis& basis, const std::vector<double>& c, const Eigen::VectorXd& v) {
  Eigen::VectorXd out = v;
  for (int k = 0; basis.blockStart(k) < v.size(); ++k) {
    const double ck = k < static_cast<int>(c.size()) ? c[k] : 0.0;
    out.segment(basis.blockStart(k), basis.blockSize(k)) *= ck;
    if (k == basis.maxDegree()) break;
  }
  return out;
}

Eigen::VectorXd sqrtWeights(const CubatureRule& rule) {
  Eigen::VectorXd s(rule.size());
  for (std::size_t z = 0; z < rule.size(); ++z) s(z) = std::sqrt(rule.weights[z]);
  return s;
}

}  // namespace

FrameSystem::FrameSystem(const KernelEvaluator& ev, int max_level, double delta, std::vector<FrameLevel> levels)
    : ev_(ev), J_(max_level), delta_(delta), rho_(frameGeneratorRho()), levels_(std::move(levels)) {
  if (max_level < 0) throw ParameterError("frame level must be nonnegative");
  if (static_cast<int>(levels_.size()) != max_level + 1) throw ConsistencyError("one cubature rule per level required");
  basis_ = std::make_shared<const OrthonormalBasis>(ev.spec(), kernelDegree(max_level));
  const CutoffFunction b(CutoffKind::FrameGenerator);
  multipliers_.push_back({1.0});
  for (int j = 1; j <= max_level; ++j) multipliers_.push_back(b.samples(std::ldexp(1.0, j - 1), kernelDegree(j)));
}

double FrameCoefficients::levelSquaredNorm(int j) const {
  double s = 0.0;
  for (double c : levels.at(j)) s += c * c;
  return s;
}

double FrameCoefficients::squaredNorm() const {
  double s = 0.0;
  for (std::size_t j = 0; j < levels.size(); ++j) s += levelSquaredNorm(static_cast<int>(j));
  return s;
}

FrameSystem buildFrame(const KernelEvaluator& ev, int max_level, double delta, const CubatureOptions& opt) {
  if (max_level < 0) throw ParameterError("frame level must be nonnegative");
  if (!(delta > 0.0)) throw ParameterError("delta must be positive");
  const DomainSpec& spec = ev.spec();
  std::vector<FrameLevel> levels;
  FrameLevel zero;
  zero.rule = computeCubature(ev, 0, 0.5);
  zero.delta = delta;
  levels.push_back(std::move(zero));
  for (int j = 1; j <= max_level; ++j) {
    FrameLevel lv;
    lv.level = j;
    lv.degree = levelCubatureDegree(j);
    double dj = delta;
    for (int h = 0;; ++h) {
      try {
        lv.rule = cubatureOnNodes(spec, lv.degree, maximalSeparatedSet(spec, std::ldexp(dj, -j)), opt);
        lv.rule.halvings = h;
        break;
      } catch (const InfeasibleError&) {
        if (h >= opt.max_halvings) throw;
        dj *= 0.5;
      }
    }
    lv.delta = dj;
    levels.push_back(std::move(lv));
  }
  return FrameSystem(ev, max_level, delta, std::move(levels));
}

WeightRatioReport frameWeightRatios(const FrameSystem& fs, int j) {
  const CubatureRule& rule = fs.level(j).rule;
  WeightRatioReport rep;
  rep.radius = std::min(std::ldexp(1.0, -j), 3.14159);
  rep.min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t z = 0; z < rule.size(); ++z) {
    const double r = rule.weights[z] / ballMeasureSurrogate(fs.spec(), rule.nodes.points[z], rep.radius);
    rep.min_ratio = std::min(rep.min_ratio, r);
    rep.max_ratio = std::max(rep.max_ratio, r);
  }
  return rep;
}

double levelKernel(const FrameSystem& fs, int j, const Point& p, const Point& q) {
  if (j < 0 || j > fs.maxLevel()) throw ParameterError("frame level out of range");
  fs.spec().checkMember(p);
  fs.spec().checkMember(q);
  if (j == 0) return 1.0;
  if (fs.kernelDegree(j) > fs.evaluator().maxDegree()) throw CapacityError("level kernel exceeds the evaluator capacity");
  return fs.evaluator().multiplierKernel(fs.multipliers(j), p, q);
}

std::vector<double> frameElement(const FrameSystem& fs, int j, std::size_t z, const std::vector<Point>& points) {
  const CubatureRule& rule = fs.level(j).rule;
  if (z >= rule.size()) throw ParameterError("frame node index out of range");
  const Eigen::MatrixXd F = multiplierKernelMatrix(fs.basis(), fs.multipliers(j), points, {rule.nodes.points[z]});
  const double s = std::sqrt(rule.weights[z]);
  std::vector<double> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = s * F(i, 0);
  return out;
}

FrameCoefficients analyze(const FrameSystem& fs, const BandlimitedFunction& f) {
  if (2 * f.degree >= (1 << fs.maxLevel())) throw CapacityError("analysis needs deg f < 2^{J-1}");
  const OrthonormalBasis& basis = fs.basis();
  const Eigen::VectorXd fhat = basisCoefficients(basis, f.degree, f);
  FrameCoefficients out;
  for (int j = 0; j <= fs.maxLevel(); ++j) {
    const CubatureRule& rule = fs.level(j).rule;
    const int nd = std::min(fs.kernelDegree(j), f.degree);
    const Eigen::VectorXd g = scaleBlocks(basis, fs.multipliers(j), fhat.head(basis.blockStart(nd + 1)));
    const Eigen::VectorXd values = basis.matrix(rule.nodes.points, nd) * g;
    out.levels.emplace_back(rule.size());
    const Eigen::VectorXd s = sqrtWeights(rule);
    for (std::size_t z = 0; z < rule.size(); ++z) out.levels[j][z] = s(z) * values(z);
  }
  return out;
}

std::vector<double> synthesize(const FrameSystem& fs, const FrameCoefficients& coeffs, const std::vector<Point>& points) {
  if (static_cast<int>(coeffs.levels.size()) != fs.maxLevel() + 1)
    throw ConsistencyError("coefficients do not match the frame levels");
  const OrthonormalBasis& basis = fs.basis();
  Eigen::VectorXd total = Eigen::VectorXd::Zero(basis.size());
  for (int j = 0; j <= fs.maxLevel(); ++j) {
    const CubatureRule& rule = fs.level(j).rule;
    if (coeffs.levels[j].size() != rule.size()) throw ConsistencyError("coefficients do not match the frame nodes");
    const int nd = fs.kernelDegree(j);
    const Eigen::VectorXd c =
        sqrtWeights(rule).cwiseProduct(Eigen::Map<const Eigen::VectorXd>(coeffs.levels[j].data(), rule.size()));
    const Eigen::VectorXd h = basis.matrix(rule.nodes.points, nd).transpose() * c;
    total.head(h.size()) += scaleBlocks(basis, fs.multipliers(j), h);
  }
  const Eigen::VectorXd values = basis.matrix(points) * total;
  return std::vector<double>(values.data(), values.data() + values.size());
}

std::vector<double> calderon(const FrameSystem& fs, const BandlimitedFunction& f, const std::vector<Point>& points) {
  if (2 * f.degree >= (1 << fs.maxLevel())) throw CapacityError("decomposition needs deg f < 2^{J-1}");
  const OrthonormalBasis& basis = fs.basis();
  const ReferenceQuadrature quad = referenceQuadrature(fs.spec(), fs.kernelDegree(fs.maxLevel()) + f.degree);
  Eigen::VectorXd wf(quad.size());
  for (std::size_t i = 0; i < quad.size(); ++i) wf(i) = quad.weights[i] * f(quad.nodes[i]);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(points.size());
  for (int j = 0; j <= fs.maxLevel(); ++j) {
    const auto& b = fs.multipliers(j);
    // (F_j * f) at the quadrature nodes, then F_j * (F_j * f) at the points.
    const Eigen::VectorXd inner = multiplierKernelMatrix(basis, b, quad.nodes, quad.nodes) * wf;
    out += multiplierKernelMatrix(basis, b, points, quad.nodes) * Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(quad.weights.data(), quad.size()).cwiseProduct(inner));
  }
  return std::vector<double>(out.data(), out.data() + out.size());
}

double frameDecayCheck(const FrameSystem& fs, int j, std::size_t z, double kappa) {
  const DomainSpec& spec = fs.spec();
  const CubatureRule& rule = fs.level(j).rule;
  if (z >= rule.size()) throw ParameterError("frame node index out of range");
  const Point& center = rule.nodes.points[z];
  Rng rng(17);
  std::vector<Point> xs = samplePoints(spec, 1500, rng);
  const double scale = std::ldexp(1.0, -j);
  for (int dir = 0; dir < 4; ++dir)
    for (double s = scale; s < 3.2; s *= 1.5) xs.push_back(offsetPoint(spec, center, s, dir));
  const std::vector<double> psi = frameElement(fs, j, z, xs);
  const double sw = std::sqrt(ballMeasureSurrogate(spec, center, std::min(scale, 3.14159)));
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    worst = std::max(worst, std::abs(psi[i]) * sw * std::pow(1.0 + distance(spec, xs[i], center) / scale, kappa));
  return worst;
}

std::string frameDescriptionJson(const FrameSystem& fs) {
  nlohmann::json j;
  j["domain"] = fs.spec().name();
  j["max_level"] = fs.maxLevel();
  j["delta"] = fs.delta();
  j["rho"] = fs.rho();
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& lv : fs.levels()) {
    levels.push_back({{"level", lv.level},
                      {"cubature_degree", lv.degree},
                      {"delta", lv.delta},
                      {"epsilon", lv.rule.nodes.epsilon},
                      {"nodes", lv.rule.size()},
                      {"residual", lv.rule.residual},
                      {"method", lv.rule.method}});
  }
  j["levels"] = levels;
  return j.dump(2);
}

}  // namespace lokern
