#include "lokern/cubature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <unordered_map>

#include "geometry.hpp"
#include "lokern/error.hpp"
#include "lokern/nnls.hpp"

namespace lokern {

namespace {

constexpr double kResidualTol = 1e-8;

// Bucket grid over the packed coordinates. Outside the cone the packed rows
// are unit vectors whose dot product is the similarity, so every center within
// chord distance h of a query lies in the 3^k neighbouring buckets.
class CenterIndex {
 public:
  CenterIndex(const detail::MetricCache& centers, double h) : centers_(centers), h_(h), key_(centers.stride()) {
    bucketed_ = centers.stride() <= 5 && h < 1.0 && centers.stride() == static_cast<int>(key_.size());
    if (!bucketed_) return;
    for (std::size_t z = 0; z < centers.size(); ++z) buckets_[hashOf(cellOf(centers.row(z)))].push_back(z);
  }

  template <class F>
  void visit(const double* q, F&& f) {
    if (!bucketed_) {
      for (std::size_t z = 0; z < centers_.size(); ++z) f(z, centers_.similarity(q, centers_.row(z)));
      return;
    }
    const std::vector<std::int64_t> base = cellOf(q);
    const int k = static_cast<int>(base.size());
    int neighbours = 1;
    for (int j = 0; j < k; ++j) neighbours *= 3;
    for (int code = 0; code < neighbours; ++code) {
      int c = code;
      for (int j = 0; j < k; ++j) {
        key_[j] = base[j] + c % 3 - 1;
        c /= 3;
      }
      const auto it = buckets_.find(hashOf(key_));
      if (it == buckets_.end()) continue;
      for (std::size_t z : it->second) f(z, centers_.similarity(q, centers_.row(z)));
    }
  }

  std::size_t nearestBrute(const double* q) const {
    double best = -2.0;
    std::size_t arg = 0;
    for (std::size_t z = 0; z < centers_.size(); ++z) {
      const double s = centers_.similarity(q, centers_.row(z));
      if (s > best) {
        best = s;
        arg = z;
      }
    }
    return arg;
  }

 private:
  std::vector<std::int64_t> cellOf(const double* x) const {
    std::vector<std::int64_t> key(key_.size());
    for (std::size_t j = 0; j < key.size(); ++j) key[j] = static_cast<std::int64_t>(std::floor(x[j] / h_));
    return key;
  }
  static std::uint64_t hashOf(const std::vector<std::int64_t>& key) {
    std::uint64_t v = 1469598103934665603ull;
    for (auto c : key) v = (v ^ static_cast<std::uint64_t>(c + (1 << 20))) * 1099511628211ull;
    return v;
  }

  const detail::MetricCache& centers_;
  double h_;
  bool bucketed_ = false;
  std::vector<std::int64_t> key_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

// Cell masses of a smooth partition of unity subordinate to the balls of
// radius 2 epsilon, integrated with a fine reference quadrature whose node
// spacing is about a quarter of epsilon. Smooth cells follow the local node
// density without the jumps of nearest-node cells.
Eigen::VectorXd cellPrior(const DomainSpec& spec, const std::vector<Point>& nodes, double epsilon) {
  const std::size_t count = nodes.size();
  const bool conic = spec.kind() == DomainKind::ConicSurface;
  int degree = std::clamp(static_cast<int>(std::ceil(8.0 * std::numbers::pi / epsilon)), 8, 4000);
  ReferenceQuadrature fine = referenceQuadrature(spec, degree);
  const double budget = conic ? 4e8 : 4e6;  // pair evaluations or fine nodes
  while ((conic ? fine.size() * count : fine.size()) > budget && degree > 8) {
    degree = degree * 3 / 4;
    fine = referenceQuadrature(spec, degree);
  }
  const double radius = std::min(2.0 * epsilon, std::numbers::pi);
  const double one_minus_cos = 1.0 - std::cos(radius);
  detail::MetricCache centers(spec, nodes);
  detail::MetricCache samples(spec, fine.nodes);
  CenterIndex index(centers, conic ? 2.0 : 2.0 * std::sin(0.5 * radius));
  Eigen::VectorXd cell = Eigen::VectorXd::Zero(count);
  std::vector<std::pair<std::size_t, double>> local;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    local.clear();
    double total = 0.0;
    index.visit(samples.row(i), [&](std::size_t z, double sim) {
      const double t = (1.0 - sim) / one_minus_cos;
      if (t >= 1.0) return;
      const double phi = (1.0 - t) * (1.0 - t);
      local.emplace_back(z, phi);
      total += phi;
    });
    if (total <= 0.0) {
      cell(index.nearestBrute(samples.row(i))) += fine.weights[i];
      continue;
    }
    for (const auto& [z, phi] : local) cell(z) += fine.weights[i] * phi / total;
  }
  Eigen::VectorXd surrogate(count);
  for (std::size_t z = 0; z < count; ++z) surrogate(z) = ballMeasureSurrogate(spec, nodes[z], epsilon);
  std::vector<double> ratios;
  for (std::size_t z = 0; z < count; ++z)
    if (cell(z) > 0.0) ratios.push_back(cell(z) / surrogate(z));
  const double scale = ratios.empty() ? 1.0 : ratios[ratios.size() / 2];
  for (std::size_t z = 0; z < count; ++z)
    if (cell(z) <= 0.0) cell(z) = scale * surrogate(z);
  return cell / cell.sum();
}

Eigen::VectorXd unitMoments(Eigen::Index rows) {
  Eigen::VectorXd m = Eigen::VectorXd::Zero(rows);
  m(0) = 1.0;
  return m;
}

double maxMomentError(const Eigen::MatrixXd& A, const Eigen::VectorXd& lambda) {
  return (A * lambda - unitMoments(A.rows())).cwiseAbs().maxCoeff();
}

// Minimizer of sum ((lambda - prior) / prior)^2 subject to A lambda = m:
// lambda = prior + P^2 A^T y with A P^2 A^T y = m - A prior, P = diag(prior).
Eigen::VectorXd leastNormCorrection(const Eigen::MatrixXd& A, const Eigen::VectorXd& prior) {
  const Eigen::VectorXd r0 = unitMoments(A.rows()) - A * prior;
  const Eigen::VectorXd scale = prior.cwiseProduct(prior);
  auto apply = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
    return A * (scale.cwiseProduct(A.transpose() * v)).eval();
  };
  Eigen::VectorXd y = Eigen::VectorXd::Zero(A.rows());
  Eigen::VectorXd r = r0;
  Eigen::VectorXd d = r;
  double rr = r.squaredNorm();
  const double stop = 1e-28;
  for (int it = 0; it < 4 * A.rows() && rr > stop; ++it) {
    const Eigen::VectorXd q = apply(d);
    const double alpha = rr / d.dot(q);
    y += alpha * d;
    r -= alpha * q;
    const double next = r.squaredNorm();
    d = r + (next / rr) * d;
    rr = next;
  }
  return prior + scale.cwiseProduct(A.transpose() * y);
}

struct Solution {
  Eigen::VectorXd lambda;
  std::string method;
};

bool acceptable(const Eigen::MatrixXd& A, const Eigen::VectorXd& lambda) {
  return lambda.allFinite() && maxMomentError(A, lambda) <= kResidualTol;
}

bool solveShifted(const Eigen::MatrixXd& A, const Eigen::VectorXd& prior, Solution& out) {
  for (double theta : {0.5, 0.25, 0.125, 0.0}) {
    const Eigen::VectorXd b = unitMoments(A.rows()) - theta * (A * prior);
    const NnlsResult r = solveNnls(A, b);
    const Eigen::VectorXd lambda = theta * prior + r.x;
    if (acceptable(A, lambda)) {
      out = {lambda, theta > 0.0 ? "shifted-nnls" : "nnls"};
      return true;
    }
  }
  return false;
}

Solution solveWeights(const Eigen::MatrixXd& A, const Eigen::VectorXd& prior, const CubatureOptions& opt) {
  Solution out;
  const bool nnls_allowed = A.rows() <= opt.auto_nnls_limit;
  if (opt.method != CubatureMethod::ShiftedNnls) {
    const Eigen::VectorXd lambda = leastNormCorrection(A, prior);
    if (acceptable(A, lambda) && lambda.minCoeff() > 0.0) return {lambda, "least-norm"};
    if (opt.method == CubatureMethod::LeastNorm || !nnls_allowed)
      throw InfeasibleError("least-norm weights are not positive at this separation");
  }
  if (solveShifted(A, prior, out)) return out;
  throw InfeasibleError("NNLS residual exceeds 1e-8 at this separation");
}

CubatureRule assemble(const DomainSpec& spec, int n, double delta, const SeparatedSet& nodes,
                      const CubatureOptions& opt) {
  const std::int64_t dim = dimensionPin(spec, n);
  if (static_cast<std::int64_t>(nodes.points.size()) < dim)
    throw InfeasibleError("separated set has fewer points than dim Pi_n");
  const OrthonormalBasis basis(spec, n);
  const Eigen::MatrixXd A = basis.matrix(nodes.points, n).transpose();
  const double eps = nodes.epsilon > 0.0 ? nodes.epsilon : std::numbers::pi / std::max(n, 1);
  const Solution sol = solveWeights(A, cellPrior(spec, nodes.points, eps), opt);

  CubatureRule rule;
  rule.spec = spec;
  rule.degree = n;
  rule.delta = delta;
  rule.method = sol.method;
  rule.nodes.epsilon = nodes.epsilon;
  rule.nodes.maximality_bound = nodes.maximality_bound;
  // Zero weights prune their nodes; the pruned rule is re-certified below.
  std::vector<int> kept;
  for (Eigen::Index z = 0; z < sol.lambda.size(); ++z)
    if (sol.lambda(z) > 0.0) kept.push_back(static_cast<int>(z));
  Eigen::MatrixXd Ak(A.rows(), kept.size());
  Eigen::VectorXd lk(kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) {
    Ak.col(k) = A.col(kept[k]);
    lk(k) = sol.lambda(kept[k]);
    rule.nodes.points.push_back(nodes.points[kept[k]]);
    rule.weights.push_back(sol.lambda(kept[k]));
  }
  rule.residual = maxMomentError(Ak, lk);
  if (rule.residual > kResidualTol) throw InfeasibleError("pruned rule fails re-certification");
  return rule;
}

}  // namespace

CubatureRule computeCubature(const KernelEvaluator& ev, int n, double delta, const CubatureOptions& opt) {
  const DomainSpec& spec = ev.spec();
  if (n < 0) throw ParameterError("cubature degree must be nonnegative");
  if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must lie in (0, 1)");
  if (n == 0) {
    SeparatedSet single = maximalSeparatedSet(spec, std::numbers::pi);
    single.points.resize(1);
    CubatureRule rule;
    rule.spec = spec;
    rule.degree = 0;
    rule.delta = delta;
    rule.nodes = single;
    rule.weights = {1.0};
    rule.method = "single-node";
    return rule;
  }
  return assemble(spec, n, delta, maximalSeparatedSet(spec, delta / n), opt);
}

CubatureRule computeCubatureWithRetry(const KernelEvaluator& ev, int n, double delta, const CubatureOptions& opt) {
  for (int h = 0;; ++h) {
    try {
      CubatureRule rule = computeCubature(ev, n, delta, opt);
      rule.halvings = h;
      return rule;
    } catch (const InfeasibleError&) {
      if (h >= opt.max_halvings) throw;
      delta *= 0.5;
    }
  }
}

CubatureRule cubatureOnNodes(const DomainSpec& spec, int n, const SeparatedSet& nodes, const CubatureOptions& opt) {
  return assemble(spec, n, 0.0, nodes, opt);
}

double cubatureResidual(const DomainSpec& spec, int n, const std::vector<Point>& nodes,
                        const std::vector<double>& weights) {
  const OrthonormalBasis basis(spec, n);
  const Eigen::MatrixXd A = basis.matrix(nodes, n).transpose();
  const Eigen::VectorXd lambda = Eigen::Map<const Eigen::VectorXd>(weights.data(), weights.size());
  return maxMomentError(A, lambda);
}

WeightRatioReport weightLowerBoundCheck(const CubatureRule& rule) {
  WeightRatioReport rep;
  rep.radius = rule.degree == 0 ? std::numbers::pi : std::min(rule.delta / rule.degree, std::numbers::pi);
  if (rule.delta <= 0.0 && rule.degree > 0) rep.radius = rule.nodes.epsilon;
  rep.min_ratio = std::numeric_limits<double>::infinity();
  rep.max_ratio = 0.0;
  for (std::size_t z = 0; z < rule.size(); ++z) {
    const double ratio = rule.weights[z] / ballMeasureSurrogate(rule.spec, rule.nodes.points[z], rep.radius);
    rep.min_ratio = std::min(rep.min_ratio, ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
  }
  return rep;
}

void writeCubatureCsv(std::ostream& os, const CubatureRule& rule) {
  writePointsCsv(os, rule.nodes.points, rule.weights, "lambda");
}

}  // namespace lokern
