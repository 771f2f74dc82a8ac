#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "geometry.hpp"
#include "lokern/domain.hpp"
#include "lokern/error.hpp"

namespace lokern {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxCandidates = 4'000'000;

enum class Range { Full, Hemisphere, Orthant };

// Angular grid on S^{D-1}: polar angle of the last coordinate, then a grid on
// the sub-sphere with the spacing rescaled by sin(theta).
void angularGrid(int D, double h, Range range, std::vector<Point>& out) {
  if (D == 2) {
    if (range == Range::Full) {
      const int m = std::max(3, static_cast<int>(std::ceil(2.0 * kPi / h)));
      for (int k = 0; k < m; ++k) out.push_back({std::cos(2.0 * kPi * k / m), std::sin(2.0 * kPi * k / m)});
    } else {
      const double top = range == Range::Orthant ? 0.5 * kPi : kPi;
      const int m = std::max(1, static_cast<int>(std::ceil(top / h)));
      for (int k = 0; k <= m; ++k) out.push_back({std::cos(top * k / m), std::sin(top * k / m)});
    }
    return;
  }
  const double top = range == Range::Full ? kPi : 0.5 * kPi;
  const Range sub_range = range == Range::Orthant ? Range::Orthant : Range::Full;
  const int m = std::max(1, static_cast<int>(std::ceil(top / h)));
  std::vector<Point> sub;
  for (int j = 0; j <= m; ++j) {
    const double theta = top * j / m;
    const double s = std::sin(theta), c = std::cos(theta);
    if (s < 1e-12) {
      Point p(D, 0.0);
      p[D - 1] = c;
      out.push_back(std::move(p));
      continue;
    }
    sub.clear();
    angularGrid(D - 1, std::min(h / s, kPi), sub_range, sub);
    for (const auto& q : sub) {
      Point p(D);
      for (int k = 0; k < D - 1; ++k) p[k] = s * q[k];
      p[D - 1] = c;
      out.push_back(std::move(p));
    }
    if (out.size() > kMaxCandidates) throw ResolutionError("candidate grid too fine for this epsilon");
  }
}

double estimatedCount(const DomainSpec& spec, double h) {
  const int m = spec.kind() == DomainKind::Interval ? 1 : (spec.kind() == DomainKind::Sphere ? spec.dim() - 1 : spec.dim());
  return std::pow(kPi / h, m);
}

}  // namespace

std::vector<Point> candidateGrid(const DomainSpec& spec, double mesh) {
  if (!(mesh > 0.0)) throw ParameterError("grid mesh must be positive");
  if (estimatedCount(spec, mesh) > 4.0 * kMaxCandidates) throw ResolutionError("candidate grid too fine for this epsilon");
  const int d = spec.dim();
  std::vector<Point> out;
  switch (spec.kind()) {
    case DomainKind::Interval: {
      const int m = std::max(1, static_cast<int>(std::ceil(kPi / mesh)));
      for (int k = 0; k <= m; ++k) out.push_back({std::cos(kPi * k / m)});
      break;
    }
    case DomainKind::Sphere: angularGrid(d, mesh, Range::Full, out); break;
    case DomainKind::Ball: {
      std::vector<Point> lifted;
      angularGrid(d + 1, mesh, Range::Hemisphere, lifted);
      for (auto& p : lifted) {
        p.pop_back();
        out.push_back(std::move(p));
      }
      break;
    }
    case DomainKind::Simplex: {
      std::vector<Point> lifted;
      angularGrid(d + 1, mesh, Range::Orthant, lifted);
      for (auto& p : lifted) {
        Point x(d);
        for (int i = 0; i < d; ++i) x[i] = p[i] * p[i];
        out.push_back(std::move(x));
      }
      break;
    }
    case DomainKind::ConicSurface: {
      // t = sin^2 a makes a the intrinsic coordinate; directions need angular step 2h / sin a.
      const int m = std::max(1, static_cast<int>(std::ceil(0.5 * kPi / mesh)));
      std::vector<Point> dirs;
      for (int j = 0; j <= m; ++j) {
        const double a = 0.5 * kPi * j / m;
        const double t = std::pow(std::sin(a), 2);
        if (j == 0) {
          out.push_back(Point(d + 1, 0.0));
          continue;
        }
        dirs.clear();
        angularGrid(d, std::min(2.0 * mesh / std::sin(a), kPi), Range::Full, dirs);
        for (const auto& e : dirs) {
          Point p(d + 1);
          for (int k = 0; k < d; ++k) p[k] = t * e[k];
          p[d] = t;
          out.push_back(std::move(p));
        }
        if (out.size() > kMaxCandidates) throw ResolutionError("candidate grid too fine for this epsilon");
      }
      break;
    }
  }
  return out;
}

SeparatedSet maximalSeparatedSet(const DomainSpec& spec, double epsilon) {
  if (!(epsilon > 0.0) || epsilon > kPi) throw ParameterError("epsilon must lie in (0, pi]");
  auto grid = candidateGrid(spec, 0.25 * epsilon);
  std::sort(grid.begin(), grid.end());
  const detail::MetricCache cache(spec, grid);
  const std::size_t n = grid.size();
  // best[i]: largest similarity to a chosen point, i.e. cos of the distance to the set.
  std::vector<double> best(n, -2.0);
  std::vector<std::size_t> chosen;
  const double threshold = std::cos(epsilon);
  std::size_t next = 0;
  while (true) {
    chosen.push_back(next);
    const double* row = cache.row(next);
    for (std::size_t i = 0; i < n; ++i) best[i] = std::max(best[i], cache.similarity(row, cache.row(i)));
    std::size_t arg = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (best[i] < best[arg]) arg = i;
    // Stop once every candidate is within epsilon; the acos check guards against
    // rounding in the similarity comparison.
    if (best[arg] > threshold || std::acos(best[arg]) < epsilon) break;
    next = arg;
  }
  std::sort(chosen.begin(), chosen.end());
  SeparatedSet out;
  out.epsilon = epsilon;
  for (std::size_t i : chosen) out.points.push_back(grid[i]);
  // Multiplicity on a thinned copy of the grid to bound the cost.
  const std::size_t stride = std::max<std::size_t>(1, n / 20000);
  std::vector<Point> probe;
  for (std::size_t i = 0; i < n; i += stride) probe.push_back(grid[i]);
  out.maximality_bound = coveringMultiplicity(spec, out.points, epsilon, probe);
  return out;
}

int coveringMultiplicity(const DomainSpec& spec, const std::vector<Point>& centers, double epsilon,
                         const std::vector<Point>& grid) {
  const detail::MetricCache c(spec, centers);
  const detail::MetricCache g(spec, grid);
  const double threshold = std::cos(epsilon);
  int worst = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    int count = 0;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c.similarity(g.row(i), c.row(j)) > threshold) ++count;
    worst = std::max(worst, count);
  }
  return worst;
}

void writePointsCsv(std::ostream& os, const std::vector<Point>& points, const std::vector<double>& weights,
                    const std::string& weight_column) {
  if (!weights.empty() && weights.size() != points.size()) throw ParameterError("weights and points differ in size");
  const std::size_t k = points.empty() ? 0 : points.front().size();
  for (std::size_t j = 0; j < k; ++j) os << 'c' << j << ',';
  os << weight_column << '\n';
  os.precision(17);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (double v : points[i]) os << v << ',';
    os << (weights.empty() ? 0.0 : weights[i]) << '\n';
  }
}

}  // namespace lokern
