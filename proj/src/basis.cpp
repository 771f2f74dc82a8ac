#include "lokern/basis.hpp"

#include <cmath>
#include <numbers>

#include "geometry.hpp"
#include "lokern/error.hpp"

namespace lokern {

SolidHarmonics::SolidHarmonics(int D, int max_degree) : D_(D), M_(max_degree) {
  if (D < 2) throw ParameterError("harmonics need D >= 2");
  if (max_degree < 0) throw ParameterError("degree must be nonnegative");
  counts_.resize(M_ + 1);
  offsets_.assign(M_ + 2, 0);
  if (D_ == 2) {
    for (int m = 0; m <= M_; ++m) counts_[m] = m == 0 ? 1 : 2;
  } else {
    sub_ = std::make_unique<SolidHarmonics>(D_ - 1, M_);
    const double a0 = 0.5 * (D_ - 3);
    const double m0 = jacobiMass({a0, a0});
    for (int k = 0; k <= M_; ++k) {
      const double a = k + a0;
      radial_.emplace_back(JacobiParams{a, a}, M_ - k);
      scale_.push_back(std::sqrt(m0 / jacobiMass({a, a})));
    }
    for (int m = 0; m <= M_; ++m) {
      counts_[m] = 0;
      for (int k = 0; k <= m; ++k) counts_[m] += sub_->count(k);
    }
  }
  for (int m = 0; m <= M_; ++m) offsets_[m + 1] = offsets_[m] + counts_[m];
}

void SolidHarmonics::evaluate(const double* x, int degree, std::span<double> out) const {
  if (D_ == 2) {
    out[0] = 1.0;
    double re = 1.0, im = 0.0;
    for (int m = 1; m <= degree; ++m) {
      const double nr = re * x[0] - im * x[1];
      im = re * x[1] + im * x[0];
      re = nr;
      out[offsets_[m]] = std::numbers::sqrt2 * re;
      out[offsets_[m] + 1] = std::numbers::sqrt2 * im;
    }
    return;
  }
  std::vector<double> sub(sub_->offset(degree + 1));
  sub_->evaluate(x, degree, sub);
  const double z = x[D_ - 1];
  const double r2 = detail::dot(x, x, D_);
  // q[k][j]: homogeneous radial factor of degree j for sub-degree k.
  std::vector<std::vector<double>> q(degree + 1);
  for (int k = 0; k <= degree; ++k) {
    q[k].resize(degree - k + 1);
    radial_[k].evaluateHomogeneous(z, r2, degree - k, q[k]);
  }
  for (int m = 0; m <= degree; ++m) {
    int pos = offsets_[m];
    for (int k = 0; k <= m; ++k) {
      const double f = scale_[k] * q[k][m - k];
      const int s0 = sub_->offset(k), s1 = sub_->offset(k + 1);
      for (int i = s0; i < s1; ++i) out[pos++] = f * sub[i];
    }
  }
}

// Collapsed recursion x = (u, (1 - u) y) with y on the simplex one dimension down.
struct OrthonormalBasis::SimplexLevel {
  int d = 0;
  int N = 0;
  std::vector<int> offsets;  // per degree
  OrthonormalJacobi base;    // d == 1
  std::unique_ptr<SimplexLevel> child;
  std::vector<OrthonormalJacobi> g;
  std::vector<double> scale;

  SimplexLevel(int dim, const double* gamma, int max_degree) : d(dim), N(max_degree) {
    offsets.assign(N + 2, 0);
    if (d == 1) {
      base = OrthonormalJacobi({gamma[1], gamma[0]}, N);
      for (int n = 0; n <= N; ++n) offsets[n + 1] = n + 1;
      return;
    }
    child = std::make_unique<SimplexLevel>(d - 1, gamma + 1, N);
    double rest = 0.0;
    for (int i = 1; i <= d; ++i) rest += gamma[i];
    const double lb0 = detail::logBeta(gamma[0] + 1.0, rest + d);
    for (int k = 0; k <= N; ++k) {
      g.emplace_back(JacobiParams{rest + d - 1.0 + 2.0 * k, gamma[0]}, N - k);
      scale.push_back(std::exp(-0.5 * (detail::logBeta(gamma[0] + 1.0, rest + d + 2.0 * k) - lb0)));
    }
    for (int n = 0; n <= N; ++n) {
      int c = 0;
      for (int k = 0; k <= n; ++k) c += child->offsets[k + 1] - child->offsets[k];
      offsets[n + 1] = offsets[n] + c;
    }
  }

  void evaluate(const double* x, int degree, double* out) const {
    if (d == 1) {
      base.evaluate(2.0 * x[0] - 1.0, degree, std::span<double>(out, degree + 1));
      return;
    }
    const double u = x[0];
    const double omu = 1.0 - u;
    std::vector<double> y(d - 1, 0.0);
    if (omu > 0.0)
      for (int i = 0; i < d - 1; ++i) y[i] = x[i + 1] / omu;
    std::vector<double> cv(child->offsets[degree + 1]);
    child->evaluate(y.data(), degree, cv.data());
    const double s = 2.0 * u - 1.0;
    std::vector<std::vector<double>> gv(degree + 1);
    std::vector<double> pw(degree + 1, 1.0);
    for (int k = 0; k <= degree; ++k) {
      gv[k].resize(degree - k + 1);
      g[k].evaluate(s, degree - k, gv[k]);
      if (k > 0) pw[k] = pw[k - 1] * omu;
    }
    for (int n = 0; n <= degree; ++n) {
      int pos = offsets[n];
      for (int k = 0; k <= n; ++k) {
        const double f = scale[k] * gv[k][n - k] * pw[k];
        for (int i = child->offsets[k]; i < child->offsets[k + 1]; ++i) out[pos++] = f * cv[i];
      }
    }
  }
};

OrthonormalBasis::OrthonormalBasis(const DomainSpec& spec, int max_degree) : spec_(spec), N_(max_degree) {
  if (max_degree < 0) throw ParameterError("degree must be nonnegative");
  offsets_.assign(N_ + 2, 0);
  for (int n = 0; n <= N_; ++n) offsets_[n + 1] = offsets_[n] + static_cast<int>(dimensionVn(spec, n));
  const int d = spec.dim();
  switch (spec.kind()) {
    case DomainKind::Interval: interval_ = OrthonormalJacobi({spec.alpha(), spec.beta()}, N_); break;
    case DomainKind::Sphere: harmonics_ = std::make_unique<SolidHarmonics>(d, N_); break;
    case DomainKind::Ball: {
      harmonics_ = std::make_unique<SolidHarmonics>(d, N_);
      const double mu = spec.mu();
      const double lb0 = detail::logBeta(0.5 * d, mu + 0.5);
      for (int m = 0; m <= N_; ++m) {
        radial_.emplace_back(JacobiParams{mu - 0.5, m + 0.5 * (d - 2)}, (N_ - m) / 2);
        radial_scale_.push_back(std::exp(-0.5 * (detail::logBeta(m + 0.5 * d, mu + 0.5) - lb0)));
      }
      break;
    }
    case DomainKind::Simplex: simplex_ = std::make_unique<SimplexLevel>(d, spec.params().data(), N_); break;
    case DomainKind::ConicSurface: {
      harmonics_ = std::make_unique<SolidHarmonics>(d, N_);
      const double g = spec.gamma();
      const double lb0 = detail::logBeta(d - 1.0, g + 1.0);
      for (int m = 0; m <= N_; ++m) {
        radial_.emplace_back(JacobiParams{g, 2.0 * m + d - 2.0}, N_ - m);
        radial_scale_.push_back(std::exp(-0.5 * (detail::logBeta(2.0 * m + d - 1.0, g + 1.0) - lb0)));
      }
      break;
    }
  }
}

OrthonormalBasis::~OrthonormalBasis() = default;
OrthonormalBasis::OrthonormalBasis(OrthonormalBasis&&) noexcept = default;
OrthonormalBasis& OrthonormalBasis::operator=(OrthonormalBasis&&) noexcept = default;

void OrthonormalBasis::evaluate(const Point& p, int degree, std::span<double> out) const {
  if (degree > N_) throw CapacityError("degree exceeds the basis capacity");
  const int d = spec_.dim();
  switch (spec_.kind()) {
    case DomainKind::Interval: interval_.evaluate(p[0], degree, out); return;
    case DomainKind::Sphere: harmonics_->evaluate(p.data(), degree, out); return;
    case DomainKind::Simplex: simplex_->evaluate(p.data(), degree, out.data()); return;
    case DomainKind::Ball: {
      std::vector<double> y(harmonics_->offset(degree + 1));
      harmonics_->evaluate(p.data(), degree, y);
      const double s = 2.0 * detail::dot(p.data(), p.data(), d) - 1.0;
      std::vector<std::vector<double>> q(degree + 1);
      for (int m = 0; m <= degree; ++m) {
        q[m].resize((degree - m) / 2 + 1);
        radial_[m].evaluate(s, (degree - m) / 2, q[m]);
      }
      for (int n = 0; n <= degree; ++n) {
        int pos = offsets_[n];
        for (int j = 0; 2 * j <= n; ++j) {
          const int m = n - 2 * j;
          const double f = radial_scale_[m] * q[m][j];
          for (int i = harmonics_->offset(m); i < harmonics_->offset(m + 1); ++i) out[pos++] = f * y[i];
        }
      }
      return;
    }
    case DomainKind::ConicSurface: {
      std::vector<double> y(harmonics_->offset(degree + 1));
      harmonics_->evaluate(p.data(), degree, y);
      const double s = 2.0 * p[d] - 1.0;
      std::vector<std::vector<double>> q(degree + 1);
      for (int m = 0; m <= degree; ++m) {
        q[m].resize(degree - m + 1);
        radial_[m].evaluate(s, degree - m, q[m]);
      }
      for (int n = 0; n <= degree; ++n) {
        int pos = offsets_[n];
        for (int m = 0; m <= n; ++m) {
          const double f = radial_scale_[m] * q[m][n - m];
          for (int i = harmonics_->offset(m); i < harmonics_->offset(m + 1); ++i) out[pos++] = f * y[i];
        }
      }
      return;
    }
  }
}

Eigen::MatrixXd OrthonormalBasis::matrix(const std::vector<Point>& points, int degree) const {
  const int cols = offsets_[degree + 1];
  Eigen::MatrixXd A(points.size(), cols);
  std::vector<double> row(cols);
  for (std::size_t i = 0; i < points.size(); ++i) {
    evaluate(points[i], degree, row);
    for (int j = 0; j < cols; ++j) A(i, j) = row[j];
  }
  return A;
}

Eigen::VectorXd OrthonormalBasis::transposeApply(const std::vector<Point>& points, const Eigen::VectorXd& v,
                                                 int degree) const {
  const int cols = offsets_[degree + 1];
  Eigen::VectorXd out = Eigen::VectorXd::Zero(cols);
  std::vector<double> row(cols);
  for (std::size_t i = 0; i < points.size(); ++i) {
    evaluate(points[i], degree, row);
    out += v(i) * Eigen::Map<const Eigen::VectorXd>(row.data(), cols);
  }
  return out;
}

Eigen::VectorXd OrthonormalBasis::expand(const std::vector<Point>& points, const Eigen::VectorXd& coef) const {
  const int degree = degreeOfSize(static_cast<int>(coef.size()));
  const int cols = offsets_[degree + 1];
  Eigen::VectorXd out(points.size());
  std::vector<double> row(cols);
  for (std::size_t i = 0; i < points.size(); ++i) {
    evaluate(points[i], degree, row);
    out(i) = Eigen::Map<const Eigen::VectorXd>(row.data(), cols).dot(coef);
  }
  return out;
}

int OrthonormalBasis::degreeOfSize(int size) const {
  for (int n = 0; n <= N_; ++n)
    if (offsets_[n + 1] == size) return n;
  throw ConsistencyError("coefficient vector does not match a degree block boundary");
}

}  // namespace lokern
