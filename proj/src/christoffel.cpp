#include <cmath>
#include <ostream>

#include "lokern/cubature.hpp"
#include "lokern/error.hpp"

namespace lokern {

double christoffel(const KernelEvaluator& ev, int n, const Point& p) {
  return 1.0 / christoffelKernelDiag(ev, n, p);
}

std::vector<double> certificatePolynomial(const KernelEvaluator& ev, int n, const Point& p,
                                          const std::vector<Point>& ys) {
  ev.spec().checkMember(p);
  if (n < 4) return std::vector<double>(ys.size(), 1.0);
  const int m = n / 4;
  const OrthonormalBasis basis(ev.spec(), 2 * m);
  const auto c = ev.cutoff().samples(static_cast<double>(m), 2 * m);
  const Eigen::MatrixXd diag = multiplierKernelMatrix(basis, c, {p}, {p});
  const Eigen::MatrixXd row = multiplierKernelMatrix(basis, c, {p}, ys);
  std::vector<double> g(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const double v = row(0, i) / diag(0, 0);
    g[i] = v * v;
  }
  return g;
}

double christoffelUpperCertificate(const KernelEvaluator& ev, int n, const Point& p) {
  if (n < 0) throw ParameterError("degree must be nonnegative");
  if (4 * ((n + 3) / 4) > ev.maxDegree() && n >= 4)
    throw CapacityError("certificate degree exceeds the evaluator capacity");
  if (n < 4) {
    ev.spec().checkMember(p);
    return 1.0;  // g = 1
  }
  // g has degree at most 4m, so g^2 needs a rule of degree 8m.
  const ReferenceQuadrature quad = referenceQuadrature(ev.spec(), 8 * (n / 4));
  const std::vector<double> g = certificatePolynomial(ev, n, p, quad.nodes);
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) sum += quad.weights[i] * g[i] * g[i];
  return sum;
}

ChristoffelProfile christoffelProfile(const KernelEvaluator& ev, int n, const std::vector<Point>& points) {
  ChristoffelProfile prof;
  prof.spec = ev.spec();
  prof.degree = n;
  const double radius = 1.0 / std::max(n, 1);
  for (const Point& p : points) {
    ChristoffelSample s;
    s.point = p;
    s.lambda = christoffel(ev, n, p);
    s.surrogate = ballMeasureSurrogate(ev.spec(), p, radius);
    s.ratio = s.lambda / s.surrogate;
    prof.samples.push_back(std::move(s));
  }
  return prof;
}

void writeChristoffelCsv(std::ostream& os, const ChristoffelProfile& profile) {
  const std::size_t k = profile.samples.empty() ? profile.spec.coordCount() : profile.samples[0].point.size();
  for (std::size_t i = 0; i < k; ++i) os << 'c' << i << ',';
  os << "lambda_n,surrogate,ratio\n";
  os.precision(17);
  for (const auto& s : profile.samples) {
    for (double c : s.point) os << c << ',';
    os << s.lambda << ',' << s.surrogate << ',' << s.ratio << '\n';
  }
}

}  // namespace lokern
