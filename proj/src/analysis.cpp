#include "ssp/analysis.hpp"

#include <cmath>

#include "ssp/tolerances.hpp"

namespace ssp {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

MonotonicityCertificate singular_certificate(int s, double r) {
  MonotonicityCertificate cert;
  cert.r = r;
  cert.invertible = false;
  cert.slack_Me.assign(s, kNan);
  cert.slack_rAM = Matrix(s, s, kNan);
  cert.slack_bM.assign(s, kNan);
  cert.slack_tail = kNan;
  cert.feasible = false;
  return cert;
}

}  // namespace

double MonotonicityCertificate::min_slack() const {
  if (!invertible) return kNan;
  double m = slack_tail;
  for (double v : slack_Me) m = std::min(m, v);
  for (double v : slack_bM) m = std::min(m, v);
  for (int i = 0; i < slack_rAM.rows(); ++i)
    for (int j = 0; j < slack_rAM.cols(); ++j) m = std::min(m, slack_rAM(i, j));
  return m;
}

MonotonicityCertificate certify(const RungeKuttaMethod& m, double r) {
  const int s = m.stages();

  Matrix N = Matrix::identity(s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) N(i, j) += r * m.A(i, j);

  std::optional<Matrix> M;
  if (is_dirk(m)) {
    double det = 1.0;
    for (int i = 0; i < s; ++i) det *= N(i, i);
    if (std::abs(det) < tol::sing) return singular_certificate(s, r);
    M = invert_lower_triangular(N, tol::sing);
  } else {
    double det = 0.0;
    M = invert_dense(N, tol::sing, &det);
    if (M && std::abs(det) < tol::sing) M.reset();
  }
  if (!M) return singular_certificate(s, r);

  MonotonicityCertificate cert;
  cert.r = r;
  cert.invertible = true;
  cert.slack_Me = mat_vec(*M, ones(s));

  Matrix rA(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) rA(i, j) = r * m.A(i, j);
  cert.slack_rAM = rA * (*M);

  cert.slack_bM = vec_mat(m.b, *M);
  double bMe = 0.0;
  for (double v : cert.slack_bM) bMe += v;
  cert.slack_tail = 1.0 - r * bMe;

  cert.feasible = cert.min_slack() >= -tol::feas;
  return cert;
}

double ssp_radius(const RungeKuttaMethod& m) {
  auto feasible_at = [&m](double r) { return certify(m, r).feasible; };

  if (!feasible_at(0.0)) return 0.0;

  // Bracket by doubling from r = 1 until infeasible or past the cap.
  double lo = 0.0;
  double hi = 1.0;
  while (feasible_at(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > tol::r_cap) {
      if (feasible_at(tol::r_cap)) return unbounded_radius;
      hi = tol::r_cap;
      break;
    }
  }

  while (hi - lo > tol::bisect) {
    const double mid = 0.5 * (lo + hi);
    if (feasible_at(mid))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<MonotonicityCertificate> feasibility_profile(const RungeKuttaMethod& m,
                                                         const std::vector<double>& r_values) {
  std::vector<MonotonicityCertificate> certs;
  certs.reserve(r_values.size());
  for (double r : r_values) certs.push_back(certify(m, r));
  return certs;
}

}  // namespace ssp
