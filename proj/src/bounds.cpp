#include "ssp/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ssp/errors.hpp"
#include "ssp/tolerances.hpp"

namespace ssp {

RatioEvaluation objective_ratio(const TransformedForm& tf) {
  const int s = tf.stages();
  const std::vector<double> Ne = mat_vec(tf.N, ones(s));
  const std::vector<double> N2e = mat_vec(tf.N, Ne);

  RatioEvaluation eval;
  const double wNe = dot(tf.w, Ne);
  eval.numerator = wNe * wNe;
  eval.denominator = dot(tf.w, N2e);
  eval.bound = 2.0 * s / (s + 1.0);

  if (eval.denominator > tol::sing) {
    eval.ratio = eval.numerator / eval.denominator;
  } else if (eval.numerator == 0.0) {
    eval.ratio = 0.0;
  } else {
    throw DegenerateDenominator("w^T N^2 e = " + std::to_string(eval.denominator));
  }
  return eval;
}

std::pair<double, double> row_ratio_bound(const Matrix& N, const std::vector<double>& w) {
  const int s = N.rows();
  if (N.cols() != s || static_cast<int>(w.size()) != s)
    throw std::invalid_argument("N must be square and match w");
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (N(i, j) < 0.0) throw std::invalid_argument("N must be entrywise nonnegative");

  double wsum = 0.0;
  for (double wi : w) {
    if (wi < -tol::sing) throw InvalidSimplex("w has a negative entry");
    wsum += wi;
  }
  if (std::abs(wsum - 1.0) > tol::alg)
    throw InvalidSimplex("w^T e = " + std::to_string(wsum) + ", expected 1");

  const std::vector<double> Ne = mat_vec(N, ones(s));
  const std::vector<double> N2e = mat_vec(N, Ne);
  double rhs = 0.0;
  for (int i = 0; i < s; ++i) {
    if (N2e[i] <= 0.0) throw std::invalid_argument("(N^2 e)_i must be positive");
    rhs = std::max(rhs, Ne[i] * Ne[i] / N2e[i]);
  }
  const double wNe = dot(w, Ne);
  const double lhs = wNe * wNe / dot(w, N2e);
  return {lhs, rhs};
}

std::vector<double> normalize_w(const std::vector<double>& w) {
  double sum = 0.0;
  for (double wi : w) {
    if (wi < 0.0) throw std::invalid_argument("w must be entrywise nonnegative");
    sum += wi;
  }
  if (sum <= tol::sing) throw ZeroVector("w^T e = " + std::to_string(sum));
  std::vector<double> out(w);
  for (double& wi : out) wi /= sum;
  return out;
}

double alpha_beta_value(int s, double alpha) {
  if (s < 2) throw InvalidStage("majorant needs s >= 2, got " + std::to_string(s));
  const double beta_ext = s * alpha * alpha / (2.0 * (s - 1.0));
  return (1.0 + alpha) * (1.0 + alpha) / (1.0 + alpha + beta_ext);
}

bool alpha_beta_bound_check(const AlphaBetaPoint& pt) {
  if (pt.alpha < 0.0 || pt.beta < 0.0)
    throw std::invalid_argument("alpha and beta must be nonnegative");
  const double hyp_bound = 2.0 * (pt.s - 1.0) / pt.s;
  if (pt.beta == 0.0) {
    if (pt.alpha > 0.0) throw HypothesisViolated("beta = 0 requires alpha = 0");
  } else if (pt.alpha * pt.alpha / pt.beta > hyp_bound + tol::alg) {
    throw HypothesisViolated("alpha^2/beta = " + std::to_string(pt.alpha * pt.alpha / pt.beta) +
                             " exceeds " + std::to_string(hyp_bound));
  }
  const double value = (1.0 + pt.alpha) * (1.0 + pt.alpha) / (1.0 + pt.alpha + pt.beta);
  return value <= 2.0 * pt.s / (pt.s + 1.0) + tol::alg;
}

std::pair<double, double> derivative_check(int s, double alpha) {
  const double den = 2.0 * s - 2.0 * alpha - 2.0 + 2.0 * s * alpha + s * alpha * alpha;
  const double analytic = 4.0 * (s - 1.0 - alpha) * (alpha + 1.0) * (s - 1.0) / (den * den);

  const double h = 1e-6 * std::max(1.0, alpha);
  const double numeric = (alpha_beta_value(s, alpha + h) - alpha_beta_value(s, alpha - h)) / (2.0 * h);
  return {analytic, numeric};
}

bool partitioned_inverse_check(const Matrix& M_prev, const std::vector<double>& a) {
  const int k = M_prev.rows();
  if (M_prev.cols() != k || static_cast<int>(a.size()) != k)
    throw std::invalid_argument("M_prev must be square and match a");
  if (!is_lower_triangular(M_prev))
    throw std::invalid_argument("M_prev must be lower triangular");

  const std::optional<Matrix> P = invert_dense(M_prev, tol::sing);
  if (!P) throw SingularBlock("M_prev is not invertible");

  const int s = k + 1;
  Matrix Ms(s, s);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) Ms(i, j) = M_prev(i, j);
  for (int j = 0; j < k; ++j) Ms(s - 1, j) = -a[j];
  Ms(s - 1, s - 1) = 1.0;

  const std::optional<Matrix> Minv = invert_dense(Ms, tol::sing);
  if (!Minv) throw SingularBlock("M_s is not invertible");
  const Matrix Minv2 = (*Minv) * (*Minv);

  // Bottom rows expected from the block formula.
  const std::vector<double> aP = vec_mat(a, *P);
  const Matrix P2 = (*P) * (*P);
  const std::vector<double> aPP2 = vec_mat(a, *P + P2);

  for (int j = 0; j < k; ++j) {
    if (std::abs((*Minv)(s - 1, j) - aP[j]) > tol::alg) return false;
    if (std::abs(Minv2(s - 1, j) - aPP2[j]) > tol::alg) return false;
  }
  if (std::abs((*Minv)(s - 1, s - 1) - 1.0) > tol::alg) return false;
  if (std::abs(Minv2(s - 1, s - 1) - 1.0) > tol::alg) return false;
  return true;
}

}  // namespace ssp
