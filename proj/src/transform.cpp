#include "ssp/transform.hpp"

#include <cmath>
#include <string>

#include "ssp/errors.hpp"
#include "ssp/tolerances.hpp"

namespace ssp {

TransformedForm to_transformed(const RungeKuttaMethod& m, double r) {
  const int s = m.stages();
  Matrix N = Matrix::identity(s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) N(i, j) += r * m.A(i, j);

  std::optional<Matrix> M;
  if (is_dirk(m)) {
    double det = 1.0;
    for (int i = 0; i < s; ++i) det *= N(i, i);
    if (std::abs(det) < tol::sing)
      throw SingularTransform("I + r*A singular at r = " + std::to_string(r));
    M = invert_lower_triangular(N, tol::sing);
  } else {
    double det = 0.0;
    M = invert_dense(N, tol::sing, &det);
    if (!M || std::abs(det) < tol::sing)
      throw SingularTransform("I + r*A singular at r = " + std::to_string(r));
  }
  if (!M) throw SingularTransform("I + r*A singular at r = " + std::to_string(r));

  std::vector<double> w = vec_mat(m.b, *M);
  for (double& wi : w) wi *= r;
  return TransformedForm{r, std::move(N), std::move(*M), std::move(w)};
}

RungeKuttaMethod from_transformed(const TransformedForm& tf) {
  if (tf.r == 0.0) throw ZeroRadius("transformed form with r = 0 is not invertible");
  const int s = tf.stages();
  Matrix A(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) A(i, j) = (tf.N(i, j) - (i == j ? 1.0 : 0.0)) / tf.r;
  std::vector<double> b = vec_mat(tf.w, tf.N);
  for (double& bi : b) bi /= tf.r;
  return make_method("from-transformed", std::move(A), std::move(b));
}

}  // namespace ssp
