#include "ssp/linalg.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>

namespace ssp {

Matrix operator*(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.rows());
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

Matrix scale(double c, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
  return r;
}

std::vector<double> mat_vec(const Matrix& a, const std::vector<double>& x) {
  assert(static_cast<int>(x.size()) == a.cols());
  std::vector<double> y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

std::vector<double> vec_mat(const std::vector<double>& x, const Matrix& a) {
  assert(static_cast<int>(x.size()) == a.rows());
  std::vector<double> y(a.cols(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    for (int j = 0; j < a.cols(); ++j) y[j] += xi * a(i, j);
  }
  return y;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  assert(a.size() == b.size());
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

std::vector<double> ones(int n) { return std::vector<double>(static_cast<size_t>(n), 1.0); }

bool is_lower_triangular(const Matrix& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != 0.0) return false;
  return true;
}

std::optional<Matrix> invert_lower_triangular(const Matrix& a, double pivot_tol) {
  assert(a.rows() == a.cols());
  const int n = a.rows();
  for (int i = 0; i < n; ++i)
    if (std::abs(a(i, i)) < pivot_tol) return std::nullopt;

  Matrix inv(n, n);
  // Column j of the inverse by forward substitution; strict upper part stays
  // exactly zero.
  for (int j = 0; j < n; ++j) {
    inv(j, j) = 1.0 / a(j, j);
    for (int i = j + 1; i < n; ++i) {
      double acc = 0.0;
      for (int k = j; k < i; ++k) acc += a(i, k) * inv(k, j);
      inv(i, j) = -acc / a(i, i);
    }
  }
  return inv;
}

std::optional<Matrix> invert_dense(const Matrix& a, double pivot_tol, double* det_out) {
  assert(a.rows() == a.cols());
  const int n = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(n);
  double det = 1.0;

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(work(i, col)) > std::abs(work(pivot, col))) pivot = i;
    if (std::abs(work(pivot, col)) < pivot_tol) {
      if (det_out) *det_out = 0.0;
      return std::nullopt;
    }
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
      det = -det;
    }
    const double p = work(col, col);
    det *= p;
    const double pinv = 1.0 / p;
    for (int j = 0; j < n; ++j) {
      work(col, j) *= pinv;
      inv(col, j) *= pinv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const double f = work(i, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        work(i, j) -= f * work(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  if (det_out) *det_out = det;
  return inv;
}

std::optional<std::vector<double>> solve_dense(Matrix a, std::vector<double> rhs, double pivot_tol) {
  assert(a.rows() == a.cols() && a.rows() == static_cast<int>(rhs.size()));
  const int n = a.rows();
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(a(i, col)) > std::abs(a(pivot, col))) pivot = i;
    if (std::abs(a(pivot, col)) < pivot_tol) return std::nullopt;
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      std::swap(rhs[pivot], rhs[col]);
    }
    for (int i = col + 1; i < n; ++i) {
      const double f = a(i, col) / a(col, col);
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
      rhs[i] -= f * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (int i = n - 1; i >= 0; --i) {
    double acc = rhs[i];
    for (int j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
    x[i] = acc / a(i, i);
  }
  return x;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  assert(a.size() == b.size());
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace ssp
