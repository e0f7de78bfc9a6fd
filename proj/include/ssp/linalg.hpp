#pragma once

#include <optional>
#include <vector>

namespace ssp {

/// Dense row-major matrix of doubles. Problem sizes here are tiny (s <= 100,
/// grids <= a few hundred), so everything is plain contiguous storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double value = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, value) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(double c, const Matrix& a);

/// y = A x
std::vector<double> mat_vec(const Matrix& a, const std::vector<double>& x);
/// y^T = x^T A  (equivalently y = A^T x)
std::vector<double> vec_mat(const std::vector<double>& x, const Matrix& a);

double dot(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> ones(int n);

/// Strict upper part exactly zero.
bool is_lower_triangular(const Matrix& a);

/// Inverse of a lower-triangular matrix by forward substitution. Keeps the
/// strict upper part exactly zero. Returns nullopt when a diagonal entry is
/// below `pivot_tol` in magnitude.
std::optional<Matrix> invert_lower_triangular(const Matrix& a, double pivot_tol);

/// General dense inverse (Gauss-Jordan with partial pivoting). `det_out`,
/// when non-null, receives the determinant (0 on singular input).
std::optional<Matrix> invert_dense(const Matrix& a, double pivot_tol, double* det_out = nullptr);

/// Solve A x = rhs by Gaussian elimination with partial pivoting.
std::optional<std::vector<double>> solve_dense(Matrix a, std::vector<double> rhs, double pivot_tol);

double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace ssp
