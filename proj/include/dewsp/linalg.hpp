#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dewsp {

// Dense row-major matrix. Small-scale use only (feature batches, covariance
// matrices of a few dozen assets), so no BLAS backing.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  std::span<double> row(int r) { return {data.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)}; }
  std::span<const double> row(int r) const {
    return {data.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)};
  }

  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

// C = A * B
Matrix matmul(const Matrix& a, const Matrix& b);
// C = A^T * B
Matrix matmul_at_b(const Matrix& a, const Matrix& b);
// C = A * B^T
Matrix matmul_a_bt(const Matrix& a, const Matrix& b);

double dot(std::span<const double> a, std::span<const double> b);

// y = A * x for square/rectangular A.
std::vector<double> matvec(const Matrix& a, std::span<const double> x);

double mean(std::span<const double> v);
// Sample standard deviation (T-1 denominator).
double sample_stddev(std::span<const double> v);

// Eigenvalues of a symmetric matrix via cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(const Matrix& a);

// Solves A x = b by Gaussian elimination with partial pivoting.
// Returns false if A is numerically singular.
bool solve_linear(Matrix a, std::vector<double> b, std::vector<double>& x);

// Euclidean projection onto the probability simplex {w : sum w = 1, w >= 0}.
std::vector<double> project_to_simplex(std::vector<double> v);

}  // namespace dewsp
