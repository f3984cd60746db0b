#include "dewsp/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace dewsp {

Matrix matmul(const Matrix& a, const Matrix& b) {
  assert(a.cols == b.rows);
  Matrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      double aik = a.at(i, k);
      if (aik == 0.0) continue;
      const double* brow = b.data.data() + static_cast<size_t>(k) * b.cols;
      double* crow = c.data.data() + static_cast<size_t>(i) * c.cols;
      for (int j = 0; j < b.cols; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

Matrix matmul_at_b(const Matrix& a, const Matrix& b) {
  assert(a.rows == b.rows);
  Matrix c(a.cols, b.cols);
  for (int k = 0; k < a.rows; ++k) {
    const double* arow = a.data.data() + static_cast<size_t>(k) * a.cols;
    const double* brow = b.data.data() + static_cast<size_t>(k) * b.cols;
    for (int i = 0; i < a.cols; ++i) {
      double aki = arow[i];
      if (aki == 0.0) continue;
      double* crow = c.data.data() + static_cast<size_t>(i) * c.cols;
      for (int j = 0; j < b.cols; ++j) crow[j] += aki * brow[j];
    }
  }
  return c;
}

Matrix matmul_a_bt(const Matrix& a, const Matrix& b) {
  assert(a.cols == b.cols);
  Matrix c(a.rows, b.rows);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < b.rows; ++j) {
      c.at(i, j) = dot(a.row(i), b.row(j));
    }
  }
  return c;
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<double> matvec(const Matrix& a, std::span<const double> x) {
  assert(static_cast<size_t>(a.cols) == x.size());
  std::vector<double> y(a.rows, 0.0);
  for (int i = 0; i < a.rows; ++i) y[i] = dot(a.row(i), x);
  return y;
}

double mean(std::span<const double> v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sample_stddev(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

std::vector<double> symmetric_eigenvalues(const Matrix& a) {
  assert(a.rows == a.cols);
  int n = a.rows;
  Matrix m = a;

  double scale = 0.0;
  for (double x : m.data) scale = std::max(scale, std::fabs(x));
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += m.at(p, q) * m.at(p, q);
    if (off < 1e-28 * scale * scale) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = m.at(p, q);
        if (std::fabs(apq) < 1e-300) continue;
        double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double mkp = m.at(k, p), mkq = m.at(k, q);
          m.at(k, p) = c * mkp - s * mkq;
          m.at(k, q) = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          double mpk = m.at(p, k), mqk = m.at(q, k);
          m.at(p, k) = c * mpk - s * mqk;
          m.at(q, k) = s * mpk + c * mqk;
        }
      }
    }
  }

  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = m.at(i, i);
  std::sort(vals.begin(), vals.end());
  return vals;
}

bool solve_linear(Matrix a, std::vector<double> b, std::vector<double>& x) {
  assert(a.rows == a.cols && static_cast<size_t>(a.rows) == b.size());
  int n = a.rows;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a.at(r, col)) > std::fabs(a.at(pivot, col))) pivot = r;
    if (std::fabs(a.at(pivot, col)) < 1e-300) return false;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a.at(col, c), a.at(pivot, c));
      std::swap(b[col], b[pivot]);
    }
    for (int r = col + 1; r < n; ++r) {
      double f = a.at(r, col) / a.at(col, col);
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
      b[r] -= f * b[col];
    }
  }
  x.assign(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a.at(r, c) * x[c];
    x[r] = s / a.at(r, r);
  }
  return true;
}

std::vector<double> project_to_simplex(std::vector<double> v) {
  // Held-style projection: sort, find the threshold tau, clip at zero.
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumsum = 0.0;
  double tau = 0.0;
  int rho = 0;
  for (size_t j = 0; j < u.size(); ++j) {
    cumsum += u[j];
    double t = (cumsum - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) {
      rho = static_cast<int>(j + 1);
      tau = t;
    }
  }
  (void)rho;
  for (double& x : v) x = std::max(0.0, x - tau);
  return v;
}

}  // namespace dewsp
