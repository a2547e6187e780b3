#include "oversmooth/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace oversmooth {

DenseMatrix::DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("DenseMatrix: negative dimensions");
  }
  data_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

DenseMatrix::DenseMatrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 0 || cols < 0 ||
      data_.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("DenseMatrix: entry count does not match shape");
  }
  if (!all_finite()) {
    throw std::invalid_argument("DenseMatrix: non-finite entry");
  }
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double DenseMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : data_) sum += v * v;
  return std::sqrt(sum);
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool DenseMatrix::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: inner dimensions differ (" +
                                std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + ")");
  }
  DenseMatrix c(a.rows(), b.cols());
  const int n = a.rows(), k_dim = a.cols(), m = b.cols();
  const double* b_data = b.data().data();
  for (int i = 0; i < n; ++i) {
    double* ci = c.data().data() + static_cast<std::size_t>(i) * m;
    for (int k = 0; k < k_dim; ++k) {
      const double aik = a(i, k);
      const double* bk = b_data + static_cast<std::size_t>(k) * m;
      for (int j = 0; j < m; ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

DenseMatrix transpose(const DenseMatrix& m) {
  DenseMatrix t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  }
  return t;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("add: shape mismatch");
  }
  DenseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    c.data()[i] = a.data()[i] + b.data()[i];
  }
  return c;
}

DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("subtract: shape mismatch");
  }
  DenseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    c.data()[i] = a.data()[i] - b.data()[i];
  }
  return c;
}

void scale_in_place(DenseMatrix& m, double factor) {
  for (double& v : m.data()) v *= factor;
}

double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("frobenius_distance: shape mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    const double d = a.data()[i] - b.data()[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  }
  return m;
}

bool bitwise_equal(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    if (a.data()[i] != b.data()[i]) return false;
  }
  return true;
}

}  // namespace oversmooth
