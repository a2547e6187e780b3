#pragma once

#include <cstddef>
#include <vector>

namespace oversmooth {

/// Row-major dense matrix of doubles, the shared numeric carrier of the
/// spectral and propagation code. Graphs stay sparse; everything that needs
/// a full spectrum or a feature block lives here. Sized for desk scale
/// (a few thousand rows), no BLAS behind it.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols);  // zero-filled
  DenseMatrix(int rows, int cols, std::vector<double> entries);  // rejects NaN/Inf

  static DenseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  double& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& m);
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);
void scale_in_place(DenseMatrix& m, double factor);

double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// Exact elementwise equality, used by the bitwise reduction-identity checks.
bool bitwise_equal(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace oversmooth
