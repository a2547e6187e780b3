#include "oversmooth/smoothness.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace oversmooth {

double subspace_distance(const DenseMatrix& h, const DenseMatrix& basis) {
  if (h.rows() != basis.rows()) {
    throw std::invalid_argument("subspace_distance: row counts differ");
  }
  // Projection residual H - E (E^T H); the infimum over the subspace is
  // attained there because the basis columns are orthonormal.
  const DenseMatrix coeffs = matmul(transpose(basis), h);
  const DenseMatrix projection = matmul(basis, coeffs);
  return frobenius_distance(h, projection);
}

namespace {

std::vector<double> row_norms(const DenseMatrix& h) {
  std::vector<double> norms(h.rows(), 0.0);
  for (int i = 0; i < h.rows(); ++i) {
    double sum = 0.0;
    for (int j = 0; j < h.cols(); ++j) sum += h(i, j) * h(i, j);
    norms[i] = std::sqrt(sum);
  }
  return norms;
}

double mad_over_nonzero_rows(const DenseMatrix& h, int* nonzero_rows) {
  const std::vector<double> norms = row_norms(h);
  std::vector<int> live;
  for (int i = 0; i < h.rows(); ++i) {
    if (norms[i] > 0.0) live.push_back(i);
  }
  *nonzero_rows = static_cast<int>(live.size());
  if (live.size() < 2) return 0.0;

  double total = 0.0;
  long pairs = 0;
  for (std::size_t a = 0; a < live.size(); ++a) {
    for (std::size_t b = a + 1; b < live.size(); ++b) {
      const int i = live[a], j = live[b];
      double dot = 0.0;
      for (int k = 0; k < h.cols(); ++k) dot += h(i, k) * h(j, k);
      total += 1.0 - dot / (norms[i] * norms[j]);
      ++pairs;
    }
  }
  return total / static_cast<double>(pairs);
}

double mean_row_distance(const DenseMatrix& h) {
  const int n = h.rows();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double sum = 0.0;
      for (int k = 0; k < h.cols(); ++k) {
        const double d = h(i, k) - h(j, k);
        sum += d * d;
      }
      total += std::sqrt(sum);
    }
  }
  // Ordered pairs: each unordered pair twice, diagonal contributes zero.
  return 2.0 * total / (static_cast<double>(n) * n);
}

double mean_column_distance(const DenseMatrix& h) {
  // L1-normalize columns; zero columns are excluded from the pairs.
  std::vector<std::vector<double>> cols;
  for (int j = 0; j < h.cols(); ++j) {
    double l1 = 0.0;
    for (int i = 0; i < h.rows(); ++i) l1 += std::abs(h(i, j));
    if (l1 == 0.0) continue;
    std::vector<double> col(h.rows());
    for (int i = 0; i < h.rows(); ++i) col[i] = h(i, j) / l1;
    cols.push_back(std::move(col));
  }
  const std::size_t c = cols.size();
  if (c < 2) return 0.0;
  double total = 0.0;
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = a + 1; b < c; ++b) {
      double sum = 0.0;
      for (int i = 0; i < h.rows(); ++i) {
        const double d = cols[a][i] - cols[b][i];
        sum += d * d;
      }
      total += std::sqrt(sum);
    }
  }
  return 2.0 * total / (static_cast<double>(c) * c);
}

}  // namespace

double mad(const DenseMatrix& h) {
  int nonzero_rows = 0;
  const double value = mad_over_nonzero_rows(h, &nonzero_rows);
  if (nonzero_rows < 2) {
    throw std::invalid_argument("mad: fewer than 2 rows with positive norm");
  }
  return value;
}

RowColDiff row_col_diff(const DenseMatrix& h) {
  if (h.rows() < 2 || h.cols() < 2) {
    throw std::invalid_argument("row_col_diff: needs at least 2 rows and 2 columns");
  }
  return {mean_row_distance(h), mean_column_distance(h)};
}

SmoothnessRecord measure_smoothness(int layer, const DenseMatrix& h,
                                    const DenseMatrix& basis) {
  SmoothnessRecord rec;
  rec.layer = layer;
  rec.d_m = subspace_distance(h, basis);
  int nonzero_rows = 0;
  rec.mad = mad_over_nonzero_rows(h, &nonzero_rows);
  rec.row_diff = h.rows() >= 2 ? mean_row_distance(h) : 0.0;
  rec.col_diff = mean_column_distance(h);
  return rec;
}

}  // namespace oversmooth
