#pragma once

#include "oversmooth/matrix.hpp"

namespace oversmooth {

/// d_M: Frobenius distance from h to the column space of the orthonormal
/// basis, attained by orthogonal projection.
double subspace_distance(const DenseMatrix& h, const DenseMatrix& basis);

/// Mean pairwise cosine distance over rows with positive norm. Throws when
/// fewer than two such rows exist; trajectory recording uses the lenient
/// variant below instead.
double mad(const DenseMatrix& h);

struct RowColDiff {
  double row_diff = 0.0;  // mean pairwise row L2 distance over ordered pairs
  double col_diff = 0.0;  // same over L1-normalized nonzero columns
};
RowColDiff row_col_diff(const DenseMatrix& h);

struct SmoothnessRecord {
  int layer = 0;
  double d_m = 0.0;
  double mad = 0.0;
  double row_diff = 0.0;
  double col_diff = 0.0;
};

/// Per-layer measurement used by the propagation engines. Zero rows/columns
/// are excluded rather than rejected (ReLU legitimately produces them); when
/// fewer than two rows/columns remain the affected metric reads 0.
SmoothnessRecord measure_smoothness(int layer, const DenseMatrix& h,
                                    const DenseMatrix& basis);

}  // namespace oversmooth
