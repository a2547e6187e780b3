#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "oversmooth/matrix.hpp"
#include "oversmooth/propagation.hpp"

namespace oversmooth {

/// Shortest round-trip decimal form, locale-independent.
std::string format_double(double v);

/// Feature CSV: header row "c0,c1,...", one node per line, node order = id order.
void save_features_csv(const DenseMatrix& features, std::ostream& out);
DenseMatrix load_features_csv(std::istream& in);
DenseMatrix load_features_csv_file(const std::string& path);

/// Trajectory CSV: "layer,d_m,mad,row_diff,col_diff", one row per layer.
void write_trajectory_csv(const Trajectory& t, std::ostream& out);

/// Long-format CSV for multi-config runs: "arch,layer,d_m,mad,row_diff,col_diff".
void write_compare_csv(
    const std::vector<std::pair<std::string, Trajectory>>& runs,
    std::ostream& out);

}  // namespace oversmooth
