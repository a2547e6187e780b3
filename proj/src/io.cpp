#include "oversmooth/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace oversmooth {

std::string format_double(double v) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

void save_features_csv(const DenseMatrix& features, std::ostream& out) {
  for (int j = 0; j < features.cols(); ++j) {
    out << (j ? ",c" : "c") << j;
  }
  out << '\n';
  for (int i = 0; i < features.rows(); ++i) {
    for (int j = 0; j < features.cols(); ++j) {
      if (j) out << ',';
      out << format_double(features(i, j));
    }
    out << '\n';
  }
}

DenseMatrix load_features_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("features csv: empty input");
  }
  // Header row fixes the channel count.
  int channels = 1;
  for (char c : line) {
    if (c == ',') ++channels;
  }
  std::vector<double> values;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream fields(line);
    std::string cell;
    int count = 0;
    while (std::getline(fields, cell, ',')) {
      std::size_t used = 0;
      values.push_back(std::stod(cell, &used));
      if (used != cell.size()) {
        throw std::invalid_argument("features csv: bad value '" + cell + "'");
      }
      ++count;
    }
    if (count != channels) {
      throw std::invalid_argument("features csv: row width does not match header");
    }
    ++rows;
  }
  if (rows == 0) throw std::invalid_argument("features csv: no data rows");
  return DenseMatrix(rows, channels, std::move(values));
}

DenseMatrix load_features_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open features csv: " + path);
  return load_features_csv(in);
}

void write_trajectory_csv(const Trajectory& t, std::ostream& out) {
  out << "layer,d_m,mad,row_diff,col_diff\n";
  for (const SmoothnessRecord& rec : t.records) {
    out << rec.layer << ',' << format_double(rec.d_m) << ','
        << format_double(rec.mad) << ',' << format_double(rec.row_diff) << ','
        << format_double(rec.col_diff) << '\n';
  }
}

namespace {

// Config labels may carry commas ("gcnii:alpha=0.1,beta=0"); quote per RFC 4180.
std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

void write_compare_csv(
    const std::vector<std::pair<std::string, Trajectory>>& runs,
    std::ostream& out) {
  out << "arch,layer,d_m,mad,row_diff,col_diff\n";
  for (const auto& [name, t] : runs) {
    const std::string label = csv_field(name);
    for (const SmoothnessRecord& rec : t.records) {
      out << label << ',' << rec.layer << ',' << format_double(rec.d_m) << ','
          << format_double(rec.mad) << ',' << format_double(rec.row_diff)
          << ',' << format_double(rec.col_diff) << '\n';
    }
  }
}

}  // namespace oversmooth
