#include "dfw/point_cloud.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include "dfw/errors.hpp"
#include "dfw/text_io.hpp"

namespace dfw {

void PointCloud::check() const {
  if (!values.empty() && values.size() != points.size()) {
    throw ConfigError("point cloud has " + std::to_string(values.size()) + " values for " +
                      std::to_string(points.size()) + " points");
  }
  for (const auto& p : points) {
    if (p.dim() != dim()) throw DimensionError("point cloud mixes dimensions");
    if (p.has_time() != has_time()) throw ConfigError("point cloud mixes timed and untimed points");
  }
}

PointCloud read_point_cloud(std::istream& in) {
  const CsvTable table = read_csv(in);
  std::size_t n = 0;
  while (n < table.header.size() && table.header[n] == "x" + std::to_string(n + 1)) ++n;
  if (n == 0) throw ConfigError("point cloud header must start with x1");
  std::size_t next = n;
  const bool has_t = next < table.header.size() && table.header[next] == "t";
  if (has_t) ++next;
  const bool has_f = next < table.header.size() && table.header[next] == "f";
  if (has_f) ++next;
  if (next != table.header.size()) {
    throw ConfigError("unexpected point cloud column '" + table.header[next] +
                      "' (expected x1,...,xn[,t][,f])");
  }
  PointCloud cloud;
  for (const auto& row : table.rows) {
    std::vector<double> coords(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
    std::optional<double> t;
    if (has_t) t = row[n];
    cloud.points.emplace_back(std::move(coords), t);
    if (has_f) cloud.values.push_back(row[next - 1]);
  }
  cloud.check();
  return cloud;
}

PointCloud read_point_cloud_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  return read_point_cloud(in);
}

void write_point_cloud(std::ostream& out, const PointCloud& cloud) {
  cloud.check();
  std::vector<std::string> header;
  for (std::size_t i = 0; i < cloud.dim(); ++i) header.push_back("x" + std::to_string(i + 1));
  if (cloud.has_time()) header.emplace_back("t");
  if (cloud.has_values()) header.emplace_back("f");
  write_csv_header(out, header);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    std::vector<double> row = cloud.points[i].coords();
    if (cloud.has_time()) row.push_back(*cloud.points[i].t());
    if (cloud.has_values()) row.push_back(cloud.values[i]);
    write_csv_row(out, row);
  }
}

double rms(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += v * v;
  return std::sqrt(sum / static_cast<double>(values.size()));
}

}  // namespace dfw
