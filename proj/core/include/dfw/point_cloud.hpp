#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "dfw/geometry.hpp"

namespace dfw {

/// Points of one dimension, with optional sample values.
struct PointCloud {
  std::vector<Point> points;
  std::vector<double> values;  // empty, or one per point

  std::size_t size() const { return points.size(); }
  std::size_t dim() const { return points.empty() ? 0 : points.front().dim(); }
  bool has_values() const { return !values.empty(); }
  bool has_time() const { return !points.empty() && points.front().has_time(); }

  /// Throws DimensionError/ConfigError on mixed dimensions, partial time
  /// coordinates or a value count that does not match.
  void check() const;
};

/// CSV with header `x1,...,xn[,t][,f]`.
PointCloud read_point_cloud(std::istream& in);
PointCloud read_point_cloud_file(const std::string& path);
void write_point_cloud(std::ostream& out, const PointCloud& cloud);

/// Root mean square of a vector (0 for an empty one).
double rms(const std::vector<double>& values);

}  // namespace dfw
