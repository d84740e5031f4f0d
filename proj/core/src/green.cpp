#include "dfw/green.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include <Eigen/Dense>

#include "dfw/errors.hpp"
#include "dfw/text_io.hpp"

namespace dfw {
namespace {

constexpr double kPi = std::numbers::pi;
using Vec2 = std::array<double, 2>;

BoundaryElement make_element(const Vec2& a, const Vec2& b) {
  BoundaryElement e;
  e.start = a;
  e.end = b;
  e.midpoint = {0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])};
  const double dx = b[0] - a[0];
  const double dy = b[1] - a[1];
  e.length = std::hypot(dx, dy);
  if (!(e.length > 0.0)) throw DomainError("degenerate boundary element of zero length");
  e.normal = {dy / e.length, -dx / e.length};
  return e;
}

double signed_area(const std::vector<Vec2>& v) {
  double area = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % v.size()];
    area += a[0] * b[1] - b[0] * a[1];
  }
  return 0.5 * area;
}

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool segments_cross(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
  const double d1 = cross(q1, q2, p1);
  const double d2 = cross(q1, q2, p2);
  const double d3 = cross(p1, p2, q1);
  const double d4 = cross(p1, p2, q2);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

double point_segment_distance(const BoundaryElement& e, double x, double y) {
  const double tx = (e.end[0] - e.start[0]) / e.length;
  const double ty = (e.end[1] - e.start[1]) / e.length;
  const double u = std::clamp((x - e.start[0]) * tx + (y - e.start[1]) * ty, 0.0, e.length);
  return std::hypot(x - (e.start[0] + u * tx), y - (e.start[1] + u * ty));
}

// Antiderivative of ln(sqrt(u^2 + h^2)) in u.
double log_antiderivative(double u, double h) {
  const double s = u * u + h * h;
  const double ulog = s > 0.0 ? 0.5 * u * std::log(s) : 0.0;
  const double at = h != 0.0 ? h * std::atan(u / h) : 0.0;
  return ulog - u + at;
}

}  // namespace

double BoundaryMesh::perimeter() const {
  double total = 0.0;
  for (const auto& e : elements) total += e.length;
  return total;
}

void BoundaryMesh::check() const {
  if (elements.size() < 3) throw DomainError("boundary mesh needs at least 3 elements");
  const double scale = perimeter();
  double sx = 0.0;
  double sy = 0.0;
  std::vector<Vec2> vertices;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& e = elements[i];
    const auto& next = elements[(i + 1) % elements.size()];
    if (std::hypot(e.end[0] - next.start[0], e.end[1] - next.start[1]) > 1e-12 * scale) {
      throw DomainError("boundary mesh is not closed");
    }
    sx += e.length * e.normal[0];
    sy += e.length * e.normal[1];
    vertices.push_back(e.start);
  }
  if (std::hypot(sx, sy) > 1e-10 * std::max(1.0, scale)) {
    throw DomainError("boundary mesh violates the closure identity");
  }
  if (signed_area(vertices) <= 0.0) throw DomainError("boundary mesh must be counterclockwise");
  const std::size_t n = elements.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_cross(elements[i].start, elements[i].end, elements[j].start, elements[j].end)) {
        throw DomainError("boundary mesh self-intersects");
      }
    }
  }
}

BoundaryMesh mesh_from_vertices(std::vector<Vec2> vertices) {
  if (vertices.size() < 3) throw DomainError("boundary needs at least 3 vertices");
  const double area = signed_area(vertices);
  double extent = 0.0;
  for (const auto& v : vertices) extent = std::max({extent, std::abs(v[0]), std::abs(v[1])});
  if (std::abs(area) <= 1e-14 * std::max(1.0, extent * extent)) {
    throw DomainError("degenerate (collinear) boundary");
  }
  if (area < 0.0) std::reverse(vertices.begin(), vertices.end());
  BoundaryMesh mesh;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    mesh.elements.push_back(make_element(vertices[i], vertices[(i + 1) % vertices.size()]));
  }
  mesh.check();
  return mesh;
}

BoundaryMesh discretize_circle(double cx, double cy, double radius, std::size_t n_elements) {
  if (!(radius > 0.0)) throw DomainError("circle radius must be > 0");
  if (n_elements < 3) throw DomainError("circle needs at least 3 elements");
  std::vector<Vec2> vertices;
  for (std::size_t i = 0; i < n_elements; ++i) {
    const double theta = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n_elements);
    vertices.push_back({cx + radius * std::cos(theta), cy + radius * std::sin(theta)});
  }
  return mesh_from_vertices(std::move(vertices));
}

BoundaryMesh discretize_polygon(const std::vector<Vec2>& vertices, std::size_t n_elements) {
  if (vertices.size() < 3) throw DomainError("polygon needs at least 3 vertices");
  // Validates orientation and non-degeneracy on the coarse polygon first.
  const BoundaryMesh coarse = mesh_from_vertices(vertices);
  const std::size_t sides = coarse.size();
  if (n_elements < sides) throw DomainError("polygon needs at least one element per side");

  // Largest-remainder apportionment of the elements beyond one per side.
  const double perimeter = coarse.perimeter();
  const std::size_t extra = n_elements - sides;
  std::vector<std::size_t> counts(sides, 1);
  std::vector<double> remainders(sides);
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < sides; ++i) {
    const double share = static_cast<double>(extra) * coarse.elements[i].length / perimeter;
    const auto whole = static_cast<std::size_t>(std::floor(share));
    counts[i] += whole;
    assigned += whole;
    remainders[i] = share - static_cast<double>(whole);
  }
  std::vector<std::size_t> order(sides);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
  for (std::size_t i = 0; assigned < extra; ++i, ++assigned) ++counts[order[i]];

  std::vector<Vec2> points;
  for (std::size_t i = 0; i < sides; ++i) {
    const auto& side = coarse.elements[i];
    for (std::size_t k = 0; k < counts[i]; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(counts[i]);
      points.push_back({side.start[0] + t * (side.end[0] - side.start[0]),
                        side.start[1] + t * (side.end[1] - side.start[1])});
    }
  }
  return mesh_from_vertices(std::move(points));
}

ElementIntegrals element_integrals(const BoundaryElement& e, double x, double y) {
  const double tx = (e.end[0] - e.start[0]) / e.length;
  const double ty = (e.end[1] - e.start[1]) / e.length;
  const double ax = e.start[0] - x;
  const double ay = e.start[1] - y;
  const double u0 = ax * tx + ay * ty;
  const double u1 = u0 + e.length;
  double h = ax * e.normal[0] + ay * e.normal[1];
  // Collocation on the element's own line: the double layer vanishes.
  if (std::abs(h) <= 1e-14 * e.length) h = 0.0;
  ElementIntegrals out;
  out.single_layer = -(log_antiderivative(u1, h) - log_antiderivative(u0, h)) / (2.0 * kPi);
  if (h != 0.0) out.double_layer = -(std::atan(u1 / h) - std::atan(u0 / h)) / (2.0 * kPi);
  return out;
}

HarmonicModel solve_dirichlet(const BoundaryMesh& mesh, const std::vector<double>& g) {
  mesh.check();
  const std::size_t n = mesh.size();
  if (g.size() != n) throw DimensionError("boundary data size does not match the mesh");
  for (double v : g) {
    if (!std::isfinite(v)) throw DomainError("boundary data must be finite");
  }
  const auto N = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N + 1, N + 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(N + 1);
  for (Eigen::Index i = 0; i < N; ++i) {
    const auto& mid = mesh.elements[static_cast<std::size_t>(i)].midpoint;
    double hg = 0.0;
    for (Eigen::Index j = 0; j < N; ++j) {
      const auto& ej = mesh.elements[static_cast<std::size_t>(j)];
      ElementIntegrals I;
      if (i == j) {
        I.single_layer = ej.length / (2.0 * kPi) * (1.0 - std::log(0.5 * ej.length));
      } else {
        I = element_integrals(ej, mid[0], mid[1]);
      }
      A(i, j) = I.single_layer;
      hg += I.double_layer * g[static_cast<std::size_t>(j)];
    }
    A(i, N) = 1.0;
    rhs(i) = 0.5 * g[static_cast<std::size_t>(i)] + hg;
  }
  for (Eigen::Index j = 0; j < N; ++j) A(N, j) = mesh.elements[static_cast<std::size_t>(j)].length;

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-14)) {
    throw SingularSystemError("boundary element system is singular (degenerate mesh)",
                              rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity());
  }
  const Eigen::VectorXd sol = lu.solve(rhs);
  HarmonicModel model;
  model.mesh = mesh;
  model.dirichlet = g;
  model.neumann.assign(sol.data(), sol.data() + N);
  model.constant = sol(N);
  return model;
}

bool mesh_contains(const BoundaryMesh& mesh, double x, double y) {
  int winding = 0;
  for (const auto& e : mesh.elements) {
    const Vec2& a = e.start;
    const Vec2& b = e.end;
    const Vec2 p{x, y};
    if (a[1] <= y) {
      if (b[1] > y && cross(a, b, p) > 0.0) ++winding;
    } else if (b[1] <= y && cross(a, b, p) < 0.0) {
      --winding;
    }
  }
  return winding != 0;
}

double distance_to_boundary(const BoundaryMesh& mesh, double x, double y) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : mesh.elements) best = std::min(best, point_segment_distance(e, x, y));
  return best;
}

InteriorValue eval_interior(const HarmonicModel& model, const Point& x) {
  if (x.dim() != 2) throw DimensionError("harmonic model points must be 2D");
  const double px = x[0];
  const double py = x[1];
  const double scale = model.mesh.perimeter();
  InteriorValue out;
  double max_len = 0.0;
  for (const auto& e : model.mesh.elements) {
    const double d = point_segment_distance(e, px, py);
    if (d <= 1e-12 * scale) throw DomainError("evaluation point lies on the boundary");
    if (d < e.length) out.near_boundary = true;
    max_len = std::max(max_len, e.length);
  }
  if (!mesh_contains(model.mesh, px, py)) throw DomainError("evaluation point lies outside the boundary");
  double value = model.constant;
  for (std::size_t j = 0; j < model.mesh.size(); ++j) {
    const ElementIntegrals I = element_integrals(model.mesh.elements[j], px, py);
    value += model.neumann[j] * I.single_layer - model.dirichlet[j] * I.double_layer;
  }
  out.value = value;
  return out;
}

std::vector<BoundarySample> read_boundary_csv(std::istream& in) {
  const CsvTable table = read_csv(in);
  const std::size_t ci = table.column("elem_index");
  const std::size_t cx = table.column("mid_x");
  const std::size_t cy = table.column("mid_y");
  const std::size_t cg = table.column("g");
  std::vector<BoundarySample> samples;
  for (const auto& row : table.rows) {
    if (row[ci] < 0.0 || row[ci] != std::floor(row[ci])) throw ConfigError("elem_index must be a non-negative integer");
    samples.push_back({static_cast<std::size_t>(row[ci]), row[cx], row[cy], row[cg]});
  }
  return samples;
}

void write_boundary_csv(std::ostream& out, const BoundaryMesh& mesh, const std::vector<double>& g) {
  if (g.size() != mesh.size()) throw DimensionError("boundary data size does not match the mesh");
  write_csv_header(out, {"elem_index", "mid_x", "mid_y", "g"});
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    out << i << ',' << format_double(mesh.elements[i].midpoint[0]) << ','
        << format_double(mesh.elements[i].midpoint[1]) << ',' << format_double(g[i]) << '\n';
  }
}

std::vector<double> match_boundary_samples(const BoundaryMesh& mesh,
                                           const std::vector<BoundarySample>& samples) {
  if (samples.size() != mesh.size()) {
    throw ConfigError("boundary CSV has " + std::to_string(samples.size()) + " rows for " +
                      std::to_string(mesh.size()) + " elements");
  }
  const double tol = 1e-9 * std::max(1.0, mesh.perimeter());
  std::vector<double> g(mesh.size());
  std::vector<bool> seen(mesh.size(), false);
  for (const auto& s : samples) {
    if (s.index >= mesh.size() || seen[s.index]) throw ConfigError("bad or repeated elem_index");
    const auto& mid = mesh.elements[s.index].midpoint;
    if (std::hypot(mid[0] - s.mid_x, mid[1] - s.mid_y) > tol) {
      throw ConfigError("boundary CSV midpoint of element " + std::to_string(s.index) +
                        " does not match the mesh");
    }
    g[s.index] = s.g;
    seen[s.index] = true;
  }
  return g;
}

void write_harmonic_model(std::ostream& out, const HarmonicModel& model) {
  out << "dfw-harmonic-model v1\n";
  out << "elements " << model.mesh.size() << '\n';
  out << "constant " << format_double(model.constant) << '\n';
  for (std::size_t i = 0; i < model.mesh.size(); ++i) {
    const auto& e = model.mesh.elements[i];
    out << format_double(e.start[0]) << ' ' << format_double(e.start[1]) << ' '
        << format_double(e.end[0]) << ' ' << format_double(e.end[1]) << ' '
        << format_double(model.dirichlet[i]) << ' ' << format_double(model.neumann[i]) << '\n';
  }
}

HarmonicModel read_harmonic_model(std::istream& in) {
  std::string line;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      if (!trim(line).empty()) return;
    }
    throw ConfigError("truncated harmonic model");
  };
  next_line();
  if (trim(line) != "dfw-harmonic-model v1") throw ConfigError("not a harmonic model file");
  HarmonicModel model;
  std::string word;
  next_line();
  std::istringstream count_line(line);
  std::string count_text;
  count_line >> word >> count_text;
  if (word != "elements") throw ConfigError("harmonic model: expected 'elements'");
  const long count = parse_long(count_text, "element count");
  next_line();
  std::istringstream constant_line(line);
  std::string constant_text;
  constant_line >> word >> constant_text;
  if (word != "constant") throw ConfigError("harmonic model: expected 'constant'");
  model.constant = parse_double(constant_text, "constant");
  for (long i = 0; i < count; ++i) {
    next_line();
    std::istringstream fields(line);
    std::array<std::string, 6> f;
    for (auto& s : f) {
      if (!(fields >> s)) throw ConfigError("harmonic model: short element line");
    }
    model.mesh.elements.push_back(make_element({parse_double(f[0]), parse_double(f[1])},
                                               {parse_double(f[2]), parse_double(f[3])}));
    model.dirichlet.push_back(parse_double(f[4]));
    model.neumann.push_back(parse_double(f[5]));
  }
  model.mesh.check();
  return model;
}

}  // namespace dfw
