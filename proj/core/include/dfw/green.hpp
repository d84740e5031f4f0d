#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "dfw/geometry.hpp"

namespace dfw {

/// Straight constant element of a closed 2D boundary.
struct BoundaryElement {
  std::array<double, 2> start{};
  std::array<double, 2> end{};
  std::array<double, 2> midpoint{};
  std::array<double, 2> normal{};  // unit, outward
  double length = 0.0;
};

/// Closed counterclockwise polyline of constant elements.
struct BoundaryMesh {
  std::vector<BoundaryElement> elements;
  bool closed = true;

  std::size_t size() const { return elements.size(); }
  double perimeter() const;
  /// Throws DomainError unless the mesh is closed, counterclockwise, free of
  /// self-intersections and satisfies sum(length * normal) = 0.
  void check() const;
};

/// Builds a mesh from a closed vertex loop (last vertex connects to the
/// first). Clockwise loops are reversed.
BoundaryMesh mesh_from_vertices(std::vector<std::array<double, 2>> vertices);

/// N chords of equal arc on a circle, counterclockwise from angle 0.
BoundaryMesh discretize_circle(double cx, double cy, double radius, std::size_t n_elements);

/// N elements distributed over the polygon sides in proportion to side
/// length (at least one per side).
BoundaryMesh discretize_polygon(const std::vector<std::array<double, 2>>& vertices,
                                std::size_t n_elements);

/// Dirichlet data, the solved Neumann data and the additive constant of the
/// complete fundamental solution.
struct HarmonicModel {
  BoundaryMesh mesh;
  std::vector<double> dirichlet;
  std::vector<double> neumann;
  double constant = 0.0;
};

/// Integrals of the 2D kernel -ln(r)/2pi (single layer) and of its normal
/// derivative (double layer) over one element, seen from point (x, y).
struct ElementIntegrals {
  double single_layer = 0.0;
  double double_layer = 0.0;
};
ElementIntegrals element_integrals(const BoundaryElement& e, double x, double y);

/// Solves 1/2 g_i = sum_j q_j G_ij - sum_j g_j H_ij + c subject to
/// sum_j q_j L_j = 0 for the Neumann data q.
HarmonicModel solve_dirichlet(const BoundaryMesh& mesh, const std::vector<double>& g);

struct InteriorValue {
  double value = 0.0;
  bool near_boundary = false;  // closer than one element length to the boundary
};

/// Harmonic extension at an interior point. Throws DomainError for points
/// outside or on the boundary.
InteriorValue eval_interior(const HarmonicModel& model, const Point& x);

/// Winding-number containment test.
bool mesh_contains(const BoundaryMesh& mesh, double x, double y);

/// Distance from (x, y) to the nearest boundary element.
double distance_to_boundary(const BoundaryMesh& mesh, double x, double y);

/// Boundary data CSV `elem_index,mid_x,mid_y,g`.
struct BoundarySample {
  std::size_t index = 0;
  double mid_x = 0.0;
  double mid_y = 0.0;
  double g = 0.0;
};
std::vector<BoundarySample> read_boundary_csv(std::istream& in);
void write_boundary_csv(std::ostream& out, const BoundaryMesh& mesh, const std::vector<double>& g);

/// Dirichlet vector for a mesh from boundary samples; midpoints must match
/// within 1e-9 (relative to the mesh size).
std::vector<double> match_boundary_samples(const BoundaryMesh& mesh,
                                           const std::vector<BoundarySample>& samples);

void write_harmonic_model(std::ostream& out, const HarmonicModel& model);
HarmonicModel read_harmonic_model(std::istream& in);

}  // namespace dfw
