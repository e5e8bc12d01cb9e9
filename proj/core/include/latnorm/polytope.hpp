#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latnorm/lattice.hpp"

namespace latnorm {

/// One inequality <normal, x> <= offset of the H-representation. Normals are
/// primitive and outward; `vertices` indexes the polytope vertices the facet
/// is tight on, ascending.
struct Facet {
  Covector normal;
  Int offset;
  std::vector<int> vertices;
};

/// Integral convex polytope given by its extreme points, with the facet list
/// attached when the polytope is full-dimensional in its ambient space.
/// Immutable after construction; all operations on it are pure functions.
class LatticePolytope {
 public:
  LatticePolytope() = default;

  int ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  bool full_dimensional() const { return dim_ == ambient_; }

  /// Extreme points, lexicographically sorted.
  const std::vector<Point>& vertices() const { return vertices_; }
  /// Irredundant facet list; only populated when full_dimensional().
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const Point& p) const;

  /// Edges as index pairs (i < j), derived from the facet structure.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const LatticePolytope& o) const;

  friend LatticePolytope convex_hull(const std::vector<Point>& points);

 private:
  int ambient_ = 0;
  int dim_ = -1;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
};

/// Exact section of a polytope by the hyperplane <normal, x> = offset.
struct RationalPolygon {
  Covector normal;
  Int offset;
  std::vector<RatVec> vertices;  // extreme points, lexicographically sorted
  int dim = -1;                  // -1 empty, 0 point, 1 segment, 2 polygon
  bool is_lattice = false;

  std::vector<Point> lattice_vertices() const;  // requires is_lattice
};

LatticePolytope convex_hull(const std::vector<Point>& points);

/// Complete irredundant facet list of a full-dimensional polytope.
std::vector<Facet> facet_representation(const LatticePolytope& p);

/// All lattice points of the polytope, lexicographically sorted.
std::vector<Point> lattice_points(const LatticePolytope& p);

/// Lattice points satisfying every facet inequality strictly.
std::vector<Point> interior_lattice_points(const LatticePolytope& p);

LatticePolytope dilate(const LatticePolytope& p, const Int& k);

std::vector<Point> minkowski_point_sum(const std::vector<Point>& s,
                                       const std::vector<Point>& t);

RationalPolygon slice(const LatticePolytope& p, const Covector& w, const Int& c);

LatticePolytope unimodular_image(const LatticePolytope& p, const Mat& u,
                                 const Vec& t);

/// Rational basic solutions of the system {<n_i, x> <= c_i} that satisfy every
/// inequality (i.e. the vertex set of the bounded intersection).
std::vector<RatVec> vertices_from_halfspaces(
    const std::vector<std::pair<Covector, Int>>& halfspaces);

}  // namespace latnorm
