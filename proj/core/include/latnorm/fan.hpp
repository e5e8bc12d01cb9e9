#pragma once

#include <optional>
#include <vector>

#include "latnorm/polytope.hpp"

namespace latnorm {

/// Primitive edge directions at a vertex (the generators of R>=0(P - apex)).
struct VertexCone {
  Point apex;
  std::vector<Vec> edge_dirs;  // primitive, lexicographically sorted
};

/// Per-vertex set of the primitive outward facet normals tight there; the
/// polytope-side description of the normal fan.
struct FanCone {
  Point vertex;
  std::vector<Covector> normals;  // lexicographically sorted
};

struct FanDescriptor {
  std::vector<FanCone> cones;  // ordered by vertex
};

struct SmoothnessReport {
  bool smooth = false;
  std::vector<Point> offenders;  // every failing vertex, sorted
};

struct ParallelFacetPair {
  int facet_a = -1;  // indices into facets(); normal_a == -normal_b
  int facet_b = -1;
  Covector direction;  // sign-canonical shared primitive direction
};

std::vector<VertexCone> vertex_cones(const LatticePolytope& p);

/// A polytope is smooth iff every vertex is simple (dim edges) and its
/// primitive edge directions form a lattice basis (determinant +-1).
SmoothnessReport is_smooth(const LatticePolytope& p);

FanDescriptor normal_fan(const LatticePolytope& p);

/// True iff the vertex cones agree as multisets of normal sets.
bool same_normal_fan(const LatticePolytope& a, const LatticePolytope& b);

/// Polytope-side nefness for ambient-2D polygons: every outward edge normal
/// of g occurs among f's. A segment contributes its two perpendicular
/// normals, a point none (vacuously nef). f must be a full-dimensional
/// polygon.
bool polygon_is_nef_on(const LatticePolytope& f, const LatticePolytope& g);

std::vector<ParallelFacetPair> parallel_facet_pairs(const LatticePolytope& p);

/// Primitive directions m0 (sign-canonical) such that for every vertex v
/// either m0 or -m0 lies in the cone R>=0(P - v); each certifies a fan map
/// onto the fan of the projective line. Candidates searched: max-norm <=
/// bound plus primitive vertex differences, so the result means "all found
/// up to the bound", never "none exists". Requires p smooth.
std::vector<Vec> fibration_directions(const LatticePolytope& p, int bound);

/// Hull of the interior lattice points: dim = -1 and no polytope when there
/// are none.
struct AdjointCore {
  std::optional<LatticePolytope> hull;
  int dim = -1;
};

AdjointCore adjoint_core(const LatticePolytope& q);

}  // namespace latnorm
