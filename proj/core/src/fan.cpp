#include "latnorm/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "latnorm/error.hpp"

namespace latnorm {

namespace {

void require_full_dim(const LatticePolytope& p, const char* what) {
  if (!p.full_dimensional()) {
    throw Error(ErrorKind::NotFullDimensional,
                std::string(what) + " requires a full-dimensional polytope");
  }
}

std::vector<std::vector<Covector>> tight_normals_per_vertex(const LatticePolytope& p) {
  std::vector<std::vector<Covector>> out(p.vertices().size());
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    for (const Facet& f : p.facets()) {
      if (f.normal.dot(p.vertices()[i]) == f.offset) out[i].push_back(f.normal);
    }
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

}  // namespace

std::vector<VertexCone> vertex_cones(const LatticePolytope& p) {
  require_full_dim(p, "vertex_cones");
  auto edges = p.edges();
  std::vector<VertexCone> cones(p.vertices().size());
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    cones[i].apex = p.vertices()[static_cast<std::size_t>(i)];
  }
  for (const auto& [a, b] : edges) {
    const Point& pa = p.vertices()[static_cast<std::size_t>(a)];
    const Point& pb = p.vertices()[static_cast<std::size_t>(b)];
    cones[static_cast<std::size_t>(a)].edge_dirs.push_back((pb - pa).primitive());
    cones[static_cast<std::size_t>(b)].edge_dirs.push_back((pa - pb).primitive());
  }
  for (auto& cone : cones) std::sort(cone.edge_dirs.begin(), cone.edge_dirs.end());
  return cones;
}

SmoothnessReport is_smooth(const LatticePolytope& p) {
  require_full_dim(p, "is_smooth");
  SmoothnessReport report;
  report.smooth = true;
  for (const VertexCone& cone : vertex_cones(p)) {
    bool ok = static_cast<int>(cone.edge_dirs.size()) == p.ambient_dim();
    if (ok) {
      Int d = Mat::from_rows(cone.edge_dirs).det();
      ok = (d == 1 || d == -1);
    }
    if (!ok) {
      report.smooth = false;
      report.offenders.push_back(cone.apex);
    }
  }
  return report;
}

FanDescriptor normal_fan(const LatticePolytope& p) {
  require_full_dim(p, "normal_fan");
  FanDescriptor fan;
  auto tight = tight_normals_per_vertex(p);
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    fan.cones.push_back({p.vertices()[i], tight[i]});
  }
  return fan;
}

bool same_normal_fan(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "same_normal_fan across ambient dimensions");
  }
  require_full_dim(a, "same_normal_fan");
  require_full_dim(b, "same_normal_fan");
  auto canonical = [](const LatticePolytope& p) {
    auto cones = tight_normals_per_vertex(p);
    std::sort(cones.begin(), cones.end());
    return cones;
  };
  return canonical(a) == canonical(b);
}

namespace {

// Outward normal set of a polygon/segment/point in ambient dimension 2.
std::vector<Covector> polygon_normals(const LatticePolytope& g) {
  if (g.dim() <= 0) return {};
  if (g.dim() == 1) {
    Vec dir = (g.vertices()[1] - g.vertices()[0]).primitive();
    Covector n(dir[1], -dir[0]);
    std::vector<Covector> out{n, -n};
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Covector> out;
  for (const Facet& f : g.facets()) out.push_back(f.normal);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool polygon_is_nef_on(const LatticePolytope& f, const LatticePolytope& g) {
  if (f.ambient_dim() != 2 || g.ambient_dim() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "nefness is defined for ambient-2D polygons");
  }
  require_full_dim(f, "polygon_is_nef_on (base)");
  std::set<Covector> base_normals;
  for (const Facet& facet : f.facets()) base_normals.insert(facet.normal);
  for (const Covector& n : polygon_normals(g)) {
    if (!base_normals.count(n)) return false;
  }
  return true;
}

std::vector<ParallelFacetPair> parallel_facet_pairs(const LatticePolytope& p) {
  require_full_dim(p, "parallel_facet_pairs");
  std::vector<ParallelFacetPair> out;
  const auto& facets = p.facets();
  for (std::size_t a = 0; a < facets.size(); ++a) {
    for (std::size_t b = a + 1; b < facets.size(); ++b) {
      if (facets[a].normal == -facets[b].normal) {
        out.push_back({static_cast<int>(a), static_cast<int>(b),
                       facets[a].normal.canonical_sign()});
      }
    }
  }
  return out;
}

std::vector<Vec> fibration_directions(const LatticePolytope& p, int bound) {
  SmoothnessReport smooth = is_smooth(p);
  if (!smooth.smooth) {
    throw Error(ErrorKind::NotSmooth,
                "fibration search requires a smooth polytope; offending vertex " +
                    smooth.offenders[0].str());
  }
  const int d = p.ambient_dim();

  std::set<Vec> candidates;
  std::vector<Int> cur(static_cast<std::size_t>(d), Int(-bound));
  while (true) {
    Vec v{std::vector<Int>(cur)};
    if (!v.is_zero() && v.content() == 1) candidates.insert(v.canonical_sign());
    int j = d - 1;
    while (j >= 0) {
      ++cur[static_cast<std::size_t>(j)];
      if (cur[static_cast<std::size_t>(j)] <= bound) break;
      cur[static_cast<std::size_t>(j)] = -bound;
      --j;
    }
    if (j < 0) break;
  }
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    for (std::size_t j = i + 1; j < p.vertices().size(); ++j) {
      candidates.insert((p.vertices()[j] - p.vertices()[i]).primitive().canonical_sign());
    }
  }

  auto tight = tight_normals_per_vertex(p);
  std::vector<Vec> out;
  for (const Vec& m0 : candidates) {
    bool all_vertices_ok = true;
    for (const auto& normals : tight) {
      // m0 in the tangent cone at v  <=>  <n, m0> <= 0 for all outward tight n
      bool non_positive = true, non_negative = true;
      for (const Covector& n : normals) {
        int s = sign(n.dot(m0));
        if (s > 0) non_positive = false;
        if (s < 0) non_negative = false;
      }
      if (!non_positive && !non_negative) {
        all_vertices_ok = false;
        break;
      }
    }
    if (all_vertices_ok) out.push_back(m0);
  }
  return out;
}

AdjointCore adjoint_core(const LatticePolytope& q) {
  require_full_dim(q, "adjoint_core");
  std::vector<Point> interior = interior_lattice_points(q);
  AdjointCore core;
  if (interior.empty()) return core;
  core.hull = convex_hull(interior);
  core.dim = core.hull->dim();
  return core;
}

}  // namespace latnorm
