#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "geometry_detail.hpp"
#include "latnorm/error.hpp"
#include "latnorm/polytope.hpp"

namespace latnorm {

namespace detail {

namespace {

// Fraction-free row reduction over Z; rank only, entries stay exact.
class RowReducer {
 public:
  bool try_add(Vec v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      int pc = pivots_[i];
      if (v[pc] == 0) continue;
      Vec scaled_row = rows_[i].scaled(v[pc]);
      v = v.scaled(rows_[i][pc]) - scaled_row;
    }
    int pivot = -1;
    for (int j = 0; j < v.dim(); ++j) {
      if (v[j] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) return false;
    rows_.push_back(v.primitive());
    pivots_.push_back(pivot);
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

}  // namespace

AffineBasis affine_basis(const std::vector<Point>& pts) {
  AffineBasis basis;
  basis.ids.push_back(0);
  RowReducer red;
  for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
    if (red.try_add(pts[static_cast<std::size_t>(i)] - pts[0])) {
      basis.ids.push_back(i);
    }
  }
  basis.rank = red.rank();
  return basis;
}

Vec cross3(const Vec& u, const Vec& v) {
  return Vec(u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
             u[0] * v[1] - u[1] * v[0]);
}

Int orient3(const Point& a, const Point& b, const Point& c, const Point& p) {
  return cross3(b - a, c - a).dot(p - a);
}

std::vector<std::array<int, 3>> hull3d_triangles(const std::vector<Point>& pts,
                                                 const AffineBasis& basis) {
  // 4 * interior point of the initial tetrahedron; every intermediate hull
  // contains it strictly, so it orients faces unambiguously.
  const Point q4 = pts[static_cast<std::size_t>(basis.ids[0])] +
                   pts[static_cast<std::size_t>(basis.ids[1])] +
                   pts[static_cast<std::size_t>(basis.ids[2])] +
                   pts[static_cast<std::size_t>(basis.ids[3])];

  auto outward = [&](int a, int b, int c) -> std::array<int, 3> {
    const Point& pa = pts[static_cast<std::size_t>(a)];
    Int s = detail::cross3(pts[static_cast<std::size_t>(b)] - pa,
                           pts[static_cast<std::size_t>(c)] - pa)
                .dot(q4 - pa.scaled(4));
    if (s == 0) throw Error(ErrorKind::Internal, "degenerate hull face");
    return s < 0 ? std::array<int, 3>{a, b, c} : std::array<int, 3>{a, c, b};
  };

  std::vector<std::array<int, 3>> faces;
  std::vector<bool> alive;
  auto add_face = [&](int a, int b, int c) {
    faces.push_back(outward(a, b, c));
    alive.push_back(true);
  };

  std::set<int> seeded(basis.ids.begin(), basis.ids.end());
  add_face(basis.ids[0], basis.ids[1], basis.ids[2]);
  add_face(basis.ids[0], basis.ids[1], basis.ids[3]);
  add_face(basis.ids[0], basis.ids[2], basis.ids[3]);
  add_face(basis.ids[1], basis.ids[2], basis.ids[3]);

  for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
    if (seeded.count(p)) continue;
    const Point& pp = pts[static_cast<std::size_t>(p)];

    std::vector<int> visible;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      if (!alive[static_cast<std::size_t>(f)]) continue;
      const auto& t = faces[static_cast<std::size_t>(f)];
      if (orient3(pts[static_cast<std::size_t>(t[0])], pts[static_cast<std::size_t>(t[1])],
                  pts[static_cast<std::size_t>(t[2])], pp) > 0) {
        visible.push_back(f);
      }
    }
    if (visible.empty()) continue;  // inside or on the current hull

    std::set<int> visible_set(visible.begin(), visible.end());
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      if (!alive[static_cast<std::size_t>(f)]) continue;
      const auto& t = faces[static_cast<std::size_t>(f)];
      for (int e = 0; e < 3; ++e) {
        int u = t[static_cast<std::size_t>(e)], v = t[static_cast<std::size_t>((e + 1) % 3)];
        edge_faces[{std::min(u, v), std::max(u, v)}].push_back(f);
      }
    }

    std::vector<std::pair<int, int>> horizon;
    for (const auto& [edge, fs] : edge_faces) {
      if (fs.size() != 2) throw Error(ErrorKind::Internal, "non-manifold hull edge");
      bool va = visible_set.count(fs[0]) > 0, vb = visible_set.count(fs[1]) > 0;
      if (va != vb) horizon.push_back(edge);
    }

    for (int f : visible) alive[static_cast<std::size_t>(f)] = false;
    for (const auto& [u, v] : horizon) add_face(u, v, p);
  }

  std::vector<std::array<int, 3>> out;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    if (alive[static_cast<std::size_t>(f)]) out.push_back(faces[static_cast<std::size_t>(f)]);
  }
  return out;
}

}  // namespace detail

namespace {

struct PlaneKey {
  Covector normal;
  Int offset;
  bool operator<(const PlaneKey& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

// Drops the coordinate where |normal| is largest; injective on the plane.
int drop_axis(const Covector& normal) {
  int k = 0;
  Int best = boost::multiprecision::abs(normal[0]);
  for (int j = 1; j < normal.dim(); ++j) {
    Int a = boost::multiprecision::abs(normal[j]);
    if (a > best) {
      best = a;
      k = j;
    }
  }
  return k;
}

std::vector<detail::P2<Int>> project_points(const std::vector<Point>& pts,
                                            const std::vector<int>& ids, int drop) {
  int u = drop == 0 ? 1 : 0;
  int v = drop == 2 ? 1 : 2;
  std::vector<detail::P2<Int>> out;
  out.reserve(ids.size());
  for (int id : ids) {
    const Point& p = pts[static_cast<std::size_t>(id)];
    out.push_back({p[u], p[v]});
  }
  return out;
}

}  // namespace

LatticePolytope convex_hull(const std::vector<Point>& points) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "convex hull of no points");
  const int d = points[0].dim();
  if (d != 2 && d != 3) {
    throw Error(ErrorKind::DimensionMismatch,
                "ambient dimension must be 2 or 3, got " + std::to_string(d));
  }
  std::set<Point> dedup;
  for (const Point& p : points) {
    if (p.dim() != d) {
      throw Error(ErrorKind::DimensionMismatch, "mixed point dimensions in hull input");
    }
    dedup.insert(p);
  }
  std::vector<Point> pts(dedup.begin(), dedup.end());  // lex sorted

  LatticePolytope poly;
  poly.ambient_ = d;

  detail::AffineBasis basis = detail::affine_basis(pts);
  poly.dim_ = basis.rank;

  if (basis.rank == 0) {
    poly.vertices_ = {pts[0]};
    return poly;
  }
  if (basis.rank == 1) {
    // On a line the lexicographic order is monotone, so the extremes are the
    // lex endpoints.
    poly.vertices_ = {pts.front(), pts.back()};
    return poly;
  }

  if (basis.rank == 2 && d == 3) {
    Covector n = detail::cross3(pts[static_cast<std::size_t>(basis.ids[1])] - pts[static_cast<std::size_t>(basis.ids[0])],
                                pts[static_cast<std::size_t>(basis.ids[2])] - pts[static_cast<std::size_t>(basis.ids[0])])
                     .primitive();
    std::vector<int> all_ids(pts.size());
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) all_ids[static_cast<std::size_t>(i)] = i;
    auto proj = project_points(pts, all_ids, drop_axis(n));
    std::vector<int> hull_ids = detail::hull2d_indices(proj);
    std::sort(hull_ids.begin(), hull_ids.end());
    for (int id : hull_ids) poly.vertices_.push_back(pts[static_cast<std::size_t>(id)]);
    return poly;
  }

  if (basis.rank == 2 && d == 2) {
    std::vector<detail::P2<Int>> proj;
    proj.reserve(pts.size());
    for (const Point& p : pts) proj.push_back({p[0], p[1]});
    std::vector<int> ccw = detail::hull2d_indices(proj);

    const int m = static_cast<int>(ccw.size());
    std::vector<int> sorted_ids = ccw;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    std::map<int, int> remap;
    for (int i = 0; i < m; ++i) remap[sorted_ids[static_cast<std::size_t>(i)]] = i;
    for (int id : sorted_ids) poly.vertices_.push_back(pts[static_cast<std::size_t>(id)]);

    for (int i = 0; i < m; ++i) {
      const Point& a = pts[static_cast<std::size_t>(ccw[static_cast<std::size_t>(i)])];
      const Point& b = pts[static_cast<std::size_t>(ccw[static_cast<std::size_t>((i + 1) % m)])];
      Vec t = b - a;
      // For counterclockwise boundary the outward normal is the clockwise
      // rotation of the edge direction.
      Covector n = Vec(t[1], -t[0]).primitive();
      Facet f;
      f.normal = n;
      f.offset = n.dot(a);
      f.vertices = {remap[ccw[static_cast<std::size_t>(i)]], remap[ccw[static_cast<std::size_t>((i + 1) % m)]]};
      std::sort(f.vertices.begin(), f.vertices.end());
      poly.facets_.push_back(std::move(f));
    }
    std::sort(poly.facets_.begin(), poly.facets_.end(), [](const Facet& a, const Facet& b) {
      if (a.normal != b.normal) return a.normal < b.normal;
      return a.offset < b.offset;
    });
    return poly;
  }

  // rank 3 in ambient 3
  auto tris = detail::hull3d_triangles(pts, basis);

  std::map<PlaneKey, std::set<int>> plane_points;
  for (const auto& t : tris) {
    const Point& a = pts[static_cast<std::size_t>(t[0])];
    Covector n = detail::cross3(pts[static_cast<std::size_t>(t[1])] - a, pts[static_cast<std::size_t>(t[2])] - a)
                     .primitive();
    PlaneKey key{n, n.dot(a)};
    auto& ids = plane_points[key];
    ids.insert(t[0]);
    ids.insert(t[1]);
    ids.insert(t[2]);
  }

  std::map<PlaneKey, std::vector<int>> facet_vertex_ids;
  std::set<int> vertex_ids;
  for (const auto& [key, id_set] : plane_points) {
    std::vector<int> ids(id_set.begin(), id_set.end());
    auto proj = project_points(pts, ids, drop_axis(key.normal));
    std::vector<int> extreme = detail::hull2d_indices(proj);
    std::vector<int> original;
    original.reserve(extreme.size());
    for (int e : extreme) original.push_back(ids[static_cast<std::size_t>(e)]);
    std::sort(original.begin(), original.end());
    vertex_ids.insert(original.begin(), original.end());
    facet_vertex_ids[key] = std::move(original);
  }

  std::map<int, int> remap;
  for (int id : vertex_ids) {
    remap[id] = static_cast<int>(poly.vertices_.size());
    poly.vertices_.push_back(pts[static_cast<std::size_t>(id)]);  // set order = lex order
  }

  for (auto& [key, ids] : facet_vertex_ids) {
    Facet f;
    f.normal = key.normal;
    f.offset = key.offset;
    for (int id : ids) f.vertices.push_back(remap[id]);
    std::sort(f.vertices.begin(), f.vertices.end());
    poly.facets_.push_back(std::move(f));
  }
  std::sort(poly.facets_.begin(), poly.facets_.end(), [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  });
  return poly;
}

}  // namespace latnorm
