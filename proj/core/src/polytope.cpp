#include "latnorm/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "geometry_detail.hpp"
#include "latnorm/error.hpp"

namespace latnorm {

namespace {

int drop_axis(const Covector& w) {
  int k = 0;
  Int best = boost::multiprecision::abs(w[0]);
  for (int j = 1; j < w.dim(); ++j) {
    Int a = boost::multiprecision::abs(w[j]);
    if (a > best) {
      best = a;
      k = j;
    }
  }
  return k;
}

struct PlaneOfPolygon {
  Covector normal;  // primitive
  Int offset;
};

// Supporting plane of a 2-dimensional polytope in ambient dimension 3.
PlaneOfPolygon plane_of(const LatticePolytope& p) {
  const auto& vs = p.vertices();
  detail::AffineBasis basis = detail::affine_basis(vs);
  Covector n = detail::cross3(vs[static_cast<std::size_t>(basis.ids[1])] - vs[static_cast<std::size_t>(basis.ids[0])],
                              vs[static_cast<std::size_t>(basis.ids[2])] - vs[static_cast<std::size_t>(basis.ids[0])])
                   .primitive();
  return {n, n.dot(vs[0])};
}

// Box scan over the leading coordinates with the last coordinate solved as an
// exact interval from the facet inequalities. `tighten` shrinks every offset
// (1 for strict interior).
std::vector<Point> scan_full_dim(const LatticePolytope& p, const Int& tighten) {
  const int d = p.ambient_dim();
  const auto& vs = p.vertices();
  std::vector<Int> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    lo[static_cast<std::size_t>(j)] = vs[0][j];
    hi[static_cast<std::size_t>(j)] = vs[0][j];
    for (const Point& v : vs) {
      lo[static_cast<std::size_t>(j)] = std::min(lo[static_cast<std::size_t>(j)], v[j]);
      hi[static_cast<std::size_t>(j)] = std::max(hi[static_cast<std::size_t>(j)], v[j]);
    }
  }

  std::vector<Point> out;
  std::vector<Int> x(static_cast<std::size_t>(d));
  const auto& facets = p.facets();

  // odometer over coordinates 0..d-2, ascending => lexicographic output
  std::vector<Int> cur(static_cast<std::size_t>(d - 1));
  for (int j = 0; j + 1 < d; ++j) cur[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
  while (true) {
    Int zlo = lo[static_cast<std::size_t>(d - 1)], zhi = hi[static_cast<std::size_t>(d - 1)];
    bool feasible = true;
    for (const Facet& f : facets) {
      Int s = 0;
      for (int j = 0; j + 1 < d; ++j) s += f.normal[j] * cur[static_cast<std::size_t>(j)];
      Int rhs = f.offset - tighten - s;
      const Int& cz = f.normal[d - 1];
      if (cz == 0) {
        if (rhs < 0) {
          feasible = false;
          break;
        }
      } else if (cz > 0) {
        zhi = std::min(zhi, floor_div(rhs, cz));
      } else {
        zlo = std::max(zlo, ceil_div(rhs, cz));
      }
    }
    if (feasible) {
      for (Int z = zlo; z <= zhi; ++z) {
        for (int j = 0; j + 1 < d; ++j) x[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(d - 1)] = z;
        out.emplace_back(x);
      }
    }
    int j = d - 2;
    while (j >= 0) {
      ++cur[static_cast<std::size_t>(j)];
      if (cur[static_cast<std::size_t>(j)] <= hi[static_cast<std::size_t>(j)]) break;
      cur[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
      --j;
    }
    if (j < 0) break;
  }
  return out;
}

}  // namespace

bool LatticePolytope::contains(const Point& p) const {
  if (p.dim() != ambient_) {
    throw Error(ErrorKind::DimensionMismatch, "contains: point dimension mismatch");
  }
  if (dim_ < 0) return false;
  if (full_dimensional()) {
    for (const Facet& f : facets_) {
      if (f.normal.dot(p) > f.offset) return false;
    }
    return true;
  }
  if (dim_ == 0) return p == vertices_[0];
  if (dim_ == 1) {
    const Point& a = vertices_[0];
    const Point& b = vertices_[1];
    Vec step = (b - a).primitive();
    Vec s = p - a;
    int i = 0;
    while (step[i] == 0) ++i;
    for (int j = 0; j < p.dim(); ++j) {
      if (s[j] * step[i] != s[i] * step[j]) return false;  // not on the line
    }
    if (s[i] % step[i] != 0) return false;
    Int k = s[i] / step[i];
    return k >= 0 && k <= (b - a).content();
  }
  // polygon inside a plane of 3-space
  PlaneOfPolygon pl = plane_of(*this);
  if (pl.normal.dot(p) != pl.offset) return false;
  PlaneBasis basis(pl.normal, pl.offset);
  std::vector<Point> mapped;
  mapped.reserve(vertices_.size());
  for (const Point& v : vertices_) mapped.push_back(basis.to_plane(v));
  return convex_hull(mapped).contains(basis.to_plane(p));
}

std::vector<std::pair<int, int>> LatticePolytope::edges() const {
  std::vector<std::pair<int, int>> out;
  if (dim_ <= 0) return out;
  if (dim_ == 1) {
    out.emplace_back(0, 1);
    return out;
  }
  if (!full_dimensional()) {
    throw Error(ErrorKind::NotFullDimensional,
                "edges of a non-full-dimensional polygon are not tracked");
  }
  if (ambient_ == 2) {
    for (const Facet& f : facets_) out.emplace_back(f.vertices[0], f.vertices[1]);
  } else {
    std::set<std::pair<int, int>> edge_set;
    for (std::size_t a = 0; a < facets_.size(); ++a) {
      for (std::size_t b = a + 1; b < facets_.size(); ++b) {
        std::vector<int> shared;
        std::set_intersection(facets_[a].vertices.begin(), facets_[a].vertices.end(),
                              facets_[b].vertices.begin(), facets_[b].vertices.end(),
                              std::back_inserter(shared));
        if (shared.size() == 2) edge_set.insert({shared[0], shared[1]});
      }
    }
    out.assign(edge_set.begin(), edge_set.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool LatticePolytope::operator==(const LatticePolytope& o) const {
  return ambient_ == o.ambient_ && dim_ == o.dim_ && vertices_ == o.vertices_;
}

std::vector<Facet> facet_representation(const LatticePolytope& p) {
  if (!p.full_dimensional()) {
    throw Error(ErrorKind::NotFullDimensional,
                "facet representation requires a full-dimensional polytope (dim " +
                    std::to_string(p.dim()) + " in ambient " +
                    std::to_string(p.ambient_dim()) + ")");
  }
  return p.facets();
}

std::vector<Point> lattice_points(const LatticePolytope& p) {
  if (p.dim() < 0) return {};
  if (p.dim() == 0) return {p.vertices()[0]};
  if (p.dim() == 1) {
    const Point& a = p.vertices()[0];
    const Point& b = p.vertices()[1];
    Vec diff = b - a;
    Int g = diff.content();
    Vec step = diff.primitive();
    std::vector<Point> out;
    for (Int k = 0; k <= g; ++k) out.push_back(a + step.scaled(k));
    std::sort(out.begin(), out.end());
    return out;
  }
  if (p.full_dimensional()) return scan_full_dim(p, Int(0));

  // 2-dimensional polytope inside a plane of 3-space: enumerate in the
  // intrinsic plane lattice and map back.
  PlaneOfPolygon pl = plane_of(p);
  PlaneBasis basis(pl.normal, pl.offset);
  std::vector<Point> mapped;
  mapped.reserve(p.vertices().size());
  for (const Point& v : p.vertices()) mapped.push_back(basis.to_plane(v));
  std::vector<Point> out;
  for (const Point& q : lattice_points(convex_hull(mapped))) {
    out.push_back(basis.from_plane(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> interior_lattice_points(const LatticePolytope& p) {
  if (!p.full_dimensional()) {
    throw Error(ErrorKind::NotFullDimensional,
                "interior lattice points require a full-dimensional polytope");
  }
  // Integer dot products make strict inequalities equivalent to offset - 1.
  return scan_full_dim(p, Int(1));
}

LatticePolytope dilate(const LatticePolytope& p, const Int& k) {
  if (k < 1) {
    throw Error(ErrorKind::InvalidDilation, "dilation factor must be >= 1, got " + k.str());
  }
  std::vector<Point> scaled;
  scaled.reserve(p.vertices().size());
  for (const Point& v : p.vertices()) scaled.push_back(v.scaled(k));
  return convex_hull(scaled);
}

std::vector<Point> minkowski_point_sum(const std::vector<Point>& s,
                                       const std::vector<Point>& t) {
  std::set<Point> out;
  for (const Point& a : s) {
    for (const Point& b : t) out.insert(a + b);
  }
  return {out.begin(), out.end()};
}

RationalPolygon slice(const LatticePolytope& p, const Covector& w, const Int& c) {
  if (!p.full_dimensional()) {
    throw Error(ErrorKind::NotFullDimensional, "slice requires a full-dimensional polytope");
  }
  if (w.dim() != p.ambient_dim() || w.is_zero()) {
    throw Error(ErrorKind::DimensionMismatch, "invalid slicing covector " + w.str());
  }
  const auto& vs = p.vertices();
  std::vector<Int> vals;
  vals.reserve(vs.size());
  Int lo = w.dot(vs[0]), hi = lo;
  for (const Point& v : vs) {
    vals.push_back(w.dot(v));
    lo = std::min(lo, vals.back());
    hi = std::max(hi, vals.back());
  }
  if (c < lo || c > hi) {
    throw Error(ErrorKind::LevelOutOfRange,
                "level " + c.str() + " outside [" + lo.str() + ", " + hi.str() +
                    "] of " + w.str());
  }

  std::set<RatVec> pts;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vals[i] == c) pts.insert(RatVec(vs[i]));
  }
  for (const auto& [a, b] : p.edges()) {
    const Int& va = vals[static_cast<std::size_t>(a)];
    const Int& vb = vals[static_cast<std::size_t>(b)];
    if ((va < c && vb > c) || (va > c && vb < c)) {
      Rat t = Rat(c - va) / Rat(vb - va);
      std::vector<Rat> coords(static_cast<std::size_t>(p.ambient_dim()));
      for (int j = 0; j < p.ambient_dim(); ++j) {
        coords[static_cast<std::size_t>(j)] =
            Rat(vs[static_cast<std::size_t>(a)][j]) +
            t * Rat(vs[static_cast<std::size_t>(b)][j] - vs[static_cast<std::size_t>(a)][j]);
      }
      pts.insert(RatVec(std::move(coords)));
    }
  }

  RationalPolygon poly;
  poly.normal = w;
  poly.offset = c;
  if (pts.empty()) return poly;

  std::vector<RatVec> all(pts.begin(), pts.end());
  if (all.size() <= 2) {
    poly.vertices = all;
    poly.dim = static_cast<int>(all.size()) - 1;
  } else {
    int k = drop_axis(w);
    int u = k == 0 ? 1 : 0;
    int v = (p.ambient_dim() == 3) ? (k == 2 ? 1 : 2) : u;
    std::vector<detail::P2<Rat>> proj;
    proj.reserve(all.size());
    for (const RatVec& q : all) {
      if (p.ambient_dim() == 2) {
        // slicing a polygon by a line gives at most a segment; handled above
        throw Error(ErrorKind::Internal, "polygon slice with 3 distinct points");
      }
      proj.push_back({q[u], q[v]});
    }
    std::vector<int> extreme = detail::hull2d_indices(proj);
    for (int id : extreme) poly.vertices.push_back(all[static_cast<std::size_t>(id)]);
    std::sort(poly.vertices.begin(), poly.vertices.end());
    poly.dim = poly.vertices.size() == 2 ? 1 : 2;
  }
  poly.is_lattice = std::all_of(poly.vertices.begin(), poly.vertices.end(),
                                [](const RatVec& q) { return q.is_integral(); });
  return poly;
}

std::vector<Point> RationalPolygon::lattice_vertices() const {
  if (!is_lattice) {
    throw Error(ErrorKind::NotLatticeSlice,
                "slice at level " + offset.str() + " of " + normal.str() +
                    " has non-integral vertices");
  }
  std::vector<Point> out;
  out.reserve(vertices.size());
  for (const RatVec& v : vertices) out.push_back(v.to_vec());
  return out;
}

LatticePolytope unimodular_image(const LatticePolytope& p, const Mat& u, const Vec& t) {
  if (u.rows() != p.ambient_dim() || u.cols() != p.ambient_dim() ||
      t.dim() != p.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "unimodular map dimension mismatch");
  }
  Int d = u.det();
  if (d != 1 && d != -1) {
    throw Error(ErrorKind::NotUnimodular, "determinant is " + d.str());
  }
  std::vector<Point> mapped;
  mapped.reserve(p.vertices().size());
  for (const Point& v : p.vertices()) mapped.push_back(u.apply(v) + t);
  return convex_hull(mapped);
}

std::vector<RatVec> vertices_from_halfspaces(
    const std::vector<std::pair<Covector, Int>>& halfspaces) {
  if (halfspaces.empty()) throw Error(ErrorKind::EmptyInput, "no halfspaces");
  const int d = halfspaces[0].first.dim();
  const int n = static_cast<int>(halfspaces.size());

  auto satisfies_all = [&](const RatVec& x) {
    for (const auto& [normal, offset] : halfspaces) {
      if (x.dot(normal) > Rat(offset)) return false;
    }
    return true;
  };

  std::set<RatVec> out;
  std::vector<int> combo(static_cast<std::size_t>(d));
  auto solve_combo = [&]() {
    Mat a(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        a.at(i, j) = halfspaces[static_cast<std::size_t>(combo[static_cast<std::size_t>(i)])].first[j];
      }
    }
    Int det = a.det();
    if (det == 0) return;
    std::vector<Rat> x(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      Mat aj = a;
      for (int i = 0; i < d; ++i) {
        aj.at(i, j) = halfspaces[static_cast<std::size_t>(combo[static_cast<std::size_t>(i)])].second;
      }
      x[static_cast<std::size_t>(j)] = Rat(aj.det(), det);
    }
    RatVec candidate{std::move(x)};
    if (satisfies_all(candidate)) out.insert(candidate);
  };

  // all d-subsets of the inequality list
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    combo = idx;
    solve_combo();
    int j = d - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - d + j) --j;
    if (j < 0) break;
    ++idx[static_cast<std::size_t>(j)];
    for (int i = j + 1; i < d; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return {out.begin(), out.end()};
}

}  // namespace latnorm
