#pragma once

#include <array>
#include <vector>

#include "latnorm/lattice.hpp"

// Internal helpers shared by the hull, polytope and normality translation
// units. Not installed.

namespace latnorm::detail {

struct AffineBasis {
  int rank = 0;               // affine dimension of the point set
  std::vector<int> ids;       // ids[0] base point, ids[1..rank] span the set
};

AffineBasis affine_basis(const std::vector<Point>& pts);

Vec cross3(const Vec& u, const Vec& v);

// det[b-a, c-a, p-a]; positive means p on the outward side of oriented (a,b,c).
Int orient3(const Point& a, const Point& b, const Point& c, const Point& p);

template <class T>
struct P2 {
  T x, y;
  bool operator<(const P2& o) const { return x != o.x ? x < o.x : y < o.y; }
  bool operator==(const P2& o) const { return x == o.x && y == o.y; }
};

// Monotone chain. Returns indices of the extreme points in counterclockwise
// order starting from the lexicographic minimum; collinear points dropped.
// Input must be duplicate-free.
template <class T>
std::vector<int> hull2d_indices(const std::vector<P2<T>>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(),
            [&pts](int a, int b) { return pts[static_cast<std::size_t>(a)] < pts[static_cast<std::size_t>(b)]; });
  if (n <= 2) return order;

  auto cross = [&pts](int o, int a, int b) {
    const P2<T>&po = pts[static_cast<std::size_t>(o)], &pa = pts[static_cast<std::size_t>(a)],
                &pb = pts[static_cast<std::size_t>(b)];
    return (pa.x - po.x) * (pb.y - po.y) - (pa.y - po.y) * (pb.x - po.x);
  };

  std::vector<int> h(static_cast<std::size_t>(2 * n));
  int k = 0;
  for (int idx = 0; idx < n; ++idx) {
    int i = order[static_cast<std::size_t>(idx)];
    while (k >= 2 && cross(h[static_cast<std::size_t>(k - 2)], h[static_cast<std::size_t>(k - 1)], i) <= 0) --k;
    h[static_cast<std::size_t>(k++)] = i;
  }
  for (int idx = n - 2, lower = k + 1; idx >= 0; --idx) {
    int i = order[static_cast<std::size_t>(idx)];
    while (k >= lower && cross(h[static_cast<std::size_t>(k - 2)], h[static_cast<std::size_t>(k - 1)], i) <= 0) --k;
    h[static_cast<std::size_t>(k++)] = i;
  }
  h.resize(static_cast<std::size_t>(k - 1));  // last point equals the first
  return h;
}

// Incremental exact 3D hull of a full-dimensional point set. Returns outward
// oriented triangles; corners may include points that end up inside facets,
// the facet assembly in convex_hull() prunes them.
std::vector<std::array<int, 3>> hull3d_triangles(const std::vector<Point>& pts,
                                                 const AffineBasis& basis);

}  // namespace latnorm::detail
