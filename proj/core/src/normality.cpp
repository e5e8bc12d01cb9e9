#include "latnorm/normality.hpp"

#include <algorithm>
#include <set>

#include "latnorm/fan.hpp"

namespace latnorm {

const char* to_string(CertKind kind) {
  switch (kind) {
    case CertKind::BruteForceLeaf: return "brute_force";
    case CertKind::CayleyLeaf: return "cayley";
    case CertKind::SlabNode: return "slab";
    case CertKind::SplitNode: return "split";
    case CertKind::UnionNode: return "union";
  }
  return "unknown";
}

CertificationFailure::CertificationFailure(const std::string& message,
                                           NormalityReport truth)
    : Error(ErrorKind::CertificationFailed, message), truth_(std::move(truth)) {}

Certificate Certificate::brute_force(LatticePolytope region, NormalityReport rep) {
  Certificate c;
  c.kind = CertKind::BruteForceLeaf;
  c.region = std::move(region);
  c.report = std::move(rep);
  return c;
}

Certificate Certificate::cayley(LatticePolytope region, Covector direction,
                                Int bottom, Int top) {
  Certificate c;
  c.kind = CertKind::CayleyLeaf;
  c.region = std::move(region);
  c.direction = std::move(direction);
  c.bottom_level = std::move(bottom);
  c.top_level = std::move(top);
  return c;
}

Certificate Certificate::slab(LatticePolytope region, Covector direction, Int lo,
                              Int hi, std::vector<Certificate> children) {
  Certificate c;
  c.kind = CertKind::SlabNode;
  c.region = std::move(region);
  c.direction = std::move(direction);
  c.level_lo = std::move(lo);
  c.level_hi = std::move(hi);
  c.children = std::move(children);
  return c;
}

Certificate Certificate::split(LatticePolytope region, Covector normal, Int offset,
                               Certificate lower, Certificate upper) {
  Certificate c;
  c.kind = CertKind::SplitNode;
  c.region = std::move(region);
  c.split_normal = std::move(normal);
  c.split_offset = std::move(offset);
  c.children.push_back(std::move(lower));
  c.children.push_back(std::move(upper));
  return c;
}

Certificate Certificate::union_node(LatticePolytope region,
                                    std::vector<Certificate> children) {
  Certificate c;
  c.kind = CertKind::UnionNode;
  c.region = std::move(region);
  c.children = std::move(children);
  return c;
}

namespace {

NormalityReport degree2_from_sets(const std::vector<Point>& base,
                                  const std::vector<Point>& doubled) {
  std::set<Point> sums;
  for (const Point& a : base) {
    for (const Point& b : base) sums.insert(a + b);
  }
  NormalityReport rep;
  rep.checked_degree = 2;
  for (const Point& t : doubled) {
    if (!sums.count(t)) rep.gaps.push_back(t);
  }
  rep.holds = rep.gaps.empty();
  return rep;
}

}  // namespace

NormalityReport check_degree2(const LatticePolytope& p) {
  if (p.vertices().empty()) {
    throw Error(ErrorKind::EmptyInput, "degree-2 check on an empty polytope");
  }
  return degree2_from_sets(lattice_points(p), lattice_points(dilate(p, 2)));
}

NormalityReport check_idp(const LatticePolytope& p, int kmax) {
  if (kmax < 2) {
    throw Error(ErrorKind::ConstraintViolation, "check_idp needs kmax >= 2");
  }
  std::vector<Point> base = lattice_points(p);
  std::vector<Point> prev = base;
  for (int k = 1; k < kmax; ++k) {
    std::vector<Point> next = lattice_points(dilate(p, k + 1));
    std::set<Point> sums;
    for (const Point& a : base) {
      for (const Point& b : prev) sums.insert(a + b);
    }
    NormalityReport rep;
    for (const Point& t : next) {
      if (!sums.count(t)) rep.gaps.push_back(t);
    }
    if (!rep.gaps.empty()) {
      rep.holds = false;
      rep.checked_degree = k + 1;  // dilation degree holding the first gap
      return rep;
    }
    prev = std::move(next);
  }
  NormalityReport rep;
  rep.holds = true;
  rep.checked_degree = kmax;
  return rep;
}

namespace {

struct CayleyAttempt {
  bool ok = false;
  bool saw_full_dim_base = false;
  bool saw_nef_failure = false;
};

// Shared by the certifier and the verifier: maps both slices into the
// intrinsic lattice of their planes (one PlaneBasis per level, both derived
// from the same primitive direction so normal sets are comparable) and tests
// the ample/nef pairing in both orientations.
CayleyAttempt cayley_pair_attempt(const RationalPolygon& bottom,
                                  const RationalPolygon& top) {
  CayleyAttempt result;
  PlaneBasis bottom_basis(bottom.normal, bottom.offset);
  PlaneBasis top_basis(top.normal, top.offset);

  auto to_polygon = [](const RationalPolygon& rp, const PlaneBasis& basis) {
    std::vector<Point> mapped;
    for (const Point& v : rp.lattice_vertices()) mapped.push_back(basis.to_plane(v));
    return convex_hull(mapped);
  };
  LatticePolytope f = to_polygon(bottom, bottom_basis);
  LatticePolytope g = to_polygon(top, top_basis);

  for (int orientation = 0; orientation < 2; ++orientation) {
    const LatticePolytope& base = orientation == 0 ? f : g;
    const LatticePolytope& other = orientation == 0 ? g : f;
    if (base.dim() != 2) continue;
    result.saw_full_dim_base = true;
    if (!is_smooth(base).smooth) continue;
    if (!polygon_is_nef_on(base, other)) {
      result.saw_nef_failure = true;
      continue;
    }
    result.ok = true;
    return result;
  }
  return result;
}

void require_adjacent_lattice_levels(const RationalPolygon& bottom,
                                     const RationalPolygon& top) {
  if (bottom.normal.dim() != 3 || top.normal.dim() != 3) {
    throw Error(ErrorKind::ConstraintViolation,
                "Cayley certification works on slices of 3-polytopes");
  }
  if (bottom.normal != top.normal) {
    throw Error(ErrorKind::ConstraintViolation,
                "slices use different directions " + bottom.normal.str() + " and " +
                    top.normal.str());
  }
  if (bottom.normal.content() != 1) {
    throw Error(ErrorKind::ConstraintViolation,
                "slice direction " + bottom.normal.str() + " is not primitive");
  }
  if (top.offset - bottom.offset != 1) {
    throw Error(ErrorKind::ConstraintViolation,
                "slices sit at lattice distance " + (top.offset - bottom.offset).str() +
                    ", need exactly 1");
  }
}

}  // namespace

Certificate cayley_certify(const RationalPolygon& bottom, const RationalPolygon& top) {
  require_adjacent_lattice_levels(bottom, top);
  if (!bottom.is_lattice || !top.is_lattice) {
    throw Error(ErrorKind::NotLatticeSlice,
                "Cayley certification needs lattice slices at levels " +
                    bottom.offset.str() + " and " + top.offset.str());
  }
  CayleyAttempt attempt = cayley_pair_attempt(bottom, top);
  if (!attempt.ok) {
    if (!attempt.saw_full_dim_base || attempt.saw_nef_failure) {
      throw Error(ErrorKind::NotNefPair,
                  attempt.saw_full_dim_base
                      ? "neither orientation satisfies the ample/nef pairing"
                      : "neither slice is a full-dimensional polygon");
    }
    throw Error(ErrorKind::NotSmoothBase,
                "no smooth full-dimensional base polygon among the two slices");
  }

  std::vector<Point> pts = bottom.lattice_vertices();
  for (const Point& p : top.lattice_vertices()) pts.push_back(p);
  return Certificate::cayley(convex_hull(pts), bottom.normal, bottom.offset,
                             top.offset);
}

std::pair<LatticePolytope, LatticePolytope> split_slab(const LatticePolytope& slab,
                                                       const Covector& normal,
                                                       const Int& offset) {
  if (!slab.full_dimensional()) {
    throw Error(ErrorKind::NotFullDimensional, "split_slab needs a full-dimensional slab");
  }
  const auto& vs = slab.vertices();
  std::vector<Int> vals;
  vals.reserve(vs.size());
  Int lo = normal.dot(vs[0]), hi = lo;
  for (const Point& v : vs) {
    vals.push_back(normal.dot(v));
    lo = std::min(lo, vals.back());
    hi = std::max(hi, vals.back());
  }
  if (!(lo < offset && offset < hi)) {
    throw Error(ErrorKind::DegenerateSplit,
                "hyperplane <" + normal.str() + ", x> = " + offset.str() +
                    " does not cross the slab interior (range [" + lo.str() + ", " +
                    hi.str() + "])");
  }

  std::vector<Point> lower, upper;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vals[i] <= offset) lower.push_back(vs[i]);
    if (vals[i] >= offset) upper.push_back(vs[i]);
  }
  for (const auto& [a, b] : slab.edges()) {
    const Int& va = vals[static_cast<std::size_t>(a)];
    const Int& vb = vals[static_cast<std::size_t>(b)];
    if ((va < offset && vb > offset) || (va > offset && vb < offset)) {
      Rat t = Rat(offset - va) / Rat(vb - va);
      std::vector<Rat> coords(static_cast<std::size_t>(slab.ambient_dim()));
      for (int j = 0; j < slab.ambient_dim(); ++j) {
        coords[static_cast<std::size_t>(j)] =
            Rat(vs[static_cast<std::size_t>(a)][j]) +
            t * Rat(vs[static_cast<std::size_t>(b)][j] - vs[static_cast<std::size_t>(a)][j]);
      }
      RatVec crossing{std::move(coords)};
      if (!crossing.is_integral()) {
        throw Error(ErrorKind::NonLatticeSplit,
                    "edge crossing " + crossing.str() + " is not a lattice point");
      }
      lower.push_back(crossing.to_vec());
      upper.push_back(crossing.to_vec());
    }
  }
  return {convex_hull(lower), convex_hull(upper)};
}

namespace {

Int width_along(const LatticePolytope& p, const Covector& w, Int* min_out = nullptr) {
  Int lo = w.dot(p.vertices()[0]), hi = lo;
  for (const Point& v : p.vertices()) {
    Int val = w.dot(v);
    lo = std::min(lo, val);
    hi = std::max(hi, val);
  }
  if (min_out) *min_out = lo;
  return hi - lo;
}

std::vector<Covector> dedup_canonical_directions(const std::vector<Covector>& dirs) {
  std::vector<Covector> out;
  std::set<Covector> seen;
  for (const Covector& d : dirs) {
    Covector c = d.canonical_sign();
    if (seen.insert(c).second) out.push_back(c);
  }
  return out;
}

std::size_t count_doubled_points(const LatticePolytope& p) {
  return lattice_points(dilate(p, 2)).size();
}

// Candidate split hyperplanes: integer-offset translates of the parent's
// facet normals that cross the slab interior. (The original facet offsets
// support the parent, so they can never cross a sub-slab; the translates are
// what makes the diagonal R+/R- cut of a slab expressible.)
Certificate certify_slab(const LatticePolytope& slab, const Covector& direction,
                         const Int& level, const std::vector<Facet>& parent_facets,
                         int depth, const CertifyConfig& config) {
  std::string cayley_failure;
  try {
    RationalPolygon bottom = slice(slab, direction, level);
    RationalPolygon top = slice(slab, direction, level + 1);
    return cayley_certify(bottom, top);
  } catch (const Error& e) {
    cayley_failure = e.what();
  }

  if (depth < config.max_split_depth) {
    std::vector<Covector> normals;
    for (const Facet& f : parent_facets) normals.push_back(f.normal);
    for (const Covector& n : dedup_canonical_directions(normals)) {
      Int lo;
      Int width = width_along(slab, n, &lo);
      for (Int c = lo + 1; c < lo + width; ++c) {
        try {
          auto [lower, upper] = split_slab(slab, n, c);
          Certificate lower_cert =
              certify_slab(lower, direction, level, parent_facets, depth + 1, config);
          Certificate upper_cert =
              certify_slab(upper, direction, level, parent_facets, depth + 1, config);
          return Certificate::split(slab, n, c, std::move(lower_cert),
                                    std::move(upper_cert));
        } catch (const Error&) {
          continue;
        }
      }
    }
  }

  if (static_cast<std::int64_t>(count_doubled_points(slab)) <= config.brute_threshold) {
    NormalityReport rep = check_degree2(slab);
    if (rep.holds) return Certificate::brute_force(slab, rep);
    throw Error(ErrorKind::SlabUncertifiable,
                "slab at level " + level.str() + " of " + direction.str() +
                    " is not normal; first gap " + rep.gaps[0].str());
  }
  throw Error(ErrorKind::SlabUncertifiable,
              "slab at level " + level.str() + " of " + direction.str() +
                  " resists every strategy (cayley: " + cayley_failure + ")");
}

}  // namespace

Certificate slab_decompose_certify(const LatticePolytope& p, const Covector& m0,
                                   const CertifyConfig& config) {
  if (!p.full_dimensional()) {
    throw Error(ErrorKind::NotFullDimensional, "slab decomposition needs a full-dimensional polytope");
  }
  if (m0.content() != 1) {
    throw Error(ErrorKind::ConstraintViolation,
                "slab direction " + m0.str() + " is not primitive");
  }
  Int lo;
  Int width = width_along(p, m0, &lo);
  Int hi = lo + width;

  std::vector<RationalPolygon> slices_by_level;
  for (Int i = lo; i <= hi; ++i) {
    RationalPolygon g = slice(p, m0, i);
    if (!g.is_lattice) {
      throw Error(ErrorKind::NonLatticeSlice,
                  "slice at level " + i.str() + " of " + m0.str() +
                      " has non-integral vertices; slab decomposition invalid");
    }
    slices_by_level.push_back(std::move(g));
  }

  std::vector<Certificate> children;
  for (Int i = lo; i < hi; ++i) {
    std::size_t k = static_cast<std::size_t>((i - lo).convert_to<long long>());
    std::vector<Point> pts = slices_by_level[k].lattice_vertices();
    for (const Point& q : slices_by_level[k + 1].lattice_vertices()) pts.push_back(q);
    LatticePolytope slab = convex_hull(pts);
    children.push_back(certify_slab(slab, m0, i, p.facets(), 0, config));
  }

  // Lemma-style cover identity, checked here and again by the verifier.
  std::set<Point> covered;
  for (const Certificate& child : children) {
    for (const Point& q : lattice_points(child.region)) covered.insert(q);
  }
  std::vector<Point> own = lattice_points(p);
  if (std::set<Point>(own.begin(), own.end()) != covered) {
    throw Error(ErrorKind::Internal, "slab children fail to cover the lattice points");
  }
  return Certificate::slab(p, m0, lo, hi, std::move(children));
}

Certificate certify_normality(const LatticePolytope& p, const CertifyConfig& config) {
  if (!p.full_dimensional()) {
    throw Error(ErrorKind::NotFullDimensional, "certification needs a full-dimensional polytope");
  }

  std::vector<Point> base = lattice_points(p);
  std::vector<Point> doubled = lattice_points(dilate(p, 2));
  if (static_cast<std::int64_t>(doubled.size()) <= config.brute_threshold) {
    NormalityReport rep = degree2_from_sets(base, doubled);
    if (rep.holds) return Certificate::brute_force(p, rep);
    throw CertificationFailure("degree-2 gaps found; first gap " + rep.gaps[0].str(),
                               std::move(rep));
  }

  std::vector<Covector> directions;
  for (const ParallelFacetPair& pair : parallel_facet_pairs(p)) {
    directions.push_back(pair.direction);
  }
  directions = dedup_canonical_directions(directions);

  // lattice width 1 in a parallel-facet direction: p is itself a Cayley polytope
  for (const Covector& w : directions) {
    Int lo;
    if (width_along(p, w, &lo) != 1) continue;
    try {
      return cayley_certify(slice(p, w, lo), slice(p, w, lo + 1));
    } catch (const Error&) {
      continue;
    }
  }

  std::vector<Covector> slab_dirs = directions;
  if (is_smooth(p).smooth) {
    for (const Vec& m0 : fibration_directions(p, config.fibration_bound)) {
      slab_dirs.push_back(m0);
    }
    slab_dirs = dedup_canonical_directions(slab_dirs);
  }
  for (const Covector& w : slab_dirs) {
    try {
      return slab_decompose_certify(p, w, config);
    } catch (const Error&) {
      continue;
    }
  }

  NormalityReport truth = degree2_from_sets(base, doubled);
  throw CertificationFailure(
      truth.holds ? "no strategy produced a certificate (the polytope is normal; "
                    "this is a strategy gap, not a counterexample)"
                  : "degree-2 gaps found; first gap " + truth.gaps[0].str(),
      std::move(truth));
}

namespace {

struct VerifyFail {
  std::string reason;
};

void vcheck(bool cond, const std::string& reason) {
  if (!cond) throw VerifyFail{reason};
}

void verify_cover_identities(const Certificate& node) {
  vcheck(!node.children.empty(), "inner node with no children");
  for (const Certificate& child : node.children) {
    for (const Point& v : child.region.vertices()) {
      vcheck(node.region.contains(v),
             "child vertex " + v.str() + " escapes the parent region");
    }
  }
  auto point_set = [](const LatticePolytope& p) {
    auto pts = lattice_points(p);
    return std::set<Point>(pts.begin(), pts.end());
  };
  std::set<Point> covered, covered2;
  for (const Certificate& child : node.children) {
    for (const Point& q : lattice_points(child.region)) covered.insert(q);
    for (const Point& q : lattice_points(dilate(child.region, 2))) covered2.insert(q);
  }
  vcheck(covered == point_set(node.region),
         "children do not cover the region's lattice points exactly");
  // The doubled cover is what makes degree-2 composition sound: any point of
  // (2P) ∩ M must land in some (2Q_i) ∩ M to inherit a decomposition.
  vcheck(covered2 == point_set(dilate(node.region, 2)),
         "children do not cover the doubled region's lattice points exactly");
}

void verify_node(const Certificate& node) {
  vcheck(node.region.dim() >= 0, "node with an empty region");
  vcheck(node.region.full_dimensional(), "node region is not full-dimensional");

  switch (node.kind) {
    case CertKind::BruteForceLeaf: {
      vcheck(node.children.empty(), "brute-force leaf with children");
      vcheck(node.report.holds && node.report.gaps.empty(),
             "brute-force leaf claims a failing report");
      vcheck(node.report.checked_degree == 2, "brute-force leaf with wrong degree");
      NormalityReport recheck = check_degree2(node.region);
      vcheck(recheck.holds, "brute-force recheck found gaps, first " +
                                (recheck.gaps.empty() ? std::string("?")
                                                      : recheck.gaps[0].str()));
      return;
    }
    case CertKind::CayleyLeaf: {
      vcheck(node.children.empty(), "cayley leaf with children");
      vcheck(!node.direction.is_zero() && node.direction.content() == 1,
             "cayley direction is not primitive");
      vcheck(node.top_level - node.bottom_level == 1,
             "cayley levels " + node.bottom_level.str() + " and " +
                 node.top_level.str() + " are not at lattice distance 1");
      for (const Point& v : node.region.vertices()) {
        Int val = node.direction.dot(v);
        vcheck(val == node.bottom_level || val == node.top_level,
               "region vertex " + v.str() + " off the two cayley levels");
      }
      RationalPolygon bottom = slice(node.region, node.direction, node.bottom_level);
      RationalPolygon top = slice(node.region, node.direction, node.top_level);
      vcheck(bottom.is_lattice && top.is_lattice, "cayley slices are not lattice");
      vcheck(cayley_pair_attempt(bottom, top).ok,
             "cayley smooth/nef conditions fail on recheck");
      return;
    }
    case CertKind::SlabNode: {
      vcheck(!node.direction.is_zero() && node.direction.content() == 1,
             "slab direction is not primitive");
      Int lo;
      Int width = width_along(node.region, node.direction, &lo);
      vcheck(node.level_lo == lo && node.level_hi == lo + width,
             "slab levels disagree with the region");
      vcheck(Int(static_cast<long long>(node.children.size())) == width,
             "slab child count disagrees with the level range");
      for (std::size_t k = 0; k < node.children.size(); ++k) {
        Int level = node.level_lo + static_cast<long long>(k);
        RationalPolygon bottom = slice(node.region, node.direction, level);
        RationalPolygon top = slice(node.region, node.direction, level + 1);
        vcheck(bottom.is_lattice && top.is_lattice, "slab slice is not lattice");
        std::vector<Point> pts = bottom.lattice_vertices();
        for (const Point& q : top.lattice_vertices()) pts.push_back(q);
        vcheck(node.children[k].region == convex_hull(pts),
               "slab child " + std::to_string(k) + " is not the stated slab");
        verify_node(node.children[k]);
      }
      verify_cover_identities(node);
      return;
    }
    case CertKind::SplitNode: {
      vcheck(node.children.size() == 2, "split node without exactly two children");
      auto [lower, upper] =
          split_slab(node.region, node.split_normal, node.split_offset);
      vcheck(node.children[0].region == lower, "split lower half mismatch");
      vcheck(node.children[1].region == upper, "split upper half mismatch");
      verify_node(node.children[0]);
      verify_node(node.children[1]);
      verify_cover_identities(node);
      return;
    }
    case CertKind::UnionNode: {
      for (const Certificate& child : node.children) verify_node(child);
      verify_cover_identities(node);
      return;
    }
  }
  throw VerifyFail{"unknown node kind"};
}

}  // namespace

VerifyResult verify_certificate(const LatticePolytope& p, const Certificate& cert) {
  try {
    if (!(cert.region == p)) {
      return {false, "certificate region differs from the polytope"};
    }
    verify_node(cert);
    return {true, ""};
  } catch (const VerifyFail& f) {
    return {false, f.reason};
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

}  // namespace latnorm
