#include "latnorm/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "latnorm/error.hpp"
#include "latnorm/fan.hpp"
#include "latnorm/rng.hpp"

namespace latnorm {

const char* to_string(AdjointClass cls) {
  switch (cls) {
    case AdjointClass::Empty: return "empty";
    case AdjointClass::Point: return "point";
    case AdjointClass::Segment: return "segment";
    case AdjointClass::Polygon: return "polygon";
    case AdjointClass::Solid: return "solid";
  }
  return "unknown";
}

LatticePolytope basic_simplex(const Int& l) {
  if (l < 1) {
    throw Error(ErrorKind::InvalidDilation, "simplex scale must be >= 1, got " + l.str());
  }
  return convex_hull({Point{0, 0, 0}, Point{l, 0, 0}, Point{0, l, 0}, Point{0, 0, l}});
}

LatticePolytope reeve_simplex(const Int& q) {
  if (q < 1) {
    throw Error(ErrorKind::ConstraintViolation, "Reeve parameter must be >= 1, got " + q.str());
  }
  return convex_hull({Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}, Point(Int(1), Int(1), q)});
}

CatalogEntry fano_polytope(FanoClass cls) {
  switch (cls) {
    case FanoClass::F1:
      return {"fano-1", basic_simplex(4),
              "anticanonical polytope of projective 3-space: 4 * basic simplex"};
    case FanoClass::F3:
      return {"fano-3",
              convex_hull({Point{0, 0, 0}, Point{2, 0, 0}, Point{0, 4, 0},
                           Point{0, 0, 4}, Point{2, 2, 0}, Point{2, 0, 2}}),
              "anticanonical polytope of a plane bundle over the line: "
              "(4 * basic simplex) cut to 0 <= x <= 2"};
    case FanoClass::F4:
      return {"fano-4",
              convex_hull({Point{0, 0, 0}, Point{5, 0, 0}, Point{0, 5, 0},
                           Point{0, 0, 2}, Point{1, 0, 2}, Point{0, 1, 2}}),
              "anticanonical polytope of a plane bundle over the line, "
              "truncated dilated simplex with top triangle at height 2"};
    case FanoClass::F11:
      return {"fano-11",
              convex_hull({Point{0, 0, 0}, Point{4, 0, 0}, Point{0, 4, 0},
                           Point{0, 0, 2}, Point{1, 0, 2}, Point{0, 1, 2},
                           Point{3, 0, 1}, Point{0, 3, 1}}),
              "anticanonical polytope of the Fano threefold with two parallel "
              "facets (z = 0 and z = 2)"};
  }
  throw Error(ErrorKind::UnknownCatalogId, "unknown Fano class");
}

LatticePolytope truncated_simplex(const Int& n, const Int& m, const TruncationCuts& cuts) {
  if (m < 1 || m > n - 1) {
    throw Error(ErrorKind::ConstraintViolation,
                "need 1 <= m <= n-1, got n=" + n.str() + " m=" + m.str());
  }
  if (cuts.l1 && (*cuts.l1 < m + 1 || *cuts.l1 > n - 1)) {
    throw Error(ErrorKind::ConstraintViolation,
                "need m+1 <= l1 <= n-1, got l1=" + cuts.l1->str());
  }
  if (cuts.l2 && (*cuts.l2 < m + 1 || *cuts.l2 > n - 1)) {
    throw Error(ErrorKind::ConstraintViolation,
                "need m+1 <= l2 <= n-1, got l2=" + cuts.l2->str());
  }
  if (cuts.l3 && (*cuts.l3 < 1 || *cuts.l3 > m - 1)) {
    throw Error(ErrorKind::ConstraintViolation,
                "need 1 <= l3 <= m-1, got l3=" + cuts.l3->str());
  }

  std::vector<std::pair<Covector, Int>> halfspaces = {
      {Covector{-1, 0, 0}, Int(0)}, {Covector{0, -1, 0}, Int(0)},
      {Covector{0, 0, -1}, Int(0)}, {Covector{1, 1, 1}, n},
      {Covector{0, 0, 1}, m}};
  if (cuts.l1) halfspaces.push_back({Covector{1, 0, 0}, *cuts.l1});
  if (cuts.l2) halfspaces.push_back({Covector{0, 1, 0}, *cuts.l2});
  if (cuts.l3) halfspaces.push_back({Covector{-1, -1, -1}, -*cuts.l3});

  std::vector<Point> verts;
  for (const RatVec& v : vertices_from_halfspaces(halfspaces)) {
    if (!v.is_integral()) {
      throw Error(ErrorKind::Internal,
                  "truncated simplex produced a rational vertex " + v.str());
    }
    verts.push_back(v.to_vec());
  }
  LatticePolytope p = convex_hull(verts);
  if (p.dim() != 3) {
    throw Error(ErrorKind::ConstraintViolation, "cuts leave a degenerate region");
  }
  SmoothnessReport smooth = is_smooth(p);
  if (!smooth.smooth) {
    throw Error(ErrorKind::NotSmoothResult,
                "cuts produce a singular vertex at " + smooth.offenders[0].str());
  }
  return p;
}

CatalogEntry cut_prism_example() {
  return {"case2-example",
          convex_hull({Point{0, 0, 0}, Point{4, 0, 0}, Point{0, 4, 0},
                       Point{0, 0, 1}, Point{1, 0, 2}, Point{0, 1, 2},
                       Point{4, 0, 2}, Point{0, 4, 2}}),
          "smooth prism over the 4-fold triangle, height 2, cut by the plane "
          "z = x+y+1; its adjoint core is the triangle "
          "{(1,1,1),(1,2,1),(2,1,1)}"};
}

LatticePolytope random_ample_on_fan(const LatticePolytope& reference,
                                    int offset_bound, std::uint64_t seed) {
  if (!reference.full_dimensional()) {
    throw Error(ErrorKind::NotFullDimensional, "fan sampling needs a full-dimensional reference");
  }
  SmoothnessReport smooth = is_smooth(reference);
  if (!smooth.smooth) {
    throw Error(ErrorKind::NotSmooth,
                "fan sampling needs a smooth reference; offending vertex " +
                    smooth.offenders[0].str());
  }
  if (offset_bound < 0) {
    throw Error(ErrorKind::ConstraintViolation, "offset bound must be >= 0");
  }

  Rng rng(seed);
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::pair<Covector, Int>> halfspaces;
    halfspaces.reserve(reference.facets().size());
    for (const Facet& f : reference.facets()) {
      halfspaces.push_back({f.normal, f.offset + Int(rng.uniform(0, offset_bound))});
    }

    // Relaxing offsets only enlarges the body, so it stays full-dimensional;
    // the fan can still break, hence the rejection loop.
    std::vector<Point> verts;
    bool integral = true;
    for (const RatVec& v : vertices_from_halfspaces(halfspaces)) {
      if (!v.is_integral()) {
        integral = false;
        break;
      }
      verts.push_back(v.to_vec());
    }
    if (!integral) continue;
    LatticePolytope candidate = convex_hull(verts);
    if (candidate.dim() != reference.ambient_dim()) continue;
    if (same_normal_fan(candidate, reference)) return candidate;
  }
  throw Error(ErrorKind::SamplingExhausted,
              "no fan-preserving sample found in " + std::to_string(kMaxAttempts) +
                  " attempts (bound " + std::to_string(offset_bound) + ")");
}

AdjointClass adjoint_class(const LatticePolytope& q) {
  if (q.ambient_dim() != 3) {
    throw Error(ErrorKind::DimensionMismatch, "adjoint classification is for 3-polytopes");
  }
  if (!q.full_dimensional()) {
    throw Error(ErrorKind::NotFullDimensional, "adjoint classification needs a full-dimensional polytope");
  }
  SmoothnessReport smooth = is_smooth(q);
  if (!smooth.smooth) {
    throw Error(ErrorKind::NotSmooth,
                "adjoint classification needs a smooth polytope; offending vertex " +
                    smooth.offenders[0].str());
  }
  switch (adjoint_core(q).dim) {
    case -1: return AdjointClass::Empty;
    case 0: return AdjointClass::Point;
    case 1: return AdjointClass::Segment;
    case 2: return AdjointClass::Polygon;
    default: return AdjointClass::Solid;
  }
}

HarnessReport run_fan_harness(const LatticePolytope& reference,
                              const std::string& source_name, int nsamples,
                              std::uint64_t seed, int offset_bound) {
  AdjointClass cls;
  try {
    cls = adjoint_class(reference);
  } catch (const Error& e) {
    throw Error(ErrorKind::HypothesisNotMet, e.what());
  }
  if (cls == AdjointClass::Solid) {
    throw Error(ErrorKind::HypothesisNotMet,
                "adjoint core is 3-dimensional (big); no theorem hypothesis applies");
  }

  HarnessReport report;
  report.source = source_name;
  report.samples = nsamples;
  report.offset_bound = offset_bound;
  report.seed = seed;

  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < nsamples; ++i) {
    std::uint64_t sample_seed = seed + static_cast<std::uint64_t>(i);
    LatticePolytope sample = random_ample_on_fan(reference, offset_bound, sample_seed);
    NormalityReport rep = check_degree2(sample);
    if (!rep.holds) {
      report.failures.push_back({i, sample_seed, rep});
      continue;
    }
    try {
      Certificate cert = certify_normality(sample);
      VerifyResult vr = verify_certificate(sample, cert);
      if (!vr) {
        throw Error(ErrorKind::Internal,
                    "sample " + std::to_string(i) + ": certificate rejected: " + vr.reason);
      }
    } catch (const CertificationFailure& cf) {
      // A strategy gap on a normal sample is acceptable; a non-normal ground
      // truth here would contradict the degree-2 check above.
      if (!cf.ground_truth().holds) {
        report.failures.push_back({i, sample_seed, cf.ground_truth()});
      }
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  out.push_back({"P1", basic_simplex(1), "basic 3-simplex conv{0, e1, e2, e3}"});
  out.push_back(fano_polytope(FanoClass::F1));
  out.push_back(fano_polytope(FanoClass::F3));
  out.push_back(fano_polytope(FanoClass::F4));
  out.push_back(fano_polytope(FanoClass::F11));
  out.push_back(cut_prism_example());
  return out;
}

namespace {

Int parse_int(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty integer");
  std::size_t pos = 0;
  long long v;
  try {
    v = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad integer '" + text + "'");
  }
  if (pos != text.size()) {
    throw Error(ErrorKind::ParseError, "bad integer '" + text + "'");
  }
  return Int(v);
}

std::optional<CatalogEntry> lookup_truncated(const std::string& id) {
  const std::string prefix = "figure1:";
  std::string params = id.substr(prefix.size());
  std::map<std::string, Int> kv;
  std::size_t start = 0;
  while (start <= params.size()) {
    std::size_t end = params.find(',', start);
    std::string item = params.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::ParseError, "expected key=value in '" + item + "'");
    }
    kv[item.substr(0, eq)] = parse_int(item.substr(eq + 1));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  for (const auto& [key, value] : kv) {
    if (key != "n" && key != "m" && key != "l1" && key != "l2" && key != "l3") {
      throw Error(ErrorKind::ParseError, "unknown parameter '" + key + "'");
    }
  }
  if (!kv.count("n") || !kv.count("m")) {
    throw Error(ErrorKind::ParseError, "figure1 ids need at least n and m");
  }
  TruncationCuts cuts;
  if (kv.count("l1")) cuts.l1 = kv["l1"];
  if (kv.count("l2")) cuts.l2 = kv["l2"];
  if (kv.count("l3")) cuts.l3 = kv["l3"];
  CatalogEntry entry;
  entry.id = id;
  entry.polytope = truncated_simplex(kv["n"], kv["m"], cuts);
  entry.provenance = "truncated dilated simplex: n*P1 cut by z <= m and the "
                     "optional cuts x <= l1, y <= l2, x+y+z >= l3";
  return entry;
}

}  // namespace

std::optional<CatalogEntry> catalog_lookup(const std::string& id) {
  for (const CatalogEntry& entry : catalog_entries()) {
    if (entry.id == id) return entry;
  }
  if (id.rfind("simplex-", 0) == 0) {
    Int l = parse_int(id.substr(8));
    return CatalogEntry{id, basic_simplex(l), "dilated basic 3-simplex l * P1"};
  }
  if (id.rfind("reeve-", 0) == 0) {
    Int q = parse_int(id.substr(6));
    return CatalogEntry{id, reeve_simplex(q),
                        "Reeve simplex conv{0, e1, e2, (1,1,q)}"};
  }
  if (id.rfind("figure1:", 0) == 0) {
    return lookup_truncated(id);
  }
  return std::nullopt;
}

}  // namespace latnorm
