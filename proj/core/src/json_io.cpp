#include "latnorm/json_io.hpp"

#include "latnorm/error.hpp"

namespace latnorm {

using nlohmann::json;

namespace {

json int_to_json(const Int& v) { return json(to_int64(v)); }

Int int_from_json(const json& j, const char* what) {
  if (j.is_number_unsigned()) {
    if (j.get<std::uint64_t>() >
        static_cast<std::uint64_t>(std::numeric_limits<long long>::max())) {
      throw Error(ErrorKind::ParseError, std::string(what) + ": integer too large");
    }
    return Int(j.get<long long>());
  }
  if (!j.is_number_integer()) {
    throw Error(ErrorKind::ParseError,
                std::string(what) + ": expected an integer, got " + j.dump());
  }
  return Int(j.get<long long>());
}

json vec_to_json(const Vec& v) {
  json arr = json::array();
  for (int i = 0; i < v.dim(); ++i) arr.push_back(int_to_json(v[i]));
  return arr;
}

Vec vec_from_json(const json& j, const char* what, int expected_dim = -1) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": expected a coordinate array");
  }
  if (expected_dim >= 0 && static_cast<int>(j.size()) != expected_dim) {
    throw Error(ErrorKind::ParseError,
                std::string(what) + ": ragged coordinate array (" +
                    std::to_string(j.size()) + " vs " + std::to_string(expected_dim) + ")");
  }
  std::vector<Int> coords;
  coords.reserve(j.size());
  for (const json& entry : j) coords.push_back(int_from_json(entry, what));
  return Vec(std::move(coords));
}

json points_to_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const Point& p : pts) arr.push_back(vec_to_json(p));
  return arr;
}

}  // namespace

json polytope_to_json(const LatticePolytope& p, const std::string& name) {
  json j;
  if (!name.empty()) j["name"] = name;
  j["vertices"] = points_to_json(p.vertices());
  return j;
}

LatticePolytope polytope_from_json(const json& j, std::string* name_out) {
  if (!j.is_object()) {
    throw Error(ErrorKind::ParseError, "polytope JSON must be an object");
  }
  if (name_out) name_out->clear();
  if (j.contains("name")) {
    if (!j["name"].is_string()) {
      throw Error(ErrorKind::ParseError, "polytope name must be a string");
    }
    if (name_out) *name_out = j["name"].get<std::string>();
  }
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty()) {
    throw Error(ErrorKind::ParseError, "polytope JSON needs a nonempty 'vertices' array");
  }
  const json& verts = j["vertices"];
  int d = -1;
  std::vector<Point> pts;
  pts.reserve(verts.size());
  for (const json& entry : verts) {
    Vec v = vec_from_json(entry, "vertices", d);
    if (d < 0) {
      d = v.dim();
      if (d != 2 && d != 3) {
        throw Error(ErrorKind::ParseError,
                    "vertex dimension must be 2 or 3, got " + std::to_string(d));
      }
    }
    pts.push_back(std::move(v));
  }
  return convex_hull(pts);
}

json report_to_json(const NormalityReport& rep) {
  json j;
  j["holds"] = rep.holds;
  j["checked_degree"] = rep.checked_degree;
  j["gaps"] = points_to_json(rep.gaps);
  return j;
}

NormalityReport report_from_json(const json& j) {
  if (!j.is_object() || !j.contains("holds") || !j.contains("checked_degree") ||
      !j.contains("gaps") || !j["gaps"].is_array()) {
    throw Error(ErrorKind::ParseError, "malformed normality report");
  }
  NormalityReport rep;
  rep.holds = j["holds"].get<bool>();
  rep.checked_degree = j["checked_degree"].get<int>();
  for (const json& g : j["gaps"]) rep.gaps.push_back(vec_from_json(g, "gaps"));
  return rep;
}

json certificate_to_json(const Certificate& cert) {
  json j;
  j["kind"] = to_string(cert.kind);
  j["vertices"] = points_to_json(cert.region.vertices());
  switch (cert.kind) {
    case CertKind::BruteForceLeaf:
      j["report"] = report_to_json(cert.report);
      break;
    case CertKind::CayleyLeaf:
      j["direction"] = vec_to_json(cert.direction);
      j["bottom_level"] = int_to_json(cert.bottom_level);
      j["top_level"] = int_to_json(cert.top_level);
      break;
    case CertKind::SlabNode:
      j["direction"] = vec_to_json(cert.direction);
      j["level_lo"] = int_to_json(cert.level_lo);
      j["level_hi"] = int_to_json(cert.level_hi);
      break;
    case CertKind::SplitNode:
      j["normal"] = vec_to_json(cert.split_normal);
      j["offset"] = int_to_json(cert.split_offset);
      break;
    case CertKind::UnionNode:
      break;
  }
  if (!cert.children.empty()) {
    json children = json::array();
    for (const Certificate& child : cert.children) {
      children.push_back(certificate_to_json(child));
    }
    j["children"] = std::move(children);
  }
  return j;
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("vertices")) {
    throw Error(ErrorKind::ParseError, "malformed certificate node");
  }
  std::string kind = j["kind"].get<std::string>();
  std::vector<Point> pts;
  for (const json& v : j["vertices"]) pts.push_back(vec_from_json(v, "certificate vertices"));
  LatticePolytope region = convex_hull(pts);

  std::vector<Certificate> children;
  if (j.contains("children")) {
    for (const json& c : j["children"]) children.push_back(certificate_from_json(c));
  }

  if (kind == "brute_force") {
    if (!children.empty()) {
      throw Error(ErrorKind::ParseError, "brute_force node cannot have children");
    }
    return Certificate::brute_force(std::move(region),
                                    report_from_json(j.at("report")));
  }
  if (kind == "cayley") {
    if (!children.empty()) {
      throw Error(ErrorKind::ParseError, "cayley node cannot have children");
    }
    return Certificate::cayley(std::move(region),
                               vec_from_json(j.at("direction"), "direction"),
                               int_from_json(j.at("bottom_level"), "bottom_level"),
                               int_from_json(j.at("top_level"), "top_level"));
  }
  if (kind == "slab") {
    return Certificate::slab(std::move(region),
                             vec_from_json(j.at("direction"), "direction"),
                             int_from_json(j.at("level_lo"), "level_lo"),
                             int_from_json(j.at("level_hi"), "level_hi"),
                             std::move(children));
  }
  if (kind == "split") {
    if (children.size() != 2) {
      throw Error(ErrorKind::ParseError, "split node needs exactly two children");
    }
    Certificate upper = std::move(children[1]);
    Certificate lower = std::move(children[0]);
    return Certificate::split(std::move(region),
                              vec_from_json(j.at("normal"), "normal"),
                              int_from_json(j.at("offset"), "offset"),
                              std::move(lower), std::move(upper));
  }
  if (kind == "union") {
    return Certificate::union_node(std::move(region), std::move(children));
  }
  throw Error(ErrorKind::ParseError, "unknown certificate kind '" + kind + "'");
}

json fan_to_json(const FanDescriptor& fan) {
  json cones = json::array();
  for (const FanCone& cone : fan.cones) {
    json c;
    c["vertex"] = vec_to_json(cone.vertex);
    json normals = json::array();
    for (const Covector& n : cone.normals) normals.push_back(vec_to_json(n));
    c["normals"] = std::move(normals);
    cones.push_back(std::move(c));
  }
  json j;
  j["cones"] = std::move(cones);
  return j;
}

json harness_to_json(const HarnessReport& rep) {
  json j;
  j["source"] = rep.source;
  j["samples"] = rep.samples;
  j["seed"] = rep.seed;
  j["offset_bound"] = rep.offset_bound;
  j["failure_count"] = rep.failures.size();
  json failures = json::array();
  for (const HarnessFailure& f : rep.failures) {
    json entry;
    entry["index"] = f.index;
    entry["seed"] = f.seed;
    entry["report"] = report_to_json(f.report);
    failures.push_back(std::move(entry));
  }
  j["failures"] = std::move(failures);
  return j;
}

}  // namespace latnorm
