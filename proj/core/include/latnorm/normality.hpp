#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latnorm/error.hpp"
#include "latnorm/polytope.hpp"

namespace latnorm {

/// Result of a semigroup-generation check. For check_degree2 the gaps are the
/// points of (2P)∩M that are not a sum of two points of P∩M and
/// checked_degree is 2. For check_idp, checked_degree is kmax on success and
/// the dilation degree holding the first gap on failure.
struct NormalityReport {
  bool holds = false;
  std::vector<Point> gaps;  // lexicographically sorted
  int checked_degree = 0;
};

/// Exact comparison of (P∩M) + (P∩M) against (2P)∩M.
NormalityReport check_degree2(const LatticePolytope& p);

/// Stepwise (P∩M) + (kP∩M) = ((k+1)P)∩M for 1 <= k < kmax.
NormalityReport check_idp(const LatticePolytope& p, int kmax);

enum class CertKind { BruteForceLeaf, CayleyLeaf, SlabNode, SplitNode, UnionNode };

const char* to_string(CertKind kind);

/// Tree certifying normality. Every node carries the sub-polytope it covers,
/// so a certificate is re-checkable with no knowledge of how it was built:
/// leaves by re-running their condition, inner nodes by re-checking the cover
/// identities on lattice points and their degree-2 doublings.
struct Certificate {
  CertKind kind = CertKind::BruteForceLeaf;
  LatticePolytope region;

  // BruteForceLeaf
  NormalityReport report;

  // CayleyLeaf: region = Conv{(F, bottom), (G, top)} with top - bottom = 1.
  Covector direction;
  Int bottom_level = 0;
  Int top_level = 0;

  // SlabNode: children are the slabs at consecutive integer levels of
  // `direction` in [level_lo, level_hi].
  Int level_lo = 0;
  Int level_hi = 0;

  // SplitNode: children are region ∩ {<split_normal, x> <= split_offset} and
  // region ∩ {>=}, in that order.
  Covector split_normal;
  Int split_offset = 0;

  std::vector<Certificate> children;

  static Certificate brute_force(LatticePolytope region, NormalityReport rep);
  static Certificate cayley(LatticePolytope region, Covector direction,
                            Int bottom, Int top);
  static Certificate slab(LatticePolytope region, Covector direction, Int lo,
                          Int hi, std::vector<Certificate> children);
  static Certificate split(LatticePolytope region, Covector normal, Int offset,
                           Certificate lower, Certificate upper);
  static Certificate union_node(LatticePolytope region,
                                std::vector<Certificate> children);
};

struct CertifyConfig {
  // Largest |(2P)∩M| still brute-forced directly.
  std::int64_t brute_threshold = 20000;
  // Max-norm bound of the fibration-direction search.
  int fibration_bound = 3;
  // Recursion depth of the slab split fallback.
  int max_split_depth = 2;
};

/// Thrown when no certification strategy succeeds; carries the brute-force
/// ground truth so callers can tell a strategy gap from a non-normal input.
class CertificationFailure : public Error {
 public:
  CertificationFailure(const std::string& message, NormalityReport truth);
  const NormalityReport& ground_truth() const { return truth_; }

 private:
  NormalityReport truth_;
};

/// Certifies Conv{(bottom, h), (top, h+1)} by the ample/nef pairing: one
/// slice must be a full-dimensional smooth polygon in its plane lattice and
/// the other nef on it (either orientation).
Certificate cayley_certify(const RationalPolygon& bottom,
                           const RationalPolygon& top);

/// Slices p at every integer level of m0, certifies each slab (Cayley first,
/// then splits along translates of p's facet normals, then brute force) and
/// composes a SlabNode whose children cover p's lattice points exactly.
Certificate slab_decompose_certify(const LatticePolytope& p, const Covector& m0,
                                   const CertifyConfig& config = {});

/// Closed halves (lower = {<= offset}, upper = {>= offset}) of a slab cut by
/// a hyperplane; both halves must have integral vertices.
std::pair<LatticePolytope, LatticePolytope> split_slab(
    const LatticePolytope& slab, const Covector& normal, const Int& offset);

/// Strategy cascade: brute force when small, direct Cayley when the lattice
/// width is 1 in a parallel-facet direction, then slab decomposition along
/// parallel-facet and fibration directions.
Certificate certify_normality(const LatticePolytope& p,
                              const CertifyConfig& config = {});

struct VerifyResult {
  bool ok = false;
  std::string reason;  // first failure when !ok
  explicit operator bool() const { return ok; }
};

/// Re-validates every leaf condition and every cover identity from scratch.
VerifyResult verify_certificate(const LatticePolytope& p, const Certificate& cert);

}  // namespace latnorm
