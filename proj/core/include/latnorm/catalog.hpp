#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latnorm/normality.hpp"
#include "latnorm/polytope.hpp"

namespace latnorm {

struct CatalogEntry {
  std::string id;
  LatticePolytope polytope;
  std::string provenance;
};

/// l * Conv{0, e1, e2, e3}.
LatticePolytope basic_simplex(const Int& l);

/// Conv{0, e1, e2, (1,1,q)}; hollow, non-smooth and non-normal for q >= 2.
LatticePolytope reeve_simplex(const Int& q);

/// The four smooth toric Fano threefolds without a fibration onto the
/// projective line, by their anticanonical polytopes.
enum class FanoClass { F1 = 1, F3 = 3, F4 = 4, F11 = 11 };

CatalogEntry fano_polytope(FanoClass cls);

/// Optional truncation parameters for truncated_simplex; absent = no cut.
struct TruncationCuts {
  std::optional<Int> l1;  // x <= l1, requires m+1 <= l1 <= n-1
  std::optional<Int> l2;  // y <= l2, requires m+1 <= l2 <= n-1
  std::optional<Int> l3;  // x+y+z >= l3, requires 1 <= l3 <= m-1
};

/// n*P1 ∩ {z <= m} with the optional corner cuts; the result must be smooth.
LatticePolytope truncated_simplex(const Int& n, const Int& m,
                                  const TruncationCuts& cuts = {});

/// Smooth prism {x,y >= 0, x+y <= 4, 0 <= z <= 2} cut by z <= x+y+1; its
/// adjoint core is the 2-dimensional triangle {(1,1,1),(1,2,1),(2,1,1)}.
CatalogEntry cut_prism_example();

/// Seeded ample polytope on the normal fan of `reference`: facet offsets are
/// relaxed by integers in [0, offset_bound] with rejection until the fan
/// matches. Same seed, same output.
LatticePolytope random_ample_on_fan(const LatticePolytope& reference,
                                    int offset_bound, std::uint64_t seed);

/// Classification of a smooth full-dimensional 3-polytope by its adjoint
/// core: Empty (no interior lattice point), Point/Segment/Polygon (core of
/// dimension 0/1/2; the adjoint bundle is effective but not big), Solid (big).
enum class AdjointClass { Empty, Point, Segment, Polygon, Solid };

const char* to_string(AdjointClass cls);

AdjointClass adjoint_class(const LatticePolytope& q);

struct HarnessFailure {
  int index = -1;
  std::uint64_t seed = 0;
  NormalityReport report;
};

struct HarnessReport {
  std::string source;
  int samples = 0;
  int offset_bound = 0;
  std::uint64_t seed = 0;
  std::vector<HarnessFailure> failures;  // empty iff every sample is normal
  std::chrono::duration<double> elapsed{0};
};

/// Samples `nsamples` ample polytopes on the fan of `reference` (which must
/// have a non-big adjoint class) and checks each for normality, both by the
/// degree-2 check and by the certifier. Deterministic given its arguments.
HarnessReport run_fan_harness(const LatticePolytope& reference,
                              const std::string& source_name, int nsamples,
                              std::uint64_t seed, int offset_bound);

/// The fixed named entries (P1, fano-*, case2-example).
std::vector<CatalogEntry> catalog_entries();

/// Resolves catalog ids, including the parametrized families
/// "simplex-<l>", "reeve-<q>" and "figure1:n=..,m=..[,l1=..][,l2=..][,l3=..]".
/// Returns nullopt for unknown ids; malformed or out-of-range parameters
/// throw the constructor's error.
std::optional<CatalogEntry> catalog_lookup(const std::string& id);

}  // namespace latnorm
