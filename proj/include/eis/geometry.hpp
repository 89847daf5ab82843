#pragma once

// Exact complex-hyperbolic predicates, critical batches around the two
// enumeration centers, polygon-mirror intersection classification, and the
// verification drivers built on them.

#include "eis/isometry.hpp"

#include <cstdint>
#include <functional>
#include <map>

namespace eis {

// ---- squared distances ----

enum class SqKind { CoshSq, SinhSq };
struct SqDistance {
  SqKind kind;
  RealQuad value;
};

// cosh^2 of the distance between two negative-norm points:
// |<v,w>|^2 / (v^2 w^2).  Scalar-class invariant.
SqDistance cosh_sq_dist(const AmbientVector& v, const AmbientVector& w);

// sinh^2 of the distance from a negative-norm point to the mirror of a
// norm-3 root: -|<v,s>|^2 / (3 v^2).
SqDistance sinh_sq_dist_to_mirror(const AmbientVector& v, const AmbientVector& s);

// ---- fast integral layer ----

// Root in standard coordinates: 14 Eisenstein-integer entries.
struct RootVec {
  std::array<std::int32_t, 28> mn;  // (m, n) per coordinate

  bool operator==(const RootVec& o) const = default;
  bool operator<(const RootVec& o) const { return mn < o.mn; }
};
RootVec root_from_ambient(const AmbientVector& v);
AmbientVector root_to_ambient(const RootVec& s);
// Lexicographically least among the six unit multiples: the mirror-class key.
RootVec canonical_root_rep(const RootVec& s);
// <s, s> under the ambient form (exact, integer arithmetic).
std::int64_t rootvec_norm(const RootVec& s);
// <a, b> as an Eisenstein integer, which must be theta-divisible for lattice
// vectors; returned unscaled (m, n) pair of the E-value.
EisInt rootvec_pairing(const RootVec& a, const RootVec& b);

// Element a + b sqrt3 + c i + d i sqrt3 with 64-bit integer coefficients.
struct Cyc4 {
  std::int64_t a = 0, b = 0, c = 0, d = 0;
  bool is_zero() const { return !a && !b && !c && !d; }
};

// Ambient vector scaled to integral Cyc4 coordinates (positive scale).
struct ScaledVec {
  std::array<Cyc4, 14> x;
};
ScaledVec scale_ambient(const AmbientVector& v);

// 2 * scale * <v, s>; exact, overflow-checked.
Cyc4 pairing(const ScaledVec& v, const RootVec& s);

// |z|^2 componentwise as A + B sqrt3 in 128-bit integers; only comparisons
// are exposed.
struct Norm2 {
  __int128 a = 0, b = 0;  // a + b sqrt3 >= 0 always
};
Norm2 cyc4_norm(const Cyc4& z);
int norm2_cmp(const Norm2& x, const Norm2& y);
bool norm2_is_zero(const Norm2& x);

// ---- batches around a center ----

struct BatchSpec {
  std::string center;            // "c" or "p_inf"
  int batch = 0;                 // 0..3
  RealQuad sinh_sq_radius;       // |pairing|^2 / 9 at the batch
};

struct RootList {
  BatchSpec spec;
  std::vector<RootVec> classes;  // canonically ordered scalar-class reps
};

using RootSink = std::function<void(const RootVec& class_rep, int batch, int row)>;

// Shared fixtures for the enumerations and drivers.
struct GeoContext {
  RootTable rt;
  SpecialPoints sp;
  GonLabels gl;
  CBasis cb;
  std::vector<EisVector> l4_norm3, l4_norm6;  // coordinates in an A4-block basis

  GeoContext();
};

// Direct constructor of the batch table around c: builds the roots
// [a/theta, b/theta; v1; v2; v3] row by row and converts them to standard
// coordinates.  Emits one representative per scalar class.  Aborts (throws)
// if any constructed vector fails the norm or congruence constraint.
struct TableRow {
  int batch;
  EisInt a;
  std::vector<EisInt> b_values;
  std::array<long, 3> shape;  // block norms, descending
  long expected_mirrors;      // the recorded count for this row
};
const std::vector<TableRow>& center_table_rows();
// Returns per-row class counts (row order as center_table_rows).
std::vector<long> enumerate_center_table(const GeoContext& g, int max_batch,
                                         const RootSink& sink);

// Generic bounded enumerator around any primitive norm -3 lattice point:
// decomposes candidates into a component along the center and a vector of
// the definite complement, enumerating finitely many pairing values and one
// definite coset per value.  Emits one representative per scalar class of
// roots s with |<s, center>|^2 <= max_pairing.
void enumerate_roots_bounded(const GeoContext& g, const AmbientVector& center,
                             const Rat& max_pairing, const RootSink& sink);

// Convenience: collect either enumeration into canonical per-batch lists.
std::vector<RootList> collect_batches(const GeoContext& g, const std::string& center_id,
                                      int max_batch, bool generic);

// ---- polygon classification ----

struct Polygon {
  std::string name;
  std::vector<AmbientVector> verts;  // 3 or 4, in cycle order
  std::vector<std::string> vert_names;
};
// Checks negative norms and real negative pairwise inner products.
Polygon make_polygon(std::string name, std::vector<AmbientVector> verts,
                     std::vector<std::string> vert_names);

enum class HitKind { Miss, VertexOnly, EdgeSegment, InteriorCrossing, WholeSpan };
struct MirrorHit {
  HitKind kind = HitKind::Miss;
  std::vector<int> zero_verts;
};

// Exact classification of mirror against polygon via the convex position of
// the pairings <v_k, s> around the origin.
MirrorHit classify_mirror(const Polygon& P, const AmbientVector& s);

// Fast path over the integral layer; agrees with classify_mirror.
struct ScaledPolygon {
  std::vector<ScaledVec> verts;
  bool quad = false;
};
ScaledPolygon scale_polygon(const Polygon& P);
MirrorHit classify_mirror_fast(const ScaledPolygon& P, const RootVec& s);

// ---- verification drivers ----

struct CheckLine {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct DriverReport {
  std::string name;
  std::vector<CheckLine> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// The twelve recorded cosh^2 covering distances and the radicand bound.
DriverReport verify_covering_distances(const GeoContext& g);

// Classification of the three polygons against every batch <= 3 mirror
// around c and around the point where all point-mirrors meet.
DriverReport verify_polygon_classification(const GeoContext& g,
                                           const std::vector<RootList>& around_c,
                                           const std::vector<RootList>& around_p_inf,
                                           int threads = 1);

// Nearest mirrors to the projection point rho: the sinh-addition inequality
// and the minimum positive mirror distance over the enumerated batches.
DriverReport verify_nearest_to_rho(const GeoContext& g, const std::vector<RootList>& around_c,
                                   int threads = 1);

// Nearest mirrors to the symmetry point tau over batches <= 2 around the
// point-mirror intersection, with the exact sufficiency inequality.
DriverReport verify_nearest_to_tau(const GeoContext& g, const std::vector<RootList>& around_p_inf);

// The two computer checks for the subball generation criteria at
// sigma_t = (1-t) rho + t tau over the 40 block-mirror classes.
struct SigmaSearchResult {
  DriverReport report;
  Rat t_found;
  std::vector<std::string> tried;
};
SigmaSearchResult verify_sigma_criteria(const GeoContext& g, const Rat& t_start);

// True iff the mirror of s meets the 9-ball of the gon sublattice: the
// hermitian form restricted to s-perp inside that subspace has a negative
// direction.
bool mirror_meets_subball(const GeoContext& g, const AmbientVector& s);

// Sampled consistency check: every enumerated mirror that meets the subball
// is either orthogonal to the A4 block or contained in its span.
DriverReport verify_subball_mirrors(const GeoContext& g, const std::vector<RootList>& around_c,
                                    std::uint64_t seed, std::size_t sample_size);

}  // namespace eis
