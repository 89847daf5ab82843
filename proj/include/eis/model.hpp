#pragma once

// The concrete objects in the standard coordinates of C^{13,1}: the 26
// point- and line-roots, the 12-gon and its complementary A4 roots, the
// named negative-norm vectors, the square-bracket basis adapted to the
// center of the three definite blocks, and the finite symmetry groups.

#include "eis/lattice.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace eis {

inline constexpr std::size_t kAmbientDim = 14;

using AmbientVector = CycVec;  // 14 coordinates (x0; x1..x13)

// Hermitian form <x,y> = -x0 conj(y0) + sum_k x_k conj(y_k).
CycElem herm(const AmbientVector& x, const AmbientVector& y);
RealQuad herm_norm(const AmbientVector& x);  // must be real

AmbientVector vec_add(const AmbientVector& a, const AmbientVector& b);
AmbientVector vec_sub(const AmbientVector& a, const AmbientVector& b);
AmbientVector vec_scale(const CycElem& s, const AmbientVector& a);

// The 13 points and 13 lines of the projective plane of order 3, labelled
// 1..13 so that line j contains points j, j+1, j+3, j+9 (mod 13).
struct IncidencePlane {
  // is_incident(i, j): point i lies on line j (both 1-based).
  static bool is_incident(int point, int line);
  static std::array<int, 4> points_on_line(int line);
};

// Root labels: 0..12 = p_1..p_13, 13..25 = l_1..l_13.
struct RootTable {
  std::array<AmbientVector, 26> roots;
  const AmbientVector& p(int i) const { return roots[i - 1]; }       // 1-based
  const AmbientVector& l(int j) const { return roots[13 + j - 1]; }  // 1-based
};

// p_1 = (0; theta, 0, ..., 0), l_1 = (1; 1,1,0,1,0,0,0,0,0,1,0,0,0), and
// rightward cyclic shifts of the last 13 coordinates raise subscripts.
// All table invariants are checked on construction.
RootTable build_roots();

// The 12-gon s_0..s_11 and the orthogonal A4 chain s_A..s_D, as indices
// into the 26 root labels.
struct GonLabels {
  std::array<int, 12> gon;  // label indices of s_0..s_11
  std::array<int, 4> a4;    // label indices of s_A..s_D
};
GonLabels gon_labels();

enum class PointName { PInf, LInf, Tau, Rho, C, TauPrimeA, TauPrimeB, TauPrimeQ, RhoPrime };

struct SpecialPoints {
  AmbientVector p_inf, l_inf, tau, rho, c;
  AmbientVector tau_prime_a;  // projection of tau away from s_A's mirror
  AmbientVector tau_prime_b;  // same for s_B
  AmbientVector tau_prime_q;  // same for s_0 (quadrilateral case)
  AmbientVector rho_prime;    // projection of rho for s_0
};
SpecialPoints special_points(const RootTable& rt);

// v - (<v,s>/3) s; result is orthogonal to the norm-3 root s.
AmbientVector project_to_mirror(const AmbientVector& v, const AmbientVector& s);

// Orthogonal projection of v to the span of the four A4 roots.
AmbientVector project_to_a4_block(const RootTable& rt, const AmbientVector& v);

// sigma_t = (1-t) rho + t tau for 0 < t <= 1.
AmbientVector sigma_point(const RootTable& rt, const Rat& t);

// ---- square-bracket basis around c ----

// Ordered basis c, s_0; s_A..s_D; s_5,s_4,s_3,s_2; s_7,s_8,s_9,s_10.
struct CBasis {
  std::array<AmbientVector, 14> basis;
  CycMat gram;         // 14x14, block diagonal (-3) + (3) + three A4 blocks
  CycMat to_standard;  // columns are the basis vectors
  CycMat to_cbasis;    // inverse
};
CBasis cbasis(const RootTable& rt);

// Coordinates [a/theta, b/theta; v1; v2; v3] of a lattice vector.
struct CCoords {
  EisInt a, b;                       // both theta-denominated slots
  std::array<EisInt, 4> v1, v2, v3;  // E-coordinates in the three A4 blocks
};
// Splits a vector in c-basis form; fails (nullopt) if the coordinates do not
// have the shape above (theta-denominated first two slots, E-integral rest).
std::optional<CCoords> cbasis_coords(const CBasis& cb, const AmbientVector& v);
AmbientVector from_cbasis_coords(const CBasis& cb, const CCoords& c);

// ---- collineations ----

// Symmetry of the 26 root labels: a permutation of the points and lines,
// possibly composed with the point/line duality (swap = true).  When swap is
// set, point i maps to line point_img[i] and line j to point line_img[j]
// (whose root picks up a minus sign in the matrix lift).
struct Collineation {
  std::array<int, 13> point_img;  // 0-based images
  std::array<int, 13> line_img;
  bool swap = false;

  Collineation compose(const Collineation& then) const;
  bool operator==(const Collineation& o) const = default;
  bool operator<(const Collineation& o) const;
};

// The full incidence-preserving group: PGL_3(F_3) (order 5616) extended by
// the duality, order 11232.
class CollineationGroup {
public:
  explicit CollineationGroup(const RootTable& rt);

  const std::vector<Collineation>& elements() const { return elements_; }

  // Exact matrix lift: sends p_i to the root-image prescribed by g (line
  // images of points are negated when g.swap).  Throws if no form-compatible
  // lift exists (which would falsify the construction).
  CycMat lift(const Collineation& g) const;

  // Setwise stabilizer of the 12-gon mirrors; order 24, dihedral.
  std::vector<Collineation> gon_stabilizer() const;

private:
  const RootTable* rt_;
  std::vector<Collineation> elements_;
  CycMat root_basis_inv_;            // inverse of 14 independent roots matrix
  std::array<int, 14> basis_labels_  // labels of the independent roots
      {};
};

// Image of root label r (0..25) under g, as (label, sign).
std::pair<int, int> apply_to_label(const Collineation& g, int label);

}  // namespace eis
