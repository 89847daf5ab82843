#pragma once

// Isometries of the Lorentzian hermitian form: triflection matrices,
// evaluation of reflection words, scalar-class comparisons, and actions on
// the distinguished plane spanned by the two fixed basepoints.

#include "eis/model.hpp"

#include <optional>
#include <string>

namespace eis {

// 14x14 matrix over Q(i, sqrt3) with conj-transpose(M) J M = J, where
// J = diag(-1, 1, ..., 1).  Checked on construction.
struct Isometry {
  CycMat m;

  explicit Isometry(CycMat mat);
  AmbientVector apply(const AmbientVector& v) const { return cyc_mul_vec(m, v); }
};

Isometry iso_identity();
Isometry iso_mul(const Isometry& a, const Isometry& b);
Isometry iso_inverse(const Isometry& a);
Isometry iso_scale(const CycElem& unit, const Isometry& a);  // |unit| must be 1
Isometry iso_pow(const Isometry& a, long e);
bool iso_equal(const Isometry& a, const Isometry& b);

// lambda with A = lambda * B, if one exists.
std::optional<CycElem> matrix_scalar_ratio(const CycMat& A, const CycMat& B);
// lambda with A = lambda * I, if A is scalar.
std::optional<CycElem> scalar_of(const Isometry& A);
// Smallest e in 1..cap with A^e scalar; 0 if the cap is exceeded.
int order_mod_scalars(const Isometry& A, int cap = 48);

// omega-reflection in the norm-3 root s: fixes s-perp, multiplies s by omega.
Isometry triflection(const AmbientVector& s);

// True iff W maps each of the 26 root generators into their E-span.
bool preserves_lattice(const EisSpan& span, const RootTable& rt, const Isometry& W);

// ---- reflection words ----

// Symbols 0..11 are the 12-gon reflections, 12..15 the A4 chain.
struct WordLetter {
  int sym;
  long exp;
};
using ReflWord = std::vector<WordLetter>;

// Tiny grammar: S0..S11, SA..SD, optional ^exponent (possibly negative),
// juxtaposition, and the macro Delta(sym, sym, ...) which expands to
// (g1..gm)(g1..g_{m-1})...(g1).  Whitespace and commas separate tokens.
ReflWord parse_word(const std::string& text);

// The sixteen generating reflections and shared fixtures for word checks.
class ReflContext {
public:
  ReflContext();

  const Isometry& gen(int sym) const { return gens_[sym]; }  // 0..15
  const Isometry& gon(int j) const { return gens_[((j % 12) + 12) % 12]; }
  const Isometry& a4(int k) const { return gens_[12 + k]; }
  const RootTable& roots() const { return rt_; }
  const SpecialPoints& special() const { return sp_; }
  const GonLabels& labels() const { return gl_; }
  const AmbientVector& gon_root(int j) const { return rt_.roots[gl_.gon[((j % 12) + 12) % 12]]; }
  const AmbientVector& a4_root(int k) const { return rt_.roots[gl_.a4[k]]; }

  Isometry eval(const ReflWord& w) const;
  Isometry eval(const std::string& text) const { return eval(parse_word(text)); }

  // Product g_first g_{first+1} ... (11 letters), subscripts mod 12.
  Isometry increasing_product(int first) const;
  Isometry decreasing_product(int first) const;
  // Delta of the A4 chain or of the eleven reflections S1..S11.
  Isometry delta_a4() const;
  Isometry delta_gon11() const;

private:
  RootTable rt_;
  SpecialPoints sp_;
  GonLabels gl_;
  std::vector<Isometry> gens_;
};

// Action on the span of (rho, tau - rho) when W preserves it and fixes the
// line of rho: W rho = alpha rho, W(tau - rho) = beta (tau - rho) mod rho.
struct PlaneAction {
  CycElem alpha, beta;
  CycElem ratio() const { return beta / alpha; }
};
std::optional<PlaneAction> plane_action(const ReflContext& ctx, const Isometry& W);

// Braid or commutation identity for two roots with pairing 0, theta or
// conj(theta); throws on any other pairing.
bool braid_relation_holds(const AmbientVector& a, const AmbientVector& b);

}  // namespace eis
