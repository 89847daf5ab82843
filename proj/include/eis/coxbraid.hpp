#pragma once

// Presentations as relator data, the affine symmetric group in window
// notation, and the deflation computation that collapses the affine group
// over a 12-gon to the symmetric group S12.

#include "eis/isometry.hpp"

#include <cstdint>
#include <variant>

namespace eis {

// Element of the affine symmetric group on 12 strands: a bijection
// f: Z -> Z with f(i + 12) = f(i) + 12 and sum (f(i) - i) = 0, stored by its
// window (f(1), ..., f(12)).
class AffinePermutation {
public:
  static constexpr int kN = 12;

  AffinePermutation();  // identity
  explicit AffinePermutation(std::array<std::int64_t, kN> window);

  std::int64_t operator()(std::int64_t i) const;
  const std::array<std::int64_t, kN>& window() const { return w_; }

  AffinePermutation compose(const AffinePermutation& inner) const;  // this after inner
  AffinePermutation inverse() const;
  bool operator==(const AffinePermutation& o) const = default;

  bool is_translation() const;  // permutation part trivial
  // Translation vector ((f(i) - i)/12)_i, defined when is_translation().
  std::optional<std::array<std::int64_t, kN>> translation_part() const;
  // Image in S12 (0-based residues).
  std::array<int, kN> finite_part() const;

private:
  std::array<std::int64_t, kN> w_;
};

// The affine simple reflection swapping i, i+1 in every period (i = 0..11;
// i = 0 is the affine node joining strands 12 and 13).
AffinePermutation cox_generator(int i);

// ---- relators ----

// A word in the abstract generators g0..g11 (0..11) and gA..gD (12..15),
// with exponents; a relator asserts the word is the identity.
struct Relator {
  std::string name;
  ReflWord word;
};

enum class RelatorSuite {
  GonArtin,            // braid/commute relations of the 12-gon
  GonArtinD,           // + all decreasing words equal
  GonArtinI,           // + all increasing words equal
  SphereBraid,         // + both equalities and ID = 1
  ModuliSpace,         // full-circle words, ID = 1, and I^6 = D^6
  NeighborhoodRelators,// gon+A4 Artin, I/D equalities, ID = Delta^2, D^6 = I^6
  ConjugationTables,   // stabilizer words conjugate the generators as recorded
};

std::vector<Relator> relator_suite(RelatorSuite which);

// ---- assignments ----

using Perm12 = std::array<int, 12>;  // images of 0..11

struct PermAssignment {
  std::array<Perm12, 16> images;  // only the used symbols need be set
  std::array<bool, 16> defined{};
};
// g_i -> adjacent transposition (i, i+1 mod 12) in S12.
PermAssignment transposition_assignment();

struct IsometryAssignment {
  const ReflContext* ctx;
};

struct AffineAssignment {};  // g_i -> cox_generator(i); gA..gD undefined

struct RelatorOutcome {
  std::string name;
  bool pass = false;
  bool exact = true;            // for isometry targets: exact matrix identity
  std::string realized_scalar;  // set when pass holds only up to a scalar
};

std::vector<RelatorOutcome> check_relators(const std::vector<Relator>& rs,
                                           const PermAssignment& a);
std::vector<RelatorOutcome> check_relators(const std::vector<Relator>& rs,
                                           const AffineAssignment& a);
std::vector<RelatorOutcome> check_relators(const std::vector<Relator>& rs,
                                           const IsometryAssignment& a);

// Serializes a relator suite, one word per line in the word grammar
// (symbols S0..S11, SA..SD standing for g0..g11, gA..gD).
std::string relators_to_text(const std::vector<Relator>& rs);

// ---- deflation ----

struct DeflationReport {
  bool image_is_translation = false;
  std::array<std::int64_t, 12> translation{};
  std::size_t conjugate_rank = 0;       // rank of the conjugate translation span
  bool rotation_shifts_translation = false;
  bool s12_kills_deflation_word = false;
  bool s12_satisfies_relators = false;
  bool pass() const {
    return image_is_translation && conjugate_rank == 11 && rotation_shifts_translation &&
           s12_kills_deflation_word && s12_satisfies_relators;
  }
};

// The word g0 g1 ... g10 (g1 g2 ... g11)^{-1} in the affine model: a
// nonidentity translation whose S12-conjugates span a rank-11 lattice; the
// transposition assignment satisfies the Coxeter relators and kills it.
DeflationReport deflation_check();

}  // namespace eis
