#pragma once

// Eisenstein lattices: construction from directed graphs, rank/radical and
// signature of hermitian Gram matrices, real forms and theta-duality,
// membership via Hermite normal form, and exhaustive short-vector
// enumeration in definite lattices.

#include "eis/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eis {

struct DirectedGraph {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;  // (from, to), 0-based

  // Throws std::invalid_argument on self-loops, repeated or bidirected pairs,
  // or out-of-range endpoints.
  void validate() const;
};

// Hermitian matrix over Q(i, sqrt3); G = conj-transpose(G), real diagonal.
struct HermitianGram {
  CycMat g;

  explicit HermitianGram(CycMat m);
  std::size_t size() const { return g.size(); }
  const CycElem& at(std::size_t i, std::size_t j) const { return g[i][j]; }
};

// Gram entry <e_a, e_b>: 3 on the diagonal, theta when there is an edge
// b -> a, conj(theta) when a -> b, 0 otherwise.
HermitianGram gram_from_graph(const DirectedGraph& g);

struct RankRadical {
  std::size_t rank = 0;
  std::vector<CycVec> radical;  // basis of the kernel
};
RankRadical rank_and_radical(const HermitianGram& G);

struct Signature {
  std::size_t positive = 0, negative = 0, zero = 0;
};
Signature signature(const HermitianGram& G);

// An Eisenstein lattice presented by the Gram matrix of a generating set.
struct GramLattice {
  HermitianGram gram;

  explicit GramLattice(HermitianGram g) : gram(std::move(g)) {}
  std::size_t rank() const { return gram.size(); }
};

// 2n x 2n integral view of a rank-n Eisenstein lattice over the Z-basis
// {e_k, omega e_k}, under the bilinear form (2/3) Re<x,y>.
// Throws if that form is not integral on the given lattice.
IntMat real_form(const GramLattice& K);

// True iff theta * K-dual = K.  K must be nondegenerate (throws otherwise).
// Checked as: all Gram entries divisible by theta (K inside theta K*), and
// |det real_form(K)| = 1 (the index [theta K* : K] equals that determinant).
bool theta_dual_equals_self(const GramLattice& K);

// ---- membership via HNF ----

using EisVector = std::vector<EisInt>;

// Converts x to an Eisenstein integer if it is one.
bool cyc_to_eis(const CycElem& x, EisInt& out);

CycVec eis_to_cyc_vec(const EisVector& v);
// Componentwise conversion; false if any entry is not in E.
bool cyc_vec_to_eis(const CycVec& v, EisVector& out);

// E-span of a fixed list of generator vectors (ambient coordinates in
// Q(i, sqrt3)^dim).  Generators must become E-integral after scaling by
// theta.  Membership queries accept vectors with theta-denominated entries.
class EisSpan {
public:
  explicit EisSpan(const std::vector<CycVec>& generators);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t zrank() const { return hnf_.size(); }

  // E-coefficients of v in the generators, or nullopt; on request the
  // residual certificate of non-membership (the reduced remainder against
  // the HNF basis, nonzero exactly when v is outside the span) is returned.
  std::optional<std::vector<EisInt>> membership(const CycVec& v,
                                                IntVec* residual = nullptr) const;
  bool contains(const CycVec& v) const { return membership(v).has_value(); }

private:
  std::size_t dim_, ngen_;
  IntMat hnf_;  // HNF basis of the Z-lattice spanned by theta * generators
  IntMat u_;    // transform: hnf_ = u_ * (rows of theta-scaled gens and omega gens)
};

// ---- short vector enumeration ----

// All vectors of the definite lattice K with hermitian norm exactly
// target_norm, as E-coordinate tuples in the generator basis, in the
// canonical total order (lexicographic on the (m, n) coordinate pairs).
// K must be positive definite and target_norm >= 0 (throws otherwise).
std::vector<EisVector> enumerate_by_norm(const GramLattice& K, const Rat& target_norm);

// Same, but enumerates the coset (offset + K) where the offset is given by
// rational E-basis coordinates (re/im parts interleaved as in the Z-view:
// offset = sum_k (t[2k] + t[2k+1] * omega) e_k).  Vectors are reported as
// rational coordinate pairs x with x = t + (integer vector).
void enumerate_coset_by_norm(const GramLattice& K, const std::vector<Rat>& offset,
                             const Rat& target_norm,
                             const std::function<void(const std::vector<std::int64_t>&)>& sink);

// Canonical order helper shared by enumeration consumers.
bool eis_vector_less(const EisVector& a, const EisVector& b);

}  // namespace eis
