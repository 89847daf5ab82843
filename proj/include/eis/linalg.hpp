#pragma once

// Dense exact linear algebra: matrices over the field Q(i, sqrt3) and
// integer matrix routines (Hermite normal form, kernels, determinants)
// used for lattice membership and duality computations.

#include "eis/exactnum.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace eis {

using CycVec = std::vector<CycElem>;
using CycMat = std::vector<CycVec>;  // row-major

CycMat cyc_identity(std::size_t n);
CycMat cyc_mul(const CycMat& A, const CycMat& B);
CycVec cyc_mul_vec(const CycMat& A, const CycVec& v);
CycMat cyc_conj_transpose(const CycMat& A);
bool cyc_equal(const CycMat& A, const CycMat& B);
CycMat cyc_scale(const CycElem& s, const CycMat& A);

// Row-reduces a copy of A; returns the rank.  If kernel != nullptr, stores a
// basis of the right kernel {x : A x = 0}.
std::size_t cyc_rank(const CycMat& A, std::vector<CycVec>* kernel = nullptr);

// Solves A x = b; nullopt if inconsistent.  A need not be square.
std::optional<CycVec> cyc_solve(const CycMat& A, const CycVec& b);

// Inverse of a square nonsingular matrix; throws on singular input.
CycMat cyc_inverse(const CycMat& A);

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// Row-style Hermite normal form.  Returns the nonzero rows of the HNF of A
// (a basis of the row lattice): pivots positive, entries above a pivot
// reduced into [0, pivot).
IntMat hnf_rows(const IntMat& A);

// Like hnf_rows but also produces U with H = U * A (U unimodular rows
// restricted to the returned rows of H).
IntMat hnf_rows_transform(const IntMat& A, IntMat& U);

// Expresses v in the row lattice spanned by H (an HNF basis); nullopt if v
// is not in the lattice.  Returns coefficients c with c * H = v.  When
// residual is supplied it receives the fully reduced remainder, a canonical
// coset representative that is nonzero exactly on non-membership.
std::optional<IntVec> hnf_solve(const IntMat& H, const IntVec& v, IntVec* residual = nullptr);

// Basis of {x : x * A = 0} (left kernel), as rows.
IntMat int_left_kernel(const IntMat& A);

// Determinant of a square integer matrix, by exact rational elimination.
Int int_det(IntMat A);

// Solves A y = b over the rationals (A given by columns of integers, sizes
// m x n with m >= n); nullopt if inconsistent.
std::optional<std::vector<Rat>> rat_solve_columns(const IntMat& cols, const std::vector<Rat>& b);

// All x in Z^n with (x + t)^T G (x + t) == target, where G is symmetric
// positive definite over Z.  Exact rational bound propagation; bounds are
// scanned outward from the interval center so no square roots are needed.
// The callback receives x; enumeration order is deterministic.
void enumerate_quadratic(const IntMat& G, const std::vector<Rat>& t, const Rat& target,
                         const std::function<void(const std::vector<std::int64_t>&)>& sink);

}  // namespace eis
