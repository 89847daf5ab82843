#include "eis/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace eis {

CycMat cyc_identity(std::size_t n) {
  CycMat I(n, CycVec(n));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = CycElem(1);
  return I;
}

CycMat cyc_mul(const CycMat& A, const CycMat& B) {
  std::size_t m = A.size(), k = B.size(), n = B.empty() ? 0 : B[0].size();
  CycMat C(m, CycVec(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (A[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][l] * B[l][j];
    }
  return C;
}

CycVec cyc_mul_vec(const CycMat& A, const CycVec& v) {
  CycVec r(A.size());
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += A[i][j] * v[j];
  return r;
}

CycMat cyc_conj_transpose(const CycMat& A) {
  std::size_t m = A.size(), n = A.empty() ? 0 : A[0].size();
  CycMat T(n, CycVec(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) T[j][i] = A[i][j].conj();
  return T;
}

bool cyc_equal(const CycMat& A, const CycMat& B) {
  if (A.size() != B.size()) return false;
  for (std::size_t i = 0; i < A.size(); ++i)
    if (A[i] != B[i]) return false;
  return true;
}

CycMat cyc_scale(const CycElem& s, const CycMat& A) {
  CycMat C = A;
  for (auto& row : C)
    for (auto& x : row) x = s * x;
  return C;
}

namespace {

// Reduces M in place to row echelon form; returns pivot columns.
std::vector<std::size_t> cyc_echelon(CycMat& M) {
  std::vector<std::size_t> pivots;
  std::size_t rows = M.size(), cols = rows ? M[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && M[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[r]);
    CycElem inv = M[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) M[r][j] = inv * M[r][j];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      CycElem f = M[i][c];
      for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t cyc_rank(const CycMat& A, std::vector<CycVec>* kernel) {
  CycMat M = A;
  auto pivots = cyc_echelon(M);
  if (kernel) {
    kernel->clear();
    std::size_t cols = A.empty() ? 0 : A[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
      if (is_pivot[free]) continue;
      CycVec x(cols);
      x[free] = CycElem(1);
      for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -M[k][free];
      kernel->push_back(std::move(x));
    }
  }
  return pivots.size();
}

std::optional<CycVec> cyc_solve(const CycMat& A, const CycVec& b) {
  std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  CycMat M = A;
  for (std::size_t i = 0; i < rows; ++i) M[i].push_back(b[i]);
  auto pivots = cyc_echelon(M);
  CycVec x(cols);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == cols) return std::nullopt;  // pivot in the rhs column
    x[pivots[k]] = M[k][cols];
  }
  return x;
}

CycMat cyc_inverse(const CycMat& A) {
  std::size_t n = A.size();
  CycMat M = A;
  for (std::size_t i = 0; i < n; ++i) {
    M[i].resize(2 * n);
    M[i][n + i] = CycElem(1);
  }
  auto pivots = cyc_echelon(M);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::domain_error("cyc_inverse: singular matrix");
  CycMat R(n, CycVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) R[i][j] = M[i][n + j];
  return R;
}

namespace {

// In-place HNF with row transform; returns number of nonzero rows.
std::size_t hnf_inplace(IntMat& A, IntMat& U) {
  std::size_t m = A.size(), n = m ? A[0].size() : 0;
  U.assign(m, IntVec(m, 0));
  for (std::size_t i = 0; i < m; ++i) U[i][i] = 1;
  auto rowsub = [&](std::size_t dst, std::size_t src, const Int& q) {
    if (sgn(q) == 0) return;
    for (std::size_t j = 0; j < n; ++j) A[dst][j] -= q * A[src][j];
    for (std::size_t j = 0; j < m; ++j) U[dst][j] -= q * U[src][j];
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid over rows r..m-1 in column c until a single nonzero remains.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (sgn(A[i][c]) != 0 && (best == m || abs(A[i][c]) < abs(A[best][c]))) best = i;
      if (best == m) break;  // column is zero below r
      std::swap(A[best], A[r]);
      std::swap(U[best], U[r]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (sgn(A[i][c]) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), A[i][c].get_mpz_t(), A[r][c].get_mpz_t());
        rowsub(i, r, q);
        if (sgn(A[i][c]) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (sgn(A[r][c]) == 0) continue;
    if (sgn(A[r][c]) < 0) {
      for (auto& x : A[r]) x = -x;
      for (auto& x : U[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), A[i][c].get_mpz_t(), A[r][c].get_mpz_t());
      rowsub(i, r, q);
    }
    ++r;
  }
  return r;
}

}  // namespace

IntMat hnf_rows(const IntMat& A) {
  IntMat M = A, U;
  std::size_t r = hnf_inplace(M, U);
  M.resize(r);
  return M;
}

IntMat hnf_rows_transform(const IntMat& A, IntMat& U) {
  IntMat M = A;
  std::size_t r = hnf_inplace(M, U);
  M.resize(r);
  U.resize(r);
  return M;
}

std::optional<IntVec> hnf_solve(const IntMat& H, const IntVec& v, IntVec* residual) {
  std::size_t n = v.size();
  IntVec w = v, c(H.size(), 0);
  for (std::size_t k = 0; k < H.size(); ++k) {
    std::size_t p = 0;
    while (p < n && sgn(H[k][p]) == 0) ++p;
    if (p == n) continue;
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), w[p].get_mpz_t(), H[k][p].get_mpz_t());
    c[k] = q;
    if (sgn(q) != 0)
      for (std::size_t j = 0; j < n; ++j) w[j] -= q * H[k][j];
  }
  bool member = true;
  for (const auto& x : w) member = member && sgn(x) == 0;
  if (residual) *residual = w;
  if (!member) return std::nullopt;
  return c;
}

IntMat int_left_kernel(const IntMat& A) {
  IntMat M = A, U;
  std::size_t m = A.size();
  hnf_inplace(M, U);
  IntMat K;
  for (std::size_t i = 0; i < m; ++i) {
    bool zero = true;
    for (const auto& x : M[i])
      if (sgn(x) != 0) { zero = false; break; }
    if (zero) K.push_back(U[i]);
  }
  return K;
}

Int int_det(IntMat A) {
  std::size_t n = A.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpq_class>> M(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M[i][j] = mpq_class(A[i][j]);
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(M[p][k]) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(M[p], M[k]);
      det = -det;
    }
    det *= M[k][k];
    mpq_class inv = 1 / M[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(M[i][k]) == 0) continue;
      mpq_class f = M[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) M[i][j] -= f * M[k][j];
    }
  }
  det.canonicalize();
  if (det.get_den() != 1) throw std::logic_error("int_det: non-integer determinant");
  return det.get_num();
}

std::optional<std::vector<Rat>> rat_solve_columns(const IntMat& cols, const std::vector<Rat>& b) {
  std::size_t n = cols.size();            // unknowns
  std::size_t m = n ? cols[0].size() : b.size();  // equations
  // augmented rational system, rows = equations
  std::vector<std::vector<Rat>> M(m, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) M[i][j] = Rat(cols[j][i]);
    M[i][n] = b[i];
  }
  std::vector<Rat> x(n, Rat(0));
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(M[p], M[r]);
    Rat inv = Rat(1) / M[r][c];
    for (std::size_t j = c; j <= n; ++j) M[r][j] = M[r][j] * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      Rat f = M[i][c];
      for (std::size_t j = c; j <= n; ++j) M[i][j] = M[i][j] - f * M[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (!M[i][n].is_zero()) return std::nullopt;
  for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = M[k][n];
  return x;
}

void enumerate_quadratic(const IntMat& G, const std::vector<Rat>& t, const Rat& target,
                         const std::function<void(const std::vector<std::int64_t>&)>& sink) {
  std::size_t n = G.size();
  if (n == 0) {
    if (target.is_zero()) sink({});
    return;
  }
  if (target.sign() < 0) return;
  // LDL^T:  Q(y) = sum_k d_k (y_k + sum_{j>k} mu[k][j] y_j)^2
  std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n)), mu(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = Rat(G[i][j]);
  std::vector<Rat> d(n);
  for (std::size_t k = 0; k < n; ++k) {
    d[k] = q[k][k];
    if (d[k].sign() <= 0) throw std::domain_error("enumerate_quadratic: form not positive definite");
    for (std::size_t j = k + 1; j < n; ++j) mu[k][j] = q[k][j] / d[k];
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        q[i][j] -= q[k][i] * q[k][j] / d[k];
        q[j][i] = q[i][j];
      }
  }

  // shifts[k][i], i <= k: sum over fixed levels j > k of mu[i][j] * y_j
  std::vector<std::vector<Rat>> shifts(n);
  for (std::size_t k = 0; k < n; ++k) shifts[k].assign(k + 1, Rat(0));
  std::vector<std::int64_t> x(n, 0);
  std::vector<Rat> y(n);

  // Recursive descent from level n-1 to 0; candidate x scanned outward from
  // the interval center, each step validated by exact comparison.
  std::function<void(std::size_t, const Rat&)> rec = [&](std::size_t k, const Rat& rem) {
    const Rat c = shifts[k][k];
    const Rat center = -(t[k] + c);
    Int x0 = (center + Rat(1, 2)).floor();
    auto attempt = [&](const Int& xi) -> bool {
      // term = d_k (xi + t_k + c)^2
      Rat ybase = Rat(xi) + t[k] + c;
      Rat term = d[k] * ybase * ybase;
      if (k == 0) {
        if (term == rem) {
          if (!xi.fits_slong_p()) throw std::overflow_error("enumerate_quadratic: coordinate overflow");
          x[0] = xi.get_si();
          sink(x);
        }
        return term <= rem;
      }
      if (term > rem) return false;
      if (!xi.fits_slong_p()) throw std::overflow_error("enumerate_quadratic: coordinate overflow");
      x[k] = xi.get_si();
      y[k] = Rat(xi) + t[k];
      auto& down = shifts[k - 1];
      const auto& here = shifts[k];
      for (std::size_t i = 0; i < k; ++i) down[i] = here[i] + mu[i][k] * y[k];
      rec(k - 1, rem - term);
      return true;
    };
    for (Int xi = x0;; ++xi)
      if (!attempt(xi)) break;
    for (Int xi = x0 - 1;; --xi)
      if (!attempt(xi)) break;
  };
  rec(n - 1, target);
}

}  // namespace eis
