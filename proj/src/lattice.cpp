#include "eis/lattice.hpp"

#include <algorithm>
#include <set>

namespace eis {

void DirectedGraph::validate() const {
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes)
      throw std::invalid_argument("DirectedGraph: edge endpoint out of range");
    if (a == b) throw std::invalid_argument("DirectedGraph: self-loop");
    if (!seen.insert({a, b}).second || seen.count({b, a}))
      throw std::invalid_argument("DirectedGraph: repeated or bidirected edge");
  }
}

HermitianGram::HermitianGram(CycMat m) : g(std::move(m)) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].size() != g.size()) throw std::invalid_argument("HermitianGram: not square");
    if (!g[i][i].is_real()) throw std::invalid_argument("HermitianGram: diagonal not real");
    for (std::size_t j = 0; j < i; ++j)
      if (g[i][j] != g[j][i].conj())
        throw std::invalid_argument("HermitianGram: not conj-symmetric");
  }
}

HermitianGram gram_from_graph(const DirectedGraph& graph) {
  graph.validate();
  std::size_t n = graph.nodes;
  CycMat g(n, CycVec(n));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = CycElem(3);
  const CycElem th = CycElem::theta();
  for (auto [from, to] : graph.edges) {
    // <e_to, e_from> = theta when the edge runs from -> to
    g[to][from] = th;
    g[from][to] = th.conj();
  }
  return HermitianGram(std::move(g));
}

RankRadical rank_and_radical(const HermitianGram& G) {
  RankRadical rr;
  rr.rank = cyc_rank(G.g, &rr.radical);
  return rr;
}

Signature signature(const HermitianGram& G) {
  CycMat M = G.g;
  std::size_t n = M.size();
  std::vector<bool> done(n, false);
  Signature sig;
  auto clear_with_pivot = [&](std::size_t k) {
    CycElem inv = M[k][k].inverse();
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == k || M[i][k].is_zero()) continue;
      CycElem f = M[i][k] * inv;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) M[i][j] -= f * M[k][j];
    }
    for (std::size_t j = 0; j < n; ++j)
      if (!done[j] && j != k) M[k][j] = CycElem(0), M[j][k] = CycElem(0);
  };
  for (std::size_t handled = 0; handled < n;) {
    std::size_t k = n;
    for (std::size_t i = 0; i < n && k == n; ++i)
      if (!done[i] && !M[i][i].is_zero()) k = i;
    if (k < n) {
      int s = M[k][k].re.sign();
      (s > 0 ? sig.positive : sig.negative)++;
      clear_with_pivot(k);
      done[k] = true;
      ++handled;
      continue;
    }
    // All active diagonal entries vanish; look for an off-diagonal entry and
    // mix e_i <- e_i + u e_j with a unit u making the diagonal nonzero.
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i) {
      if (done[i]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j] && j != i && !M[i][j].is_zero()) { pi = i; pj = j; break; }
    }
    if (pi == n) {  // zero form on the rest
      sig.zero = n - sig.positive - sig.negative;
      return sig;
    }
    const CycElem z = M[pi][pj];
    CycElem u(1);
    for (const auto& cand : {CycElem(1), CycElem::omega(), CycElem::omega() * CycElem::omega()}) {
      if (!(cand.conj() * z).re.is_zero()) { u = cand; break; }
    }
    for (std::size_t l = 0; l < n; ++l)
      if (!done[l]) M[pi][l] += u * M[pj][l];
    for (std::size_t l = 0; l < n; ++l)
      if (!done[l]) M[l][pi] += u.conj() * M[l][pj];
  }
  sig.zero = n - sig.positive - sig.negative;
  return sig;
}

namespace {

// Z-view Gram entry helper: f * Re(omega^a * conj(omega)^b * G[i][j]).
Rat zview_entry(const CycMat& G, std::size_t i, int a, std::size_t j, int b, const Rat& f) {
  CycElem w = CycElem(1);
  for (int k = 0; k < a; ++k) w = w * CycElem::omega();
  CycElem wb = CycElem(1);
  for (int k = 0; k < b; ++k) wb = wb * CycElem::omega();
  CycElem v = w * wb.conj() * G[i][j];
  if (!v.re.b.is_zero())
    throw std::domain_error("real form: sqrt3 part in Re of a lattice pairing");
  return f * v.re.a;
}

}  // namespace

IntMat real_form(const GramLattice& K) {
  std::size_t n = K.rank();
  IntMat B(2 * n, IntVec(2 * n));
  for (std::size_t i = 0; i < n; ++i)
    for (int a = 0; a < 2; ++a)
      for (std::size_t j = 0; j < n; ++j)
        for (int b = 0; b < 2; ++b) {
          Rat e = zview_entry(K.gram.g, i, a, j, b, Rat(2, 3));
          if (e.den() != 1)
            throw std::domain_error("real form: (2/3)Re form is not integral on this lattice");
          B[2 * i + a][2 * j + b] = e.num();
        }
  return B;
}

bool theta_dual_equals_self(const GramLattice& K) {
  if (cyc_rank(K.gram.g) != K.rank())
    throw std::invalid_argument("theta_dual_equals_self: degenerate lattice");
  const CycElem th = CycElem::theta();
  for (std::size_t i = 0; i < K.rank(); ++i)
    for (std::size_t j = 0; j < K.rank(); ++j) {
      EisInt q;
      if (!cyc_to_eis(K.gram.g[i][j] / th, q)) return false;  // K not inside theta K*
    }
  // Index [theta K* : K] equals |det| of the (2/3)Re view; equality iff 1.
  Int d = int_det(real_form(K));
  return d == 1 || d == -1;
}

bool cyc_to_eis(const CycElem& x, EisInt& out) {
  // m + n omega = (2m - n)/2 + (n/2) i sqrt3
  if (!x.re.b.is_zero() || !x.im.a.is_zero()) return false;
  Rat n2 = x.im.b * Rat(2);
  Rat m2 = x.re.a + x.im.b;
  if (n2.den() != 1 || m2.den() != 1) return false;
  if (!n2.num().fits_slong_p() || !m2.num().fits_slong_p()) return false;
  out = EisInt{m2.num().get_si(), n2.num().get_si()};
  return true;
}

CycVec eis_to_cyc_vec(const EisVector& v) {
  CycVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].to_cyc();
  return r;
}

bool cyc_vec_to_eis(const CycVec& v, EisVector& out) {
  out.assign(v.size(), EisInt{});
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!cyc_to_eis(v[i], out[i])) return false;
  return true;
}

static IntVec flatten_for_span(const CycVec& v, std::size_t dim) {
  if (v.size() != dim) throw std::invalid_argument("EisSpan: dimension mismatch");
  CycVec scaled(dim);
  const CycElem th = CycElem::theta();
  for (std::size_t i = 0; i < dim; ++i) scaled[i] = th * v[i];
  EisVector e;
  if (!cyc_vec_to_eis(scaled, e))
    throw std::invalid_argument("EisSpan: vector is not integral after scaling by theta");
  IntVec flat(2 * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    flat[2 * i] = Int(static_cast<long>(e[i].m));
    flat[2 * i + 1] = Int(static_cast<long>(e[i].n));
  }
  return flat;
}

EisSpan::EisSpan(const std::vector<CycVec>& generators) {
  if (generators.empty()) throw std::invalid_argument("EisSpan: no generators");
  dim_ = generators[0].size();
  ngen_ = generators.size();
  IntMat rows;
  rows.reserve(2 * ngen_);
  for (const auto& g : generators) {
    IntVec r = flatten_for_span(g, dim_);
    // omega * g, in (m, n) coordinates: (m + n w) w = -n + (m - n) w
    IntVec rw(2 * dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      rw[2 * i] = -r[2 * i + 1];
      rw[2 * i + 1] = r[2 * i] - r[2 * i + 1];
    }
    rows.push_back(std::move(r));
    rows.push_back(std::move(rw));
  }
  hnf_ = hnf_rows_transform(rows, u_);
}

std::optional<std::vector<EisInt>> EisSpan::membership(const CycVec& v, IntVec* residual) const {
  IntVec target = flatten_for_span(v, dim_);
  auto c = hnf_solve(hnf_, target, residual);
  if (!c) return std::nullopt;
  // Coefficients relative to the original (gen, omega*gen) rows.
  IntVec orig(2 * ngen_, 0);
  for (std::size_t k = 0; k < c->size(); ++k) {
    if (sgn((*c)[k]) == 0) continue;
    for (std::size_t j = 0; j < 2 * ngen_; ++j) orig[j] += (*c)[k] * u_[k][j];
  }
  std::vector<EisInt> out(ngen_);
  for (std::size_t i = 0; i < ngen_; ++i) {
    if (!orig[2 * i].fits_slong_p() || !orig[2 * i + 1].fits_slong_p())
      throw std::overflow_error("EisSpan: coefficient overflow");
    out[i] = EisInt{orig[2 * i].get_si(), orig[2 * i + 1].get_si()};
  }
  return out;
}

namespace {

// Integer Z-view of 2*Re<.,.> scaled to clear denominators; returns the
// extra scale factor applied on top of 2*Re.
Int zgram_scaled(const CycMat& G, IntMat& out) {
  std::size_t n = G.size();
  std::vector<std::vector<Rat>> R(2 * n, std::vector<Rat>(2 * n));
  Int lcm = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (int a = 0; a < 2; ++a)
      for (std::size_t j = 0; j < n; ++j)
        for (int b = 0; b < 2; ++b) {
          Rat e = zview_entry(G, i, a, j, b, Rat(2));
          R[2 * i + a][2 * j + b] = e;
          Int d = e.den();
          mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        }
  out.assign(2 * n, IntVec(2 * n));
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) {
      Rat s = R[i][j] * Rat(lcm);
      out[i][j] = s.num();
    }
  return lcm;
}

}  // namespace

std::vector<EisVector> enumerate_by_norm(const GramLattice& K, const Rat& target_norm) {
  if (target_norm.sign() < 0)
    throw std::invalid_argument("enumerate_by_norm: negative target norm");
  Signature sig = signature(K.gram);
  if (sig.negative || sig.zero)
    throw std::invalid_argument("enumerate_by_norm: lattice is not positive definite");
  IntMat G;
  Int scale = zgram_scaled(K.gram.g, G);
  Rat target = Rat(scale) * Rat(2) * target_norm;
  std::vector<Rat> t(2 * K.rank(), Rat(0));
  std::vector<EisVector> found;
  enumerate_quadratic(G, t, target, [&](const std::vector<std::int64_t>& x) {
    EisVector v(K.rank());
    for (std::size_t i = 0; i < K.rank(); ++i) v[i] = EisInt{x[2 * i], x[2 * i + 1]};
    found.push_back(std::move(v));
  });
  std::sort(found.begin(), found.end(), eis_vector_less);
  return found;
}

void enumerate_coset_by_norm(const GramLattice& K, const std::vector<Rat>& offset,
                             const Rat& target_norm,
                             const std::function<void(const std::vector<std::int64_t>&)>& sink) {
  if (offset.size() != 2 * K.rank())
    throw std::invalid_argument("enumerate_coset_by_norm: offset size mismatch");
  IntMat G;
  Int scale = zgram_scaled(K.gram.g, G);
  Rat target = Rat(scale) * Rat(2) * target_norm;
  enumerate_quadratic(G, offset, target, sink);
}

bool eis_vector_less(const EisVector& a, const EisVector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].m != b[i].m) return a[i].m < b[i].m;
    if (a[i].n != b[i].n) return a[i].n < b[i].n;
  }
  return a.size() < b.size();
}

}  // namespace eis
