#include "eis/geometry.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace eis {

// ---- squared distances ----

SqDistance cosh_sq_dist(const AmbientVector& v, const AmbientVector& w) {
  RealQuad nv = herm_norm(v), nw = herm_norm(w);
  if (nv.sign() >= 0 || nw.sign() >= 0)
    throw std::invalid_argument("cosh_sq_dist: points must have negative norm");
  RealQuad num = herm(v, w).norm();
  return {SqKind::CoshSq, num / (nv * nw)};
}

SqDistance sinh_sq_dist_to_mirror(const AmbientVector& v, const AmbientVector& s) {
  RealQuad nv = herm_norm(v);
  if (nv.sign() >= 0) throw std::invalid_argument("sinh_sq_dist_to_mirror: point norm not negative");
  if (herm_norm(s) != RealQuad(Rat(3)))
    throw std::invalid_argument("sinh_sq_dist_to_mirror: s must be a norm-3 root");
  RealQuad num = herm(v, s).norm();
  return {SqKind::SinhSq, -(num / (nv * RealQuad(Rat(3))))};
}

// ---- fast integral layer ----

namespace {

constexpr std::int64_t kRootBound = 1'000'000;     // |m|, |n| of any handled root
constexpr std::int64_t kScaledBound = 1'000'000'000;  // scaled vertex coefficients

std::int32_t narrow_root_coord(std::int64_t v) {
  if (v > kRootBound || v < -kRootBound) throw std::overflow_error("root coordinate out of range");
  return static_cast<std::int32_t>(v);
}

}  // namespace

RootVec root_from_ambient(const AmbientVector& v) {
  EisVector e;
  if (!cyc_vec_to_eis(v, e)) throw std::invalid_argument("root_from_ambient: not E-integral");
  RootVec r;
  for (int k = 0; k < 14; ++k) {
    r.mn[2 * k] = narrow_root_coord(e[k].m);
    r.mn[2 * k + 1] = narrow_root_coord(e[k].n);
  }
  return r;
}

AmbientVector root_to_ambient(const RootVec& s) {
  AmbientVector v(kAmbientDim);
  for (int k = 0; k < 14; ++k) v[k] = EisInt{s.mn[2 * k], s.mn[2 * k + 1]}.to_cyc();
  return v;
}

RootVec canonical_root_rep(const RootVec& s) {
  RootVec best = s;
  RootVec cur = s;
  auto mul_omega = [](RootVec& r) {
    for (int k = 0; k < 14; ++k) {
      std::int64_t m = r.mn[2 * k], n = r.mn[2 * k + 1];
      r.mn[2 * k] = narrow_root_coord(-n);
      r.mn[2 * k + 1] = narrow_root_coord(m - n);
    }
  };
  for (int u = 0; u < 3; ++u) {
    if (u) mul_omega(cur);
    RootVec neg = cur;
    for (auto& x : neg.mn) x = -x;
    if (cur < best) best = cur;
    if (neg < best) best = neg;
  }
  return best;
}

std::int64_t rootvec_norm(const RootVec& s) {
  EisInt acc{0, 0};
  for (int k = 0; k < 14; ++k) {
    EisInt x{s.mn[2 * k], s.mn[2 * k + 1]};
    EisInt term = x * x.conj();
    acc = (k == 0) ? acc - term : acc + term;
  }
  if (acc.n != 0) throw std::logic_error("rootvec_norm: norm not real");
  return acc.m;
}

EisInt rootvec_pairing(const RootVec& a, const RootVec& b) {
  EisInt acc{0, 0};
  for (int k = 0; k < 14; ++k) {
    EisInt x{a.mn[2 * k], a.mn[2 * k + 1]};
    EisInt y{b.mn[2 * k], b.mn[2 * k + 1]};
    EisInt term = x * y.conj();
    acc = (k == 0) ? acc - term : acc + term;
  }
  return acc;
}

ScaledVec scale_ambient(const AmbientVector& v) {
  Int lcm = 1;
  for (const auto& z : v)
    for (const Rat* r : {&z.re.a, &z.re.b, &z.im.a, &z.im.b}) {
      Int d = r->den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
  ScaledVec out;
  Rat scale{lcm};
  for (int k = 0; k < 14; ++k) {
    auto coeff = [&](const Rat& r) {
      Rat s = r * scale;
      if (s.den() != 1 || !s.num().fits_slong_p()) throw std::overflow_error("scale_ambient");
      std::int64_t val = s.num().get_si();
      if (val > kScaledBound || val < -kScaledBound)
        throw std::overflow_error("scale_ambient: coefficient too large");
      return val;
    };
    out.x[k] = {coeff(v[k].re.a), coeff(v[k].re.b), coeff(v[k].im.a), coeff(v[k].im.b)};
  }
  return out;
}

Cyc4 pairing(const ScaledVec& v, const RootVec& s) {
  // conj(m + n w) scaled by 2 is (2m - n) - n i sqrt3
  std::int64_t A = 0, B = 0, C = 0, D = 0;
  for (int k = 0; k < 14; ++k) {
    std::int64_t e = 2 * std::int64_t(s.mn[2 * k]) - s.mn[2 * k + 1];
    std::int64_t h = -std::int64_t(s.mn[2 * k + 1]);
    const Cyc4& z = v.x[k];
    std::int64_t sgn = (k == 0) ? -1 : 1;
    // (a + b sqrt3 + c i + d i sqrt3)(e + h i sqrt3)
    A += sgn * (z.a * e - 3 * z.d * h);
    B += sgn * (z.b * e - z.c * h);
    C += sgn * (z.c * e + 3 * z.b * h);
    D += sgn * (z.d * e + z.a * h);
  }
  return {A, B, C, D};
}

Norm2 cyc4_norm(const Cyc4& z) {
  auto sq = [](std::int64_t x, std::int64_t y) { return (__int128)x * y; };
  Norm2 n;
  n.a = sq(z.a, z.a) + 3 * sq(z.b, z.b) + sq(z.c, z.c) + 3 * sq(z.d, z.d);
  n.b = 2 * sq(z.a, z.b) + 2 * sq(z.c, z.d);
  return n;
}

namespace {

int sgn128(__int128 x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// sign of A + B sqrt3 with 128-bit components (|A|,|B| < 2^62 assumed)
int realquad_sign128(__int128 A, __int128 B) {
  int sa = sgn128(A), sb = sgn128(B);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  __int128 a2 = A * A, b23 = 3 * B * B;
  if (a2 == b23) return 0;
  return (a2 > b23) ? sa : sb;
}

}  // namespace

int norm2_cmp(const Norm2& x, const Norm2& y) { return realquad_sign128(x.a - y.a, x.b - y.b); }

bool norm2_is_zero(const Norm2& x) { return x.a == 0 && x.b == 0; }

// ---- context ----

GeoContext::GeoContext() : rt(build_roots()), sp(special_points(rt)), gl(gon_labels()), cb(cbasis(rt)) {
  CycMat block(4, CycVec(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) block[i][j] = cb.gram[2 + i][2 + j];
  GramLattice l4{HermitianGram(block)};
  l4_norm3 = enumerate_by_norm(l4, Rat(3));
  l4_norm6 = enumerate_by_norm(l4, Rat(6));
  if (l4_norm3.size() != 240 || l4_norm6.size() != 2160)
    throw std::logic_error("GeoContext: block lattice vector counts are off");
}

// ---- direct batch table around c ----

const std::vector<TableRow>& center_table_rows() {
  static const std::vector<TableRow> rows = [] {
    const EisInt one{1, 0}, w{0, 1}, w2{-1, -1}, th{1, 2};
    auto times = [](const EisInt& x, std::initializer_list<EisInt> us) {
      std::vector<EisInt> out;
      for (const auto& u : us) out.push_back(x * u);
      return out;
    };
    std::vector<EisInt> theta_units = times(th, {one, w, w2, -one, -w, -w2});
    std::vector<EisInt> omega_units = {one, w, w2};
    std::vector<EisInt> minus2_units = times(EisInt{-2, 0}, {one, w, w2});
    std::vector<EisInt> norm7;  // omega^j (3 + omega) and omega^j (3 + conj omega)
    for (const auto& u : omega_units) {
      norm7.push_back(u * EisInt{3, 1});
      norm7.push_back(u * EisInt{2, -1});
    }
    std::vector<TableRow> r;
    r.push_back({0, EisInt{0, 0}, {EisInt{0, 0}}, {3, 0, 0}, 120});
    r.push_back({0, EisInt{0, 0}, theta_units, {0, 0, 0}, 1});
    r.push_back({1, one, omega_units, {3, 0, 0}, 2160});
    r.push_back({1, one, minus2_units, {0, 0, 0}, 3});
    r.push_back({2, th, {EisInt{0, 0}}, {6, 0, 0}, 6480});
    r.push_back({2, th, {EisInt{0, 0}}, {3, 3, 0}, 172800});
    r.push_back({2, th, theta_units, {3, 0, 0}, 4320});
    r.push_back({3, EisInt{-2, 0}, omega_units, {6, 0, 0}, 6480});
    r.push_back({3, EisInt{-2, 0}, omega_units, {3, 3, 0}, 518400});
    r.push_back({3, EisInt{-2, 0}, minus2_units, {3, 0, 0}, 2160});
    r.push_back({3, EisInt{-2, 0}, norm7, {0, 0, 0}, 6});
    return r;
  }();
  return rows;
}

namespace {

// Integer coordinates (m, n per slot) of the square-bracket basis data.
struct CenterFrame {
  std::array<std::array<std::int64_t, 28>, 12> block_roots;  // 3 blocks x 4 roots
  std::array<std::int64_t, 28> c_over_theta;
  std::array<std::int64_t, 28> s0_over_theta;
};

CenterFrame center_frame(const GeoContext& g) {
  CenterFrame f{};
  auto flatten = [](const AmbientVector& v, std::array<std::int64_t, 28>& out) {
    EisVector e;
    if (!cyc_vec_to_eis(v, e)) throw std::logic_error("center_frame: non-integral vector");
    for (int k = 0; k < 14; ++k) {
      out[2 * k] = e[k].m;
      out[2 * k + 1] = e[k].n;
    }
  };
  for (int b = 0; b < 3; ++b)
    for (int k = 0; k < 4; ++k) flatten(g.cb.basis[2 + 4 * b + k], f.block_roots[4 * b + k]);
  const CycElem th = CycElem::theta();
  flatten(vec_scale(th.inverse(), g.sp.c), f.c_over_theta);
  flatten(vec_scale(th.inverse(), g.rt.roots[g.gl.gon[0]]), f.s0_over_theta);
  return f;
}

void accumulate(std::array<std::int64_t, 28>& acc, const EisInt& coeff,
                const std::array<std::int64_t, 28>& vec) {
  if (coeff.is_zero()) return;
  for (int k = 0; k < 14; ++k) {
    std::int64_t m = vec[2 * k], n = vec[2 * k + 1];
    // (a + b w)(m + n w) = am - bn + (an + bm - bn) w
    acc[2 * k] += coeff.m * m - coeff.n * n;
    acc[2 * k + 1] += coeff.m * n + coeff.n * m - coeff.n * n;
  }
}

RootVec to_rootvec(const std::array<std::int64_t, 28>& acc) {
  RootVec r;
  for (int i = 0; i < 28; ++i) r.mn[i] = narrow_root_coord(acc[i]);
  return r;
}

}  // namespace

std::vector<long> enumerate_center_table(const GeoContext& g, int max_batch,
                                         const RootSink& sink) {
  CenterFrame f = center_frame(g);
  const auto& rows = center_table_rows();
  std::vector<long> counts(rows.size(), 0);

  // block-norm assignments: which v-lists go to which of the 3 blocks
  auto placements = [](const std::array<long, 3>& shape) {
    std::set<std::array<long, 3>> perms;
    std::array<long, 3> s = shape;
    std::sort(s.begin(), s.end());
    do perms.insert(s);
    while (std::next_permutation(s.begin(), s.end()));
    return std::vector<std::array<long, 3>>(perms.begin(), perms.end());
  };

  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    const TableRow& row = rows[ri];
    if (row.batch > max_batch) continue;
    std::set<RootVec> batch0_classes;  // only used when a = 0
    bool pinned = !row.a.is_zero();
    for (const EisInt& b : row.b_values) {
      if (!eis_congruent_mod_theta(row.a, b))
        throw std::logic_error("center table: congruence constraint violated");
      std::array<std::int64_t, 28> base{};
      accumulate(base, row.a, f.c_over_theta);
      accumulate(base, b, f.s0_over_theta);
      for (const auto& place : placements(row.shape)) {
        // iterate vectors for each block with the assigned norm
        const std::vector<EisVector>* lists[3];
        for (int blk = 0; blk < 3; ++blk)
          lists[blk] = place[blk] == 0 ? nullptr
                                       : (place[blk] == 3 ? &g.l4_norm3 : &g.l4_norm6);
        auto emit = [&](const std::array<const EisVector*, 3>& choice) {
          std::array<std::int64_t, 28> acc = base;
          for (int blk = 0; blk < 3; ++blk) {
            if (!choice[blk]) continue;
            for (int k = 0; k < 4; ++k) accumulate(acc, (*choice[blk])[k], f.block_roots[4 * blk + k]);
          }
          RootVec r = to_rootvec(acc);
          if (rootvec_norm(r) != 3) throw std::logic_error("center table: constructed non-root");
          RootVec rep = canonical_root_rep(r);
          if (pinned) {
            ++counts[ri];
            sink(rep, row.batch, int(ri));
          } else if (batch0_classes.insert(rep).second) {
            ++counts[ri];
            sink(rep, row.batch, int(ri));
          }
        };
        std::array<const EisVector*, 3> choice{nullptr, nullptr, nullptr};
        std::function<void(int)> rec = [&](int blk) {
          if (blk == 3) {
            emit(choice);
            return;
          }
          if (!lists[blk]) {
            choice[blk] = nullptr;
            rec(blk + 1);
            return;
          }
          for (const auto& v : *lists[blk]) {
            choice[blk] = &v;
            rec(blk + 1);
          }
        };
        rec(0);
      }
    }
  }
  return counts;
}

// ---- generic bounded enumerator ----

namespace {

struct LatticeData {
  IntMat basis;  // 28 rows, each 28 ints: Z-basis of the lattice in flat coords
};

std::array<std::int64_t, 28> flatten_eis(const EisVector& e) {
  std::array<std::int64_t, 28> out{};
  for (int k = 0; k < 14; ++k) {
    out[2 * k] = e[k].m;
    out[2 * k + 1] = e[k].n;
  }
  return out;
}

EisInt pairing_flat(const IntVec& a, const EisVector& b) {
  EisInt acc{0, 0};
  for (int k = 0; k < 14; ++k) {
    EisInt x{a[2 * k].get_si(), a[2 * k + 1].get_si()};
    EisInt term = x * b[k].conj();
    acc = (k == 0) ? acc - term : acc + term;
  }
  return acc;
}

LatticeData l_basis(const GeoContext& g) {
  IntMat rows;
  for (const auto& root : g.rt.roots) {
    EisVector e;
    if (!cyc_vec_to_eis(root, e)) throw std::logic_error("l_basis: root not integral");
    auto flat = flatten_eis(e);
    IntVec r(28), rw(28);
    for (int i = 0; i < 28; ++i) r[i] = Int((long)flat[i]);
    for (int k = 0; k < 14; ++k) {  // omega * vector in (m, n) coordinates
      rw[2 * k] = -r[2 * k + 1];
      rw[2 * k + 1] = r[2 * k] - r[2 * k + 1];
    }
    rows.push_back(r);
    rows.push_back(rw);
  }
  LatticeData d;
  d.basis = hnf_rows(rows);
  if (d.basis.size() != 28) throw std::logic_error("l_basis: rank should be 28");
  return d;
}

// 2 Re <x, y> for flat integer vectors.
std::int64_t two_re_herm(const std::array<std::int64_t, 28>& a,
                         const std::array<std::int64_t, 28>& b) {
  std::int64_t acc = 0;
  for (int k = 0; k < 14; ++k) {
    EisInt x{a[2 * k], a[2 * k + 1]}, y{b[2 * k], b[2 * k + 1]};
    EisInt p = x * y.conj();
    std::int64_t re2 = 2 * p.m - p.n;
    acc += (k == 0) ? -re2 : re2;
  }
  return acc;
}

}  // namespace

void enumerate_roots_bounded(const GeoContext& g, const AmbientVector& center,
                             const Rat& max_pairing, const RootSink& sink) {
  if (herm_norm(center) != RealQuad(Rat(-3)))
    throw std::invalid_argument("enumerate_roots_bounded: center must have norm -3");
  EisVector center_e;
  if (!cyc_vec_to_eis(center, center_e))
    throw std::invalid_argument("enumerate_roots_bounded: center must be integral");
  if (max_pairing.sign() < 0) return;

  LatticeData L = l_basis(g);
  {
    IntVec cflat(28);
    auto cf = flatten_eis(center_e);
    for (int i = 0; i < 28; ++i) cflat[i] = Int((long)cf[i]);
    if (!hnf_solve(L.basis, cflat))
      throw std::invalid_argument("enumerate_roots_bounded: center is not a lattice point");
  }

  // pairing of each basis vector with the center
  IntMat P(28, IntVec(2));
  for (int i = 0; i < 28; ++i) {
    EisInt p = pairing_flat(L.basis[i], center_e);
    P[i][0] = p.m;
    P[i][1] = p.n;
  }

  // complement lattice: kernel of the pairing, in ambient flat coordinates
  IntMat kernel_coords = int_left_kernel(P);
  if (kernel_coords.size() != 26) throw std::logic_error("enumerate_roots_bounded: kernel rank");
  std::vector<std::array<std::int64_t, 28>> K(26);
  for (int i = 0; i < 26; ++i) {
    std::array<std::int64_t, 28> acc{};
    for (int j = 0; j < 28; ++j) {
      if (sgn(kernel_coords[i][j]) == 0) continue;
      std::int64_t cj = kernel_coords[i][j].get_si();
      for (int t = 0; t < 28; ++t) acc[t] += cj * L.basis[j][t].get_si();
    }
    K[i] = acc;
  }
  // mild size reduction sweeps keep the enumeration tree small
  {
    auto norm_of = [&](int i) { return two_re_herm(K[i], K[i]); };
    bool changed = true;
    int sweeps = 0;
    while (changed && sweeps++ < 40) {
      changed = false;
      std::sort(K.begin(), K.end(), [&](const auto& x, const auto& y) {
        return two_re_herm(x, x) < two_re_herm(y, y);
      });
      for (int i = 0; i < 26; ++i)
        for (int j = 0; j < 26; ++j) {
          if (i == j) continue;
          std::int64_t gjj = norm_of(j);
          if (gjj == 0) continue;
          std::int64_t gij = two_re_herm(K[i], K[j]);
          std::int64_t q = (2 * gij + (gij >= 0 ? gjj : -gjj)) / (2 * gjj);
          if (q != 0) {
            for (int t = 0; t < 28; ++t) K[i][t] -= q * K[j][t];
            changed = true;
          }
        }
    }
  }

  IntMat GK(26, IntVec(26));
  for (int i = 0; i < 26; ++i)
    for (int j = 0; j < 26; ++j) GK[i][j] = Int((long)two_re_herm(K[i], K[j]));

  // pairing value representatives: theta e, one per unit orbit, |theta e|^2
  // = 3 |e|^2 <= max_pairing
  std::vector<EisInt> reps;
  {
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    long bound = (max_pairing / Rat(3)).floor().get_si();
    for (long m = -bound - 2; m <= bound + 2; ++m)
      for (long n = -bound - 2; n <= bound + 2; ++n) {
        EisInt e{m, n};
        if (Rat(3 * e.norm()) > max_pairing) continue;
        // canonical orbit representative: lexicographically least multiple
        EisInt best = e;
        EisInt cur = e;
        for (int u = 0; u < 3; ++u) {
          if (u) cur = cur * EisInt::omega();
          for (const EisInt& cand : {cur, -cur})
            if (std::pair{cand.m, cand.n} < std::pair{best.m, best.n}) best = cand;
        }
        if (seen.insert({best.m, best.n}).second) reps.push_back(best);
      }
    std::sort(reps.begin(), reps.end(),
              [](const EisInt& a, const EisInt& b) { return a.norm() < b.norm(); });
  }

  const std::vector<std::int64_t> batch_norms = {0, 1, 3, 4, 7, 9, 12};
  auto batch_of = [&](std::int64_t e_norm) {
    for (std::size_t i = 0; i < batch_norms.size(); ++i)
      if (batch_norms[i] == e_norm) return int(i);
    throw std::logic_error("enumerate_roots_bounded: unexpected pairing norm");
  };

  for (const EisInt& e : reps) {
    EisInt mu = EisInt::theta() * e;  // <s, center> = mu
    int batch = batch_of(e.norm());
    Rat w2 = Rat(3) + Rat(mu.norm(), 3);  // norm of the complement component
    if (e.is_zero()) {
      // roots orthogonal to the center: enumerate norm-3 vectors of K
      std::vector<Rat> t(26, Rat(0));
      enumerate_quadratic(GK, t, Rat(2) * Rat(3), [&](const std::vector<std::int64_t>& x) {
        std::array<std::int64_t, 28> acc{};
        for (int i = 0; i < 26; ++i)
          if (x[i])
            for (int tt = 0; tt < 28; ++tt) acc[tt] += x[i] * K[i][tt];
        RootVec r = to_rootvec(acc);
        if (rootvec_norm(r) != 3) throw std::logic_error("bounded enumeration: non-root");
        if (canonical_root_rep(r) == r) sink(r, batch, -1);
      });
      continue;
    }
    // one solution x0 of <x, center> = mu
    IntMat U;
    IntMat H = hnf_rows_transform(P, U);
    auto coeffs = hnf_solve(H, {Int(mu.m), Int(mu.n)});
    if (!coeffs) throw std::logic_error("bounded enumeration: pairing value unreachable");
    // expand: x0 = sum_k coeffs_k * U[k] (coordinates in L.basis rows)
    std::array<std::int64_t, 28> x0{};
    IntVec in_basis(28, 0);
    for (std::size_t k = 0; k < coeffs->size(); ++k)
      for (int j = 0; j < 28; ++j) in_basis[j] += (*coeffs)[k] * U[k][j];
    for (int j = 0; j < 28; ++j) {
      if (sgn(in_basis[j]) == 0) continue;
      if (!in_basis[j].fits_slong_p())
        throw std::overflow_error("bounded enumeration: solution coefficient overflow");
      std::int64_t cj = in_basis[j].get_si();
      for (int t = 0; t < 28; ++t) x0[t] += cj * L.basis[j][t].get_si();
    }
    // offset t = x0 + (mu/3) center, in rational flat coordinates
    std::vector<Rat> tflat(28);
    auto cf = flatten_eis(center_e);
    for (int k = 0; k < 14; ++k) {
      // (mu/3) * center_k in (m, n) coordinates
      EisInt prod = mu * EisInt{cf[2 * k], cf[2 * k + 1]};
      tflat[2 * k] = Rat(x0[2 * k]) + Rat(prod.m, 3);
      tflat[2 * k + 1] = Rat(x0[2 * k + 1]) + Rat(prod.n, 3);
    }
    // coordinates of the offset in the K basis
    IntMat Kcols(26, IntVec(28));
    for (int i = 0; i < 26; ++i)
      for (int t = 0; t < 28; ++t) Kcols[i][t] = Int((long)K[i][t]);
    auto y = rat_solve_columns(Kcols, tflat);
    if (!y) throw std::logic_error("bounded enumeration: offset not in the complement span");
    enumerate_quadratic(GK, *y, Rat(2) * w2, [&](const std::vector<std::int64_t>& x) {
      std::array<std::int64_t, 28> acc = x0;
      for (int i = 0; i < 26; ++i)
        if (x[i])
          for (int tt = 0; tt < 28; ++tt) acc[tt] += x[i] * K[i][tt];
      RootVec r = to_rootvec(acc);
      if (rootvec_norm(r) != 3) throw std::logic_error("bounded enumeration: non-root");
      sink(canonical_root_rep(r), batch, -1);
    });
  }
}

std::vector<RootList> collect_batches(const GeoContext& g, const std::string& center_id,
                                      int max_batch, bool generic) {
  if (max_batch < 0 || max_batch > 3)
    throw std::invalid_argument("collect_batches: batch depth must be 0..3");
  std::vector<RootList> out(max_batch + 1);
  const Rat radii[4] = {Rat(0), Rat(1, 3), Rat(1), Rat(4, 3)};
  for (int b = 0; b <= max_batch; ++b) {
    out[b].spec.center = center_id;
    out[b].spec.batch = b;
    out[b].spec.sinh_sq_radius = RealQuad(radii[b]);
  }
  auto sink = [&](const RootVec& r, int batch, int) {
    if (batch <= max_batch) out[batch].classes.push_back(r);
  };
  if (center_id == "c" && !generic) {
    enumerate_center_table(g, max_batch, sink);
  } else {
    const AmbientVector& center = center_id == "c" ? g.sp.c : g.sp.p_inf;
    Rat maxp = Rat(3) * Rat(std::vector<long>{0, 1, 3, 4}[max_batch]);
    enumerate_roots_bounded(g, center, maxp, sink);
  }
  for (auto& list : out) std::sort(list.classes.begin(), list.classes.end());
  return out;
}

// ---- polygon classification ----

Polygon make_polygon(std::string name, std::vector<AmbientVector> verts,
                     std::vector<std::string> vert_names) {
  if (verts.size() != 3 && verts.size() != 4)
    throw std::invalid_argument("make_polygon: need 3 or 4 vertices");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (herm_norm(verts[i]).sign() >= 0)
      throw std::invalid_argument("make_polygon: vertex norm must be negative");
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      CycElem p = herm(verts[i], verts[j]);
      if (!p.is_real() || p.re.sign() >= 0)
        throw std::invalid_argument("make_polygon: pairings must be real negative");
    }
  }
  return Polygon{std::move(name), std::move(verts), std::move(vert_names)};
}

ScaledPolygon scale_polygon(const Polygon& P) {
  ScaledPolygon sp;
  sp.quad = P.verts.size() == 4;
  for (const auto& v : P.verts) sp.verts.push_back(scale_ambient(v));
  return sp;
}

namespace {

int sign_det(const Cyc4& z1, const Cyc4& z2) {
  auto m = [](std::int64_t x, std::int64_t y) { return (__int128)x * y; };
  __int128 A = m(z1.a, z2.c) + 3 * m(z1.b, z2.d) - m(z1.c, z2.a) - 3 * m(z1.d, z2.b);
  __int128 B = m(z1.a, z2.d) + m(z1.b, z2.c) - m(z1.c, z2.b) - m(z1.d, z2.a);
  return realquad_sign128(A, B);
}

int sign_dot(const Cyc4& z1, const Cyc4& z2) {
  auto m = [](std::int64_t x, std::int64_t y) { return (__int128)x * y; };
  __int128 A = m(z1.a, z2.a) + 3 * m(z1.b, z2.b) + m(z1.c, z2.c) + 3 * m(z1.d, z2.d);
  __int128 B = m(z1.a, z2.b) + m(z1.b, z2.a) + m(z1.c, z2.d) + m(z1.d, z2.c);
  return realquad_sign128(A, B);
}

bool origin_in_segment(const Cyc4& p, const Cyc4& q) {
  return sign_det(p, q) == 0 && sign_dot(p, q) <= 0;
}

bool origin_in_triangle(const Cyc4& p, const Cyc4& q, const Cyc4& r) {
  int s1 = sign_det(p, q), s2 = sign_det(q, r), s3 = sign_det(r, p);
  if (s1 == 0 && s2 == 0 && s3 == 0)
    return origin_in_segment(p, q) || origin_in_segment(q, r) || origin_in_segment(r, p);
  if (s1 >= 0 && s2 >= 0 && s3 >= 0) return true;
  if (s1 <= 0 && s2 <= 0 && s3 <= 0) return true;
  return false;
}

bool origin_in_hull(const std::vector<Cyc4>& pts) {
  if (pts.empty()) return false;
  if (pts.size() == 1) return pts[0].is_zero();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (origin_in_segment(pts[i], pts[j])) return true;
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (origin_in_triangle(pts[i], pts[j], pts[k])) return true;
    }
  return false;
}

MirrorHit classify_points(const std::vector<Cyc4>& z, bool quad) {
  MirrorHit hit;
  std::vector<Cyc4> nonzero;
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (z[k].is_zero())
      hit.zero_verts.push_back(int(k));
    else
      nonzero.push_back(z[k]);
  }
  std::size_t nzero = hit.zero_verts.size();
  if (nzero == z.size()) {
    hit.kind = HitKind::WholeSpan;
    return hit;
  }
  if (origin_in_hull(nonzero)) {
    hit.kind = HitKind::InteriorCrossing;
    return hit;
  }
  if (nzero == 0) {
    hit.kind = HitKind::Miss;
  } else if (nzero == 1) {
    hit.kind = HitKind::VertexOnly;
  } else if (nzero == 2) {
    int a = hit.zero_verts[0], b = hit.zero_verts[1];
    bool adjacent = !quad || ((b - a) == 1) || (a == 0 && b == int(z.size()) - 1);
    hit.kind = adjacent ? HitKind::EdgeSegment : HitKind::InteriorCrossing;
  } else {
    hit.kind = HitKind::InteriorCrossing;
  }
  return hit;
}

}  // namespace

MirrorHit classify_mirror(const Polygon& P, const AmbientVector& s) {
  std::vector<Cyc4> z;
  for (const auto& v : P.verts) {
    CycElem p = herm(v, s);
    // exact rational to scaled integer conversion per point
    Int lcm = 1;
    for (const Rat* r : {&p.re.a, &p.re.b, &p.im.a, &p.im.b}) {
      Int d = r->den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    auto ci = [&](const Rat& r) {
      Rat s2 = r * Rat(lcm);
      return s2.num().get_si();
    };
    z.push_back({ci(p.re.a), ci(p.re.b), ci(p.im.a), ci(p.im.b)});
  }
  return classify_points(z, P.verts.size() == 4);
}

MirrorHit classify_mirror_fast(const ScaledPolygon& P, const RootVec& s) {
  std::vector<Cyc4> z;
  z.reserve(P.verts.size());
  for (const auto& v : P.verts) z.push_back(pairing(v, s));
  return classify_points(z, P.quad);
}

// ---- drivers ----

namespace {

RealQuad rq(long an, long ad, long bn, long bd) { return RealQuad(Rat(an, ad), Rat(bn, bd)); }

std::string rq_str(const RealQuad& x) { return x.str(); }

void check_eq(DriverReport& rep, const std::string& id, const RealQuad& got,
              const RealQuad& expect) {
  CheckLine line{id, got == expect, ""};
  if (!line.pass) line.detail = "got " + rq_str(got) + ", recorded " + rq_str(expect);
  rep.checks.push_back(line);
}

}  // namespace

DriverReport verify_covering_distances(const GeoContext& g) {
  DriverReport rep{"covering-distances", {}};
  const auto& sp = g.sp;
  auto half = CycElem(Rat(1, 2));
  AmbientVector m = vec_scale(half, vec_add(sp.tau, sp.rho));
  AmbientVector mpa = vec_scale(half, vec_add(sp.tau_prime_a, sp.rho));
  AmbientVector mpb = vec_scale(half, vec_add(sp.tau_prime_b, sp.rho));
  AmbientVector mpq = vec_scale(half, vec_add(sp.tau_prime_q, sp.rho_prime));

  struct Item {
    const char* id;
    AmbientVector a, b;
    RealQuad expect;
  };
  std::vector<Item> items = {
      {"d(p,tau)", sp.p_inf, sp.tau, rq(1, 2, 2, 3)},
      {"d(p,m)", sp.p_inf, m, rq(1303, 1034, 1676, 1551)},
      {"d(c,m)", sp.c, m, rq(794, 517, 1376, 1551)},
      {"d(c,rho)", sp.c, sp.rho, rq(5, 4, 13, 18)},
      {"d(c,m'-tri-a)", sp.c, mpa, rq(1828, 1195, 1056, 1195)},
      {"d(c,m'-tri-b)", sp.c, mpb, rq(1828, 1195, 1056, 1195)},
      {"d(c,m'-quad)", sp.c, mpq, rq(1994, 1319, 1152, 1319)},
      {"d(p,tau'-a)", sp.p_inf, sp.tau_prime_a, rq(320, 429, 96, 143)},
      {"d(p,tau'-b)", sp.p_inf, sp.tau_prime_b, rq(59, 143, 96, 143)},
      {"d(p,tau'-quad)", sp.p_inf, sp.tau_prime_q, rq(59, 143, 96, 143)},
      {"d(p,m'-a)", sp.p_inf, mpa, rq(4996, 3585, 256, 239)},
      {"d(p,m'-b)", sp.p_inf, mpb, rq(1483, 1195, 1296, 1195)},
      {"d(p,m'-quad)", sp.p_inf, mpq, rq(3103, 2638, 1452, 1319)},
      {"d(c,rho'-quad)", sp.c, sp.rho_prime, rq(443, 359, 256, 359)},
  };
  const RealQuad bound = rq(10, 3, 0, 1);
  for (const auto& it : items) {
    RealQuad got = cosh_sq_dist(it.a, it.b).value;
    check_eq(rep, it.id, got, it.expect);
    CheckLine rad{std::string(it.id) + " radicand < 10/3", (got - bound).sign() < 0, ""};
    if (!rad.pass) rad.detail = "radicand " + rq_str(got);
    rep.checks.push_back(rad);
  }
  return rep;
}

namespace {

// Roots of the first block: [0,0; v,0,0] in standard coordinates.
std::set<RootVec> first_block_classes(const GeoContext& g) {
  CenterFrame f = center_frame(g);
  std::set<RootVec> out;
  for (const auto& v : g.l4_norm3) {
    std::array<std::int64_t, 28> acc{};
    for (int k = 0; k < 4; ++k) accumulate(acc, v[k], f.block_roots[k]);
    out.insert(canonical_root_rep(to_rootvec(acc)));
  }
  return out;
}

// Splits the concatenated class lists into nearly equal ranges and folds a
// per-thread state over them; merge order is fixed, so reports do not depend
// on the worker count.
template <class State, class Step>
std::vector<State> parallel_fold(const std::vector<const std::vector<RootVec>*>& lists,
                                 int threads, const State& init, const Step& step) {
  std::size_t total = 0;
  for (const auto* l : lists) total += l->size();
  int t = std::max(1, threads);
  if (total < 4096) t = 1;
  std::vector<State> states(t, init);
  auto work = [&](int who) {
    std::size_t begin = total * who / t, end = total * (who + 1) / t, idx = 0;
    for (const auto* l : lists) {
      if (idx >= end) break;
      if (idx + l->size() <= begin) {
        idx += l->size();
        continue;
      }
      std::size_t lo = begin > idx ? begin - idx : 0;
      std::size_t hi = std::min(l->size(), end - idx);
      for (std::size_t k = lo; k < hi; ++k) step(states[who], (*l)[k]);
      idx += l->size();
    }
  };
  if (t == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int who = 0; who < t; ++who) pool.emplace_back(work, who);
    for (auto& th : pool) th.join();
  }
  return states;
}

std::string hit_str(const MirrorHit& h, const std::vector<std::string>& names) {
  std::string k;
  switch (h.kind) {
    case HitKind::Miss: k = "miss"; break;
    case HitKind::VertexOnly: k = "vertex"; break;
    case HitKind::EdgeSegment: k = "edge"; break;
    case HitKind::InteriorCrossing: k = "interior"; break;
    case HitKind::WholeSpan: k = "whole-span"; break;
  }
  for (int v : h.zero_verts) k += " " + names[v];
  return k;
}

}  // namespace

DriverReport verify_polygon_classification(const GeoContext& g,
                                           const std::vector<RootList>& around_c,
                                           const std::vector<RootList>& around_p_inf,
                                           int threads) {
  DriverReport rep{"polygon-classification", {}};
  const auto& sp = g.sp;

  Polygon TA = make_polygon("triangle-a", {sp.tau, sp.rho, sp.tau_prime_a}, {"tau", "rho", "tau'"});
  Polygon TB = make_polygon("triangle-b", {sp.tau, sp.rho, sp.tau_prime_b}, {"tau", "rho", "tau'"});
  Polygon Q = make_polygon("quadrilateral", {sp.tau, sp.tau_prime_q, sp.rho_prime, sp.rho},
                           {"tau", "tau'", "rho'", "rho"});

  std::set<RootVec> block1 = first_block_classes(g);
  RootVec s0_class = canonical_root_rep(root_from_ambient(g.rt.roots[g.gl.gon[0]]));
  RootVec sa_class = canonical_root_rep(root_from_ambient(g.rt.roots[g.gl.a4[0]]));
  RootVec sb_class = canonical_root_rep(root_from_ambient(g.rt.roots[g.gl.a4[1]]));

  ScaledVec c_scaled = scale_ambient(g.sp.c);
  std::vector<const std::vector<RootVec>*> lists_c, lists_p;
  for (const auto& list : around_c) lists_c.push_back(&list.classes);
  for (const auto& list : around_p_inf) lists_p.push_back(&list.classes);

  struct Expect {
    const Polygon* poly;
    RootVec special;        // the mirror with the designated segment
    MirrorHit special_hit;  // expected hit for it
    MirrorHit block_hit;    // expected hit for the other block mirrors
    std::size_t expected_non_miss;
  };
  // vertex indices: triangles (tau, rho, tau'), quad (tau, tau', rho', rho)
  std::vector<Expect> cases = {
      {&TA, sa_class, {HitKind::EdgeSegment, {1, 2}}, {HitKind::VertexOnly, {1}}, 40},
      {&TB, sb_class, {HitKind::EdgeSegment, {1, 2}}, {HitKind::VertexOnly, {1}}, 40},
      {&Q, s0_class, {HitKind::EdgeSegment, {1, 2}}, {HitKind::EdgeSegment, {2, 3}}, 41},
  };

  struct Fold {
    std::size_t checked = 0, non_miss = 0;
    std::vector<std::string> unexpected;
  };

  for (const auto& cse : cases) {
    ScaledPolygon spoly = scale_polygon(*cse.poly);
    auto consider = [&](Fold& f, const RootVec& s) {
      ++f.checked;
      MirrorHit hit = classify_mirror_fast(spoly, s);
      if (hit.kind == HitKind::Miss) return;
      ++f.non_miss;
      MirrorHit want;
      bool known = false;
      if (s == cse.special) {
        want = cse.special_hit;
        known = true;
      } else if (block1.count(s)) {
        want = cse.block_hit;
        known = true;
      }
      if (!known || hit.kind != want.kind || hit.zero_verts != want.zero_verts) {
        if (f.unexpected.size() < 10) f.unexpected.push_back(hit_str(hit, cse.poly->vert_names));
      }
    };
    auto folds_c = parallel_fold(lists_c, threads, Fold{}, consider);
    auto folds_p = parallel_fold(
        lists_p, threads, Fold{}, [&](Fold& f, const RootVec& s) {
          // mirrors already counted among the batches around c are skipped:
          // those have |<s,c>|^2 <= 12, i.e. scaled pairing norm <= 48
          Norm2 n = cyc4_norm(pairing(c_scaled, s));
          Norm2 bound;
          bound.a = (__int128)12 * 4;
          bound.b = 0;
          if (norm2_cmp(n, bound) <= 0) return;
          consider(f, s);
        });
    Fold total;
    for (const auto* group : {&folds_c, &folds_p})
      for (const auto& f : *group) {
        total.checked += f.checked;
        total.non_miss += f.non_miss;
        for (const auto& u : f.unexpected)
          if (total.unexpected.size() < 10) total.unexpected.push_back(u);
      }
    std::ostringstream os;
    os << "checked " << total.checked << ", non-miss " << total.non_miss;
    bool ok = (total.non_miss == cse.expected_non_miss) && total.unexpected.empty();
    if (!total.unexpected.empty()) {
      os << ", unexpected:";
      for (const auto& u : total.unexpected) os << " [" << u << "]";
    }
    rep.checks.push_back({cse.poly->name, ok, os.str()});
  }
  return rep;
}

DriverReport verify_nearest_to_rho(const GeoContext& g, const std::vector<RootList>& around_c,
                                   int threads) {
  DriverReport rep{"nearest-to-projection-point", {}};
  const RealQuad A = rq(-1, 12, 1, 18);      // sinh^2 to the gon mirrors
  const RealQuad B = rq(5, 4, 13, 18);       // cosh^2 from rho to c
  const RealQuad one(Rat(1));

  // sinh(d1 + d2) < sinh(r4): AB and (1+A)(B-1) under the addition formula
  int cmp = cmp_sqrt_sum(A * B, (one + A) * (B - one), rq(7, 3, 0, 1));
  rep.checks.push_back({"sinh-addition inequality", cmp < 0, ""});

  ScaledVec rho = scale_ambient(g.sp.rho);
  struct Fold {
    bool have_min = false;
    Norm2 best{};
    std::vector<RootVec> through, achievers;
  };
  std::vector<const std::vector<RootVec>*> lists;
  for (const auto& list : around_c) lists.push_back(&list.classes);
  auto folds = parallel_fold(lists, threads, Fold{}, [&](Fold& f, const RootVec& s) {
    Norm2 n = cyc4_norm(pairing(rho, s));
    if (norm2_is_zero(n)) {
      f.through.push_back(s);
      return;
    }
    int c = f.have_min ? norm2_cmp(n, f.best) : -1;
    if (c < 0) {
      f.best = n;
      f.achievers.assign(1, s);
      f.have_min = true;
    } else if (c == 0) {
      f.achievers.push_back(s);
    }
  });
  bool have_min = false;
  Norm2 best{};
  std::vector<RootVec> through, achievers;
  for (const auto& f : folds) {
    through.insert(through.end(), f.through.begin(), f.through.end());
    if (!f.have_min) continue;
    int c = have_min ? norm2_cmp(f.best, best) : -1;
    if (c < 0) {
      best = f.best;
      achievers = f.achievers;
      have_min = true;
    } else if (c == 0) {
      achievers.insert(achievers.end(), f.achievers.begin(), f.achievers.end());
    }
  }

  // the winners, recomputed exactly
  bool min_ok = have_min;
  for (const auto& s : achievers)
    min_ok = min_ok &&
             sinh_sq_dist_to_mirror(g.sp.rho, root_to_ambient(s)).value == A;
  rep.checks.push_back({"minimum positive sinh^2 is -1/12 + sqrt3/18", min_ok,
                        "achievers " + std::to_string(achievers.size())});

  std::set<RootVec> gon_classes;
  for (int j = 0; j < 12; ++j)
    gon_classes.insert(canonical_root_rep(root_from_ambient(g.rt.roots[g.gl.gon[j]])));
  std::set<RootVec> got(achievers.begin(), achievers.end());
  rep.checks.push_back({"achievers are exactly the twelve gon mirrors", got == gon_classes,
                        std::to_string(got.size()) + " achievers"});

  std::set<RootVec> through_set(through.begin(), through.end());
  rep.checks.push_back({"mirrors through the point are exactly the forty block mirrors",
                        through_set == first_block_classes(g),
                        std::to_string(through_set.size()) + " through"});
  return rep;
}

DriverReport verify_nearest_to_tau(const GeoContext& g, const std::vector<RootList>& around_p_inf) {
  DriverReport rep{"nearest-to-symmetry-point", {}};
  const RealQuad A = rq(-1, 26, 2, 39);  // sinh^2 from tau to the 26 mirrors
  const RealQuad B = rq(1, 2, 2, 3);     // cosh^2 from tau to the enumeration center
  const RealQuad one(Rat(1));

  // A equals 1/(6 + 8 sqrt3) exactly
  rep.checks.push_back(
      {"closed form of the 26-mirror distance", A * rq(6, 1, 8, 1) == one, ""});
  RealQuad got = sinh_sq_dist_to_mirror(g.sp.tau, g.rt.p(1)).value;
  rep.checks.push_back({"sinh^2 d(tau, point-mirror)", got == A, rq_str(got)});
  rep.checks.push_back({"point and line mirrors equidistant",
                        sinh_sq_dist_to_mirror(g.sp.tau, g.rt.l(1)).value == A, ""});

  // sufficiency: the enumeration radius covers every candidate mirror
  int cmp = cmp_sqrt_sum(A * B, (one + A) * (B - one), rq(4, 3, 0, 1));
  rep.checks.push_back({"batches through 2 suffice", cmp < 0, ""});

  ScaledVec tau = scale_ambient(g.sp.tau);
  bool have_min = false;
  Norm2 best{};
  std::size_t through = 0, total = 0;
  std::vector<RootVec> achievers;
  for (const auto& list : around_p_inf) {
    if (list.spec.batch > 2) continue;
    for (const auto& s : list.classes) {
      ++total;
      Norm2 n = cyc4_norm(pairing(tau, s));
      if (norm2_is_zero(n)) {
        ++through;
        continue;
      }
      int c = have_min ? norm2_cmp(n, best) : -1;
      if (c < 0) {
        best = n;
        achievers.assign(1, s);
        have_min = true;
      } else if (c == 0) {
        achievers.push_back(s);
      }
    }
  }
  rep.checks.push_back({"no mirror passes through tau", through == 0, ""});

  std::set<RootVec> expected;
  for (int i = 0; i < 26; ++i) expected.insert(canonical_root_rep(root_from_ambient(g.rt.roots[i])));
  std::set<RootVec> gotset(achievers.begin(), achievers.end());
  bool exact_values = true;
  for (const auto& s : achievers)
    exact_values =
        exact_values && sinh_sq_dist_to_mirror(g.sp.tau, root_to_ambient(s)).value == A;
  rep.checks.push_back({"the 26 point- and line-mirrors are strictly nearest",
                        gotset == expected && exact_values,
                        "checked " + std::to_string(total) + " mirrors, " +
                            std::to_string(gotset.size()) + " achievers"});
  return rep;
}

SigmaSearchResult verify_sigma_criteria(const GeoContext& g, const Rat& t_start) {
  SigmaSearchResult result;
  result.report.name = "subball-generation-criteria";

  // the forty block-mirror classes, as ambient roots
  std::vector<AmbientVector> block_roots;
  {
    CenterFrame f = center_frame(g);
    for (const auto& v : g.l4_norm3) {
      std::array<std::int64_t, 28> acc{};
      for (int k = 0; k < 4; ++k) accumulate(acc, v[k], f.block_roots[k]);
      RootVec r = to_rootvec(acc);
      if (canonical_root_rep(r) == r) block_roots.push_back(root_to_ambient(r));
    }
  }
  if (block_roots.size() != 40)
    throw std::logic_error("sigma criteria: expected forty block classes");
  std::set<RootVec> chain;
  for (int k = 0; k < 4; ++k)
    chain.insert(canonical_root_rep(root_from_ambient(g.rt.roots[g.gl.a4[k]])));

  Rat t = t_start;
  for (int attempt = 0; attempt < 24; ++attempt, t = t * Rat(1, 2)) {
    result.tried.push_back(t.str());
    AmbientVector sigma = sigma_point(g.rt, t);

    // (a) the four chain mirrors are the strict nearest among the forty
    bool a_ok = true;
    RealQuad chain_max(Rat(0)), other_min(Rat(0));
    bool have_chain = false, have_other = false, on_mirror = false;
    for (const auto& r : block_roots) {
      RealQuad d = sinh_sq_dist_to_mirror(sigma, r).value;
      if (d.sign() == 0) on_mirror = true;
      bool is_chain = chain.count(canonical_root_rep(root_from_ambient(r))) > 0;
      if (is_chain) {
        if (!have_chain || d > chain_max) chain_max = d;
        have_chain = true;
      } else {
        if (!have_other || d < other_min) other_min = d;
        have_other = true;
      }
    }
    a_ok = have_chain && have_other && !on_mirror && chain_max < other_min;

    // (b) eight reflected images; projections to the other mirrors are
    // strictly closer to one of them than to sigma
    std::vector<AmbientVector> images;
    const CycElem w = CycElem::omega();
    for (int k = 0; k < 4; ++k) {
      const AmbientVector& s = g.rt.roots[g.gl.a4[k]];
      for (const CycElem& unit : {w, w.conj()}) {
        CycElem coeff = (CycElem(1) - unit) * herm(sigma, s) / CycElem(3);
        images.push_back(vec_sub(sigma, vec_scale(coeff, s)));
      }
    }
    bool b_ok = images.size() == 8;
    for (const auto& r : block_roots) {
      if (chain.count(canonical_root_rep(root_from_ambient(r)))) continue;
      AmbientVector proj = project_to_mirror(sigma, r);
      if (herm_norm(proj).sign() >= 0) {
        b_ok = false;
        break;
      }
      RealQuad to_sigma = cosh_sq_dist(proj, sigma).value;
      bool closer = false;
      for (const auto& e : images)
        if (cosh_sq_dist(proj, e).value < to_sigma) {
          closer = true;
          break;
        }
      if (!closer) {
        b_ok = false;
        break;
      }
    }

    if (a_ok && b_ok) {
      result.t_found = t;
      result.report.checks.push_back({"four chain mirrors strictly nearest", true, "t = " + t.str()});
      result.report.checks.push_back({"eight images criterion", true, "t = " + t.str()});
      result.report.checks.push_back(
          {"image count", images.size() == 8, std::to_string(images.size())});
      return result;
    }
  }
  result.report.checks.push_back({"search exhausted without a working t", false, ""});
  return result;
}

bool mirror_meets_subball(const GeoContext& g, const AmbientVector& s) {
  if (herm_norm(s) != RealQuad(Rat(3)))
    throw std::invalid_argument("mirror_meets_subball: s must be a norm-3 root");
  // a basis of the span of the twelve gon roots (rank 10)
  std::vector<AmbientVector> basis;
  {
    CycMat rows;
    for (int j = 0; j < 12; ++j) {
      rows.push_back(g.rt.roots[g.gl.gon[j]]);
      if (cyc_rank(rows) < rows.size())
        rows.pop_back();
      else
        basis.push_back(g.rt.roots[g.gl.gon[j]]);
    }
    if (basis.size() != 10) throw std::logic_error("subball basis rank");
  }
  // restrict to the kernel of x -> <x, s> inside the span
  CycMat A(1, CycVec(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) A[0][j] = herm(basis[j], s);
  std::vector<CycVec> ker;
  cyc_rank(A, &ker);
  CycMat gram(ker.size(), CycVec(ker.size()));
  for (std::size_t i = 0; i < ker.size(); ++i)
    for (std::size_t j = 0; j < ker.size(); ++j) {
      CycElem acc(0);
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b)
          acc += ker[i][a] * herm(basis[a], basis[b]) * ker[j][b].conj();
      gram[i][j] = acc;
    }
  return signature(HermitianGram(gram)).negative > 0;
}

DriverReport verify_subball_mirrors(const GeoContext& g, const std::vector<RootList>& around_c,
                                    std::uint64_t seed, std::size_t sample_size) {
  DriverReport rep{"subball-mirrors", {}};
  // orthogonality patterns decide the lemma's two admissible classes
  auto orth_class = [&](const AmbientVector& s) {
    bool perp_block = true, perp_gon = true;
    for (int k = 0; k < 4; ++k) perp_block = perp_block && herm(s, g.rt.roots[g.gl.a4[k]]).is_zero();
    for (int j = 0; j < 12; ++j) perp_gon = perp_gon && herm(s, g.rt.roots[g.gl.gon[j]]).is_zero();
    return std::pair{perp_block, perp_gon};
  };

  // the two endpoint examples
  {
    const AmbientVector& s0 = g.rt.roots[g.gl.gon[0]];
    rep.checks.push_back({"gon mirror meets", mirror_meets_subball(g, s0), ""});
    const AmbientVector& sa = g.rt.roots[g.gl.a4[0]];
    rep.checks.push_back({"block mirror contains the subball", mirror_meets_subball(g, sa), ""});
  }

  std::vector<RootVec> all;
  for (const auto& list : around_c)
    for (const auto& s : list.classes) all.push_back(s);
  std::mt19937_64 rng(seed);
  std::vector<RootVec> sample;
  for (std::size_t k = 0; k < sample_size && !all.empty(); ++k)
    sample.push_back(all[rng() % all.size()]);

  std::size_t meets = 0, misses = 0;
  bool consistent = true;
  for (const auto& rv : sample) {
    AmbientVector s = root_to_ambient(rv);
    bool m = mirror_meets_subball(g, s);
    auto [perp_block, perp_gon] = orth_class(s);
    (m ? meets : misses)++;
    // meets iff s is a root of the gon sublattice or one of the forty
    if (m != (perp_block || perp_gon)) consistent = false;
  }
  std::ostringstream os;
  os << "sample " << sample.size() << " (meets " << meets << ", misses " << misses
     << "), seed " << seed;
  rep.checks.push_back({"meet-pattern matches the orthogonality classes", consistent, os.str()});
  return rep;
}

}  // namespace eis
