#include "eis/isometry.hpp"

#include <cctype>

namespace eis {

namespace {

CycMat form_matrix() {
  CycMat J(kAmbientDim, CycVec(kAmbientDim));
  J[0][0] = CycElem(-1);
  for (std::size_t i = 1; i < kAmbientDim; ++i) J[i][i] = CycElem(1);
  return J;
}

const CycMat& J() {
  static const CycMat j = form_matrix();
  return j;
}

}  // namespace

Isometry::Isometry(CycMat mat) : m(std::move(mat)) {
  if (m.size() != kAmbientDim) throw std::invalid_argument("Isometry: wrong size");
  CycMat check = cyc_mul(cyc_mul(cyc_conj_transpose(m), J()), m);
  if (!cyc_equal(check, J())) throw std::invalid_argument("Isometry: form not preserved");
}

Isometry iso_identity() { return Isometry(cyc_identity(kAmbientDim)); }

Isometry iso_mul(const Isometry& a, const Isometry& b) { return Isometry(cyc_mul(a.m, b.m)); }

Isometry iso_inverse(const Isometry& a) { return Isometry(cyc_inverse(a.m)); }

Isometry iso_scale(const CycElem& unit, const Isometry& a) {
  if (unit.norm() != RealQuad(Rat(1))) throw std::invalid_argument("iso_scale: not a unit scalar");
  return Isometry(cyc_scale(unit, a.m));
}

Isometry iso_pow(const Isometry& a, long e) {
  Isometry base = e < 0 ? iso_inverse(a) : a;
  long k = e < 0 ? -e : e;
  Isometry acc = iso_identity();
  for (long i = 0; i < k; ++i) acc = iso_mul(acc, base);
  return acc;
}

bool iso_equal(const Isometry& a, const Isometry& b) { return cyc_equal(a.m, b.m); }

std::optional<CycElem> matrix_scalar_ratio(const CycMat& A, const CycMat& B) {
  std::size_t n = A.size();
  CycElem lambda(0);
  for (std::size_t i = 0; i < n && lambda.is_zero(); ++i)
    for (std::size_t j = 0; j < n && lambda.is_zero(); ++j)
      if (!B[i][j].is_zero()) lambda = A[i][j] / B[i][j];
  if (lambda.is_zero()) return std::nullopt;  // B = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (A[i][j] != lambda * B[i][j]) return std::nullopt;
  return lambda;
}

std::optional<CycElem> scalar_of(const Isometry& A) {
  return matrix_scalar_ratio(A.m, cyc_identity(kAmbientDim));
}

int order_mod_scalars(const Isometry& A, int cap) {
  Isometry p = A;
  for (int e = 1; e <= cap; ++e) {
    if (scalar_of(p)) return e;
    p = iso_mul(p, A);
  }
  return 0;
}

Isometry triflection(const AmbientVector& s) {
  if (herm_norm(s) != RealQuad(Rat(3)))
    throw std::invalid_argument("triflection: root must have norm 3");
  const CycElem one_minus_w = CycElem(1) - CycElem::omega();
  CycMat M = cyc_identity(kAmbientDim);
  for (std::size_t j = 0; j < kAmbientDim; ++j)
    for (std::size_t k = 0; k < kAmbientDim; ++k) {
      CycElem jk = (k == 0) ? CycElem(-1) : CycElem(1);
      M[j][k] -= one_minus_w * jk * s[k].conj() * s[j] / CycElem(3);
    }
  return Isometry(std::move(M));
}

bool preserves_lattice(const EisSpan& span, const RootTable& rt, const Isometry& W) {
  for (const auto& r : rt.roots)
    if (!span.contains(W.apply(r))) return false;
  return true;
}

ReflWord parse_word(const std::string& text) {
  ReflWord out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace((unsigned char)text[i]) || text[i] == ',')) ++i;
  };
  auto parse_sym = [&]() -> int {
    if (i >= text.size() || (text[i] != 'S' && text[i] != 's'))
      throw std::invalid_argument("word: expected symbol at position " + std::to_string(i));
    ++i;
    if (i < text.size() && std::isdigit((unsigned char)text[i])) {
      int v = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) v = v * 10 + (text[i++] - '0');
      if (v > 11) throw std::invalid_argument("word: symbol index out of range");
      return v;
    }
    if (i < text.size()) {
      char c = std::toupper((unsigned char)text[i]);
      if (c >= 'A' && c <= 'D') {
        ++i;
        return 12 + (c - 'A');
      }
    }
    throw std::invalid_argument("word: bad symbol");
  };
  auto parse_exp = [&]() -> long {
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = (text[i++] == '-');
      if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
        throw std::invalid_argument("word: bad exponent");
      long v = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) v = v * 10 + (text[i++] - '0');
      return neg ? -v : v;
    }
    return 1;
  };
  skip();
  while (i < text.size()) {
    if (text.compare(i, 5, "Delta") == 0 || text.compare(i, 5, "delta") == 0) {
      i += 5;
      skip();
      if (i >= text.size() || text[i] != '(') throw std::invalid_argument("word: Delta needs (");
      ++i;
      std::vector<WordLetter> args;
      skip();
      while (i < text.size() && text[i] != ')') {
        int s = parse_sym();
        long e = parse_exp();
        args.push_back({s, e});
        skip();
      }
      if (i >= text.size()) throw std::invalid_argument("word: unterminated Delta");
      ++i;  // ')'
      long outer = parse_exp();
      ReflWord expansion;
      for (std::size_t m = args.size(); m >= 1; --m)
        for (std::size_t k = 0; k < m; ++k) expansion.push_back(args[k]);
      for (long rep = 0; rep < (outer < 0 ? -outer : outer); ++rep) {
        if (outer >= 0)
          out.insert(out.end(), expansion.begin(), expansion.end());
        else
          for (auto it = expansion.rbegin(); it != expansion.rend(); ++it)
            out.push_back({it->sym, -it->exp});
      }
    } else {
      int s = parse_sym();
      long e = parse_exp();
      out.push_back({s, e});
    }
    skip();
  }
  return out;
}

ReflContext::ReflContext() : rt_(build_roots()), sp_(special_points(rt_)), gl_(gon_labels()) {
  gens_.reserve(16);
  for (int j = 0; j < 12; ++j) gens_.push_back(triflection(rt_.roots[gl_.gon[j]]));
  for (int k = 0; k < 4; ++k) gens_.push_back(triflection(rt_.roots[gl_.a4[k]]));
}

Isometry ReflContext::eval(const ReflWord& w) const {
  Isometry acc = iso_identity();
  for (const auto& [sym, exp] : w) {
    if (sym < 0 || sym > 15) throw std::invalid_argument("eval: unresolved symbol");
    // triflections have order 3, so exponents reduce mod 3
    long e = ((exp % 3) + 3) % 3;
    for (long k = 0; k < e; ++k) acc = iso_mul(acc, gens_[sym]);
  }
  return acc;
}

Isometry ReflContext::increasing_product(int first) const {
  Isometry acc = iso_identity();
  for (int k = 0; k < 11; ++k) acc = iso_mul(acc, gon(first + k));
  return acc;
}

Isometry ReflContext::decreasing_product(int first) const {
  Isometry acc = iso_identity();
  for (int k = 0; k < 11; ++k) acc = iso_mul(acc, gon(first - k));
  return acc;
}

Isometry ReflContext::delta_a4() const {
  Isometry acc = iso_identity();
  for (int m = 4; m >= 1; --m)
    for (int k = 0; k < m; ++k) acc = iso_mul(acc, a4(k));
  return acc;
}

Isometry ReflContext::delta_gon11() const {
  Isometry acc = iso_identity();
  for (int m = 11; m >= 1; --m)
    for (int k = 1; k <= m; ++k) acc = iso_mul(acc, gon(k));
  return acc;
}

std::optional<PlaneAction> plane_action(const ReflContext& ctx, const Isometry& W) {
  const auto& sp = ctx.special();
  const AmbientVector& rho = sp.rho;
  AmbientVector tmr = vec_sub(sp.tau, sp.rho);
  AmbientVector wr = W.apply(rho);
  // W must fix the complex line of rho
  CycElem alpha(0);
  for (std::size_t k = 0; k < kAmbientDim && alpha.is_zero(); ++k)
    if (!rho[k].is_zero()) alpha = wr[k] / rho[k];
  if (alpha.is_zero() || wr != vec_scale(alpha, rho)) return std::nullopt;
  // beta from the component along tau - rho (which is orthogonal to rho)
  AmbientVector wt = W.apply(tmr);
  CycElem beta = herm(wt, tmr) / herm(tmr, tmr);
  AmbientVector resid = vec_sub(wt, vec_scale(beta, tmr));
  bool resid_zero = true;
  for (const auto& x : resid) resid_zero = resid_zero && x.is_zero();
  if (!resid_zero) {
    CycElem mu(0);
    for (std::size_t k = 0; k < kAmbientDim && mu.is_zero(); ++k)
      if (!rho[k].is_zero()) mu = resid[k] / rho[k];
    if (resid != vec_scale(mu, rho)) return std::nullopt;
  }
  return PlaneAction{alpha, beta};
}

bool braid_relation_holds(const AmbientVector& a, const AmbientVector& b) {
  CycElem p = herm(a, b);
  Isometry A = triflection(a), B = triflection(b);
  if (p.is_zero()) return iso_equal(iso_mul(A, B), iso_mul(B, A));
  if (p == CycElem::theta() || p == CycElem::theta().conj())
    return iso_equal(iso_mul(iso_mul(A, B), A), iso_mul(iso_mul(B, A), B));
  throw std::invalid_argument("braid_relation_holds: pairing must be 0 or +-theta");
}

}  // namespace eis
