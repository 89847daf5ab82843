#include "eis/model.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace eis {

CycElem herm(const AmbientVector& x, const AmbientVector& y) {
  CycElem s = -(x[0] * y[0].conj());
  for (std::size_t k = 1; k < kAmbientDim; ++k) s += x[k] * y[k].conj();
  return s;
}

RealQuad herm_norm(const AmbientVector& x) {
  CycElem n = herm(x, x);
  if (!n.is_real()) throw std::logic_error("herm_norm: norm not real");
  return n.re;
}

AmbientVector vec_add(const AmbientVector& a, const AmbientVector& b) {
  AmbientVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

AmbientVector vec_sub(const AmbientVector& a, const AmbientVector& b) {
  AmbientVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

AmbientVector vec_scale(const CycElem& s, const AmbientVector& a) {
  AmbientVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool IncidencePlane::is_incident(int point, int line) {
  int d = ((point - line) % 13 + 13) % 13;
  return d == 0 || d == 1 || d == 3 || d == 9;
}

std::array<int, 4> IncidencePlane::points_on_line(int line) {
  std::array<int, 4> pts;
  int k = 0;
  for (int d : {0, 1, 3, 9}) pts[k++] = (line - 1 + d) % 13 + 1;
  return pts;
}

RootTable build_roots() {
  RootTable rt;
  const CycElem th = CycElem::theta();
  for (int i = 1; i <= 13; ++i) {
    AmbientVector p(kAmbientDim, CycElem(0));
    p[i] = th;
    rt.roots[i - 1] = std::move(p);
  }
  for (int j = 1; j <= 13; ++j) {
    AmbientVector l(kAmbientDim, CycElem(0));
    l[0] = CycElem(1);
    for (int pt : IncidencePlane::points_on_line(j)) l[pt] = CycElem(1);
    rt.roots[13 + j - 1] = std::move(l);
  }
  // Cross-check the coordinate Gram against the incidence-graph Gram.
  DirectedGraph g;
  g.nodes = 26;
  for (int j = 1; j <= 13; ++j)
    for (int pt : IncidencePlane::points_on_line(j)) g.edges.push_back({13 + j - 1, pt - 1});
  auto G = gram_from_graph(g);
  for (int a = 0; a < 26; ++a)
    for (int b = 0; b < 26; ++b)
      if (herm(rt.roots[a], rt.roots[b]) != G.at(a, b))
        throw std::logic_error("build_roots: Gram mismatch with incidence graph");
  return rt;
}

GonLabels gon_labels() {
  auto p = [](int i) { return i - 1; };
  auto l = [](int j) { return 13 + j - 1; };
  GonLabels gl;
  gl.gon = {p(6), l(10), p(13), l(4), p(7), l(11), p(12), l(9), p(9), l(8), p(8), l(5)};
  gl.a4 = {l(1), p(2), l(2), p(3)};
  return gl;
}

AmbientVector project_to_mirror(const AmbientVector& v, const AmbientVector& s) {
  if (herm_norm(s) != RealQuad(Rat(3)))
    throw std::invalid_argument("project_to_mirror: s is not a norm-3 root");
  CycElem coeff = herm(v, s) / CycElem(3);
  return vec_sub(v, vec_scale(coeff, s));
}

AmbientVector project_to_a4_block(const RootTable& rt, const AmbientVector& v) {
  auto gl = gon_labels();
  CycMat A(4, CycVec(4));
  CycVec rhs(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) A[i][j] = herm(rt.roots[gl.a4[j]], rt.roots[gl.a4[i]]);
    rhs[i] = herm(v, rt.roots[gl.a4[i]]);
  }
  auto x = cyc_solve(A, rhs);
  if (!x) throw std::logic_error("project_to_a4_block: singular block Gram");
  AmbientVector proj(kAmbientDim, CycElem(0));
  for (int j = 0; j < 4; ++j) proj = vec_add(proj, vec_scale((*x)[j], rt.roots[gl.a4[j]]));
  return proj;
}

SpecialPoints special_points(const RootTable& rt) {
  SpecialPoints sp;
  const CycElem th = CycElem::theta();
  sp.p_inf.assign(kAmbientDim, CycElem(0));
  sp.p_inf[0] = th.conj();
  sp.l_inf.assign(kAmbientDim, CycElem(1));
  sp.l_inf[0] = CycElem(4);
  sp.tau = vec_add(sp.l_inf, vec_scale(CycElem::i(), sp.p_inf));

  const CycElem lam(RealQuad(Rat(2), Rat(1)));  // 2 + sqrt3
  auto lamx = [&](long k) { return CycElem(Rat(k)) * lam; };
  sp.rho = {lamx(6), lamx(2), CycElem(0), CycElem(0), lamx(2), lamx(3), CycElem(1),
            CycElem(1), CycElem(1), CycElem(1), lamx(2), lamx(3), CycElem(1), CycElem(1)};

  const long cc[14] = {4, 1, 0, 0, 2, 2, 0, 0, 0, 0, 1, 2, 1, 0};
  sp.c.assign(kAmbientDim, CycElem(0));
  for (int k = 0; k < 14; ++k) sp.c[k] = th * CycElem(cc[k]);

  auto gl = gon_labels();
  sp.tau_prime_a = project_to_mirror(sp.tau, rt.roots[gl.a4[0]]);
  sp.tau_prime_b = project_to_mirror(sp.tau, rt.roots[gl.a4[1]]);
  sp.tau_prime_q = project_to_mirror(sp.tau, rt.roots[gl.gon[0]]);
  sp.rho_prime = project_to_mirror(sp.rho, rt.roots[gl.gon[0]]);

  auto expect = [](const RealQuad& got, long a, long b, const char* what) {
    if (got != RealQuad(Rat(a), Rat(b)))
      throw std::logic_error(std::string("special_points: unexpected ") + what);
  };
  expect(herm_norm(sp.p_inf), -3, 0, "p_inf norm");
  expect(herm_norm(sp.l_inf), -3, 0, "l_inf norm");
  expect(herm_norm(sp.tau), -6, -8, "tau norm");
  expect(herm_norm(sp.rho), -36, -24, "rho norm");
  expect(herm_norm(sp.c), -3, 0, "c norm");
  return sp;
}

AmbientVector sigma_point(const RootTable& rt, const Rat& t) {
  if (t.sign() <= 0 || t > Rat(1)) throw std::invalid_argument("sigma_point: need 0 < t <= 1");
  auto sp = special_points(rt);
  return vec_add(vec_scale(CycElem(Rat(1) - t), sp.rho), vec_scale(CycElem(t), sp.tau));
}

CBasis cbasis(const RootTable& rt) {
  CBasis cb;
  auto sp = special_points(rt);
  auto gl = gon_labels();
  cb.basis[0] = sp.c;
  cb.basis[1] = rt.roots[gl.gon[0]];
  int s[12] = {gl.a4[0], gl.a4[1], gl.a4[2], gl.a4[3],
               gl.gon[5], gl.gon[4], gl.gon[3], gl.gon[2],
               gl.gon[7], gl.gon[8], gl.gon[9], gl.gon[10]};
  for (int k = 0; k < 12; ++k) cb.basis[2 + k] = rt.roots[s[k]];

  cb.gram.assign(14, CycVec(14));
  for (int i = 0; i < 14; ++i)
    for (int j = 0; j < 14; ++j) cb.gram[i][j] = herm(cb.basis[i], cb.basis[j]);

  cb.to_standard.assign(kAmbientDim, CycVec(14));
  for (int j = 0; j < 14; ++j)
    for (std::size_t i = 0; i < kAmbientDim; ++i) cb.to_standard[i][j] = cb.basis[j][i];
  cb.to_cbasis = cyc_inverse(cb.to_standard);
  return cb;
}

std::optional<CCoords> cbasis_coords(const CBasis& cb, const AmbientVector& v) {
  CycVec x = cyc_mul_vec(cb.to_cbasis, v);
  CCoords out;
  const CycElem th = CycElem::theta();
  if (!cyc_to_eis(x[0] * th, out.a) || !cyc_to_eis(x[1] * th, out.b)) return std::nullopt;
  for (int k = 0; k < 4; ++k) {
    if (!cyc_to_eis(x[2 + k], out.v1[k])) return std::nullopt;
    if (!cyc_to_eis(x[6 + k], out.v2[k])) return std::nullopt;
    if (!cyc_to_eis(x[10 + k], out.v3[k])) return std::nullopt;
  }
  return out;
}

AmbientVector from_cbasis_coords(const CBasis& cb, const CCoords& c) {
  CycVec x(14);
  const CycElem th = CycElem::theta();
  x[0] = c.a.to_cyc() / th;
  x[1] = c.b.to_cyc() / th;
  for (int k = 0; k < 4; ++k) {
    x[2 + k] = c.v1[k].to_cyc();
    x[6 + k] = c.v2[k].to_cyc();
    x[10 + k] = c.v3[k].to_cyc();
  }
  return cyc_mul_vec(cb.to_standard, x);
}

// ---- collineations ----

namespace {

struct F3Plane {
  std::array<std::array<int, 3>, 13> point_vec, line_cov;

  static int normalize(std::array<int, 3>& v) {
    for (int& x : v) x = ((x % 3) + 3) % 3;
    for (int x : v)
      if (x) {
        if (x == 2)
          for (int& y : v) y = (2 * y) % 3;
        return 1;
      }
    return 0;
  }
};

int dot3(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  return (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % 3;
}

std::array<int, 3> cross3(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  std::array<int, 3> c = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                          a[0] * b[1] - a[1] * b[0]};
  F3Plane::normalize(c);
  return c;
}

bool collinear_abstract(int i, int j, int k) {  // 0-based point labels
  for (int line = 1; line <= 13; ++line) {
    if (IncidencePlane::is_incident(i + 1, line) && IncidencePlane::is_incident(j + 1, line) &&
        IncidencePlane::is_incident(k + 1, line))
      return true;
  }
  return false;
}

// Projective coordinatization of the difference-set labeling, found by
// backtracking; its existence certifies the labeling really is PG(2,3).
F3Plane coordinatize() {
  std::vector<std::array<int, 3>> classes;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        std::array<int, 3> v = {a, b, c};
        if (F3Plane::normalize(v) && std::find(classes.begin(), classes.end(), v) == classes.end())
          classes.push_back(v);
      }

  static bool col[13][13][13];
  for (int i = 0; i < 13; ++i)
    for (int j = 0; j < 13; ++j)
      for (int k = 0; k < 13; ++k)
        col[i][j][k] = (i != j && j != k && i != k) && collinear_abstract(i, j, k);

  std::array<int, 13> assign;
  assign.fill(-1);
  std::array<bool, 13> used{};
  std::function<bool(int)> rec = [&](int p) -> bool {
    if (p == 13) return true;
    for (int c = 0; c < 13; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int i = 0; i < p && ok; ++i)
        for (int j = i + 1; j < p && ok; ++j) {
          auto cr = cross3(classes[assign[i]], classes[assign[j]]);
          bool vec_col = dot3(cr, classes[c]) % 3 == 0;
          if (col[i][j][p] != vec_col) ok = false;
        }
      if (!ok) continue;
      assign[p] = c;
      used[c] = true;
      if (rec(p + 1)) return true;
      used[c] = false;
      assign[p] = -1;
    }
    return false;
  };
  if (!rec(0)) throw std::logic_error("coordinatize: labeling is not PG(2,3)");

  F3Plane pl;
  for (int i = 0; i < 13; ++i) pl.point_vec[i] = classes[assign[i]];
  for (int j = 0; j < 13; ++j) {
    auto pts = IncidencePlane::points_on_line(j + 1);
    auto cov = cross3(pl.point_vec[pts[0] - 1], pl.point_vec[pts[1] - 1]);
    for (int p : pts)
      if (dot3(cov, pl.point_vec[p - 1]) % 3 != 0)
        throw std::logic_error("coordinatize: inconsistent line covector");
    pl.line_cov[j] = cov;
  }
  return pl;
}

int lookup(const std::array<std::array<int, 3>, 13>& table, std::array<int, 3> v) {
  F3Plane::normalize(v);
  for (int i = 0; i < 13; ++i)
    if (table[i] == v) return i;
  throw std::logic_error("lookup: projective class not found");
}

using Mat3 = std::array<std::array<int, 3>, 3>;

int det3(const Mat3& M) {
  int d = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
          M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
          M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
  return ((d % 3) + 3) % 3;
}

Mat3 mat_inverse3(const Mat3& M) {
  int d = det3(M);
  if (d == 0) throw std::logic_error("mat_inverse3: singular");
  int dinv = (d == 1) ? 1 : 2;
  Mat3 A;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int a = M[(j + 1) % 3][(i + 1) % 3] * M[(j + 2) % 3][(i + 2) % 3] -
              M[(j + 1) % 3][(i + 2) % 3] * M[(j + 2) % 3][(i + 1) % 3];
      A[i][j] = (((a * dinv) % 3) + 3) % 3;
    }
  return A;
}

}  // namespace

Collineation Collineation::compose(const Collineation& then) const {
  Collineation r;
  r.swap = swap != then.swap;
  for (int i = 0; i < 13; ++i) {
    r.point_img[i] = swap ? then.line_img[point_img[i]] : then.point_img[point_img[i]];
    r.line_img[i] = swap ? then.point_img[line_img[i]] : then.line_img[line_img[i]];
  }
  return r;
}

bool Collineation::operator<(const Collineation& o) const {
  if (swap != o.swap) return swap < o.swap;
  if (point_img != o.point_img) return point_img < o.point_img;
  return line_img < o.line_img;
}

std::pair<int, int> apply_to_label(const Collineation& g, int label) {
  if (label < 13) {
    int img = g.point_img[label];
    return g.swap ? std::make_pair(13 + img, +1) : std::make_pair(img, +1);
  }
  int img = g.line_img[label - 13];
  return g.swap ? std::make_pair(img, -1) : std::make_pair(13 + img, +1);
}

CollineationGroup::CollineationGroup(const RootTable& rt) : rt_(&rt) {
  F3Plane pl = coordinatize();

  elements_.reserve(11232);
  Mat3 M;
  for (int code = 0; code < 19683; ++code) {
    int c = code;
    bool lead_seen = false, lead_one = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        M[i][j] = c % 3;
        c /= 3;
        if (!lead_seen && M[i][j]) {
          lead_seen = true;
          lead_one = (M[i][j] == 1);
        }
      }
    if (!lead_seen || !lead_one || det3(M) == 0) continue;
    Mat3 Ainv = mat_inverse3(M);
    Collineation g;
    g.swap = false;
    for (int i = 0; i < 13; ++i) {
      const auto& v = pl.point_vec[i];
      std::array<int, 3> img = {0, 0, 0};
      for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 3; ++k) img[r] += M[r][k] * v[k];
      g.point_img[i] = lookup(pl.point_vec, img);
      const auto& w = pl.line_cov[i];
      std::array<int, 3> wimg = {0, 0, 0};  // covectors transform by A^{-1} on the right
      for (int k = 0; k < 3; ++k)
        for (int r = 0; r < 3; ++r) wimg[k] += w[r] * Ainv[r][k];
      g.line_img[i] = lookup(pl.line_cov, wimg);
    }
    elements_.push_back(g);
  }
  if (elements_.size() != 5616) throw std::logic_error("CollineationGroup: PGL_3(3) size mismatch");

  Collineation delta;
  delta.swap = true;
  for (int i = 0; i < 13; ++i) {
    delta.point_img[i] = lookup(pl.line_cov, pl.point_vec[i]);
    delta.line_img[i] = lookup(pl.point_vec, pl.line_cov[i]);
  }
  std::size_t n = elements_.size();
  for (std::size_t k = 0; k < n; ++k) elements_.push_back(elements_[k].compose(delta));
  if (elements_.size() != 11232) throw std::logic_error("CollineationGroup: order mismatch");

  for (int k = 0; k < 13; ++k) basis_labels_[k] = k;
  basis_labels_[13] = 13;  // l_1
  CycMat B(kAmbientDim, CycVec(14));
  for (int j = 0; j < 14; ++j)
    for (std::size_t i = 0; i < kAmbientDim; ++i) B[i][j] = rt.roots[basis_labels_[j]][i];
  root_basis_inv_ = cyc_inverse(B);
}

CycMat CollineationGroup::lift(const Collineation& g) const {
  auto image_root = [&](int label) {
    auto [img, sign] = apply_to_label(g, label);
    AmbientVector v = rt_->roots[img];
    return sign < 0 ? vec_scale(CycElem(-1), v) : v;
  };
  CycMat img(kAmbientDim, CycVec(14));
  for (int j = 0; j < 14; ++j) {
    AmbientVector v = image_root(basis_labels_[j]);
    for (std::size_t i = 0; i < kAmbientDim; ++i) img[i][j] = v[i];
  }
  CycMat M = cyc_mul(img, root_basis_inv_);
  for (int label = 0; label < 26; ++label) {
    CycVec got = cyc_mul_vec(M, rt_->roots[label]);
    if (got != image_root(label))
      throw std::logic_error("collineation lift: image mismatch on a root");
  }
  for (int a = 0; a < 14; ++a) {
    CycVec va = cyc_mul_vec(M, rt_->roots[basis_labels_[a]]);
    for (int b = a; b < 14; ++b) {
      CycVec vb = cyc_mul_vec(M, rt_->roots[basis_labels_[b]]);
      if (herm(va, vb) != herm(rt_->roots[basis_labels_[a]], rt_->roots[basis_labels_[b]]))
        throw std::logic_error("collineation lift: form not preserved");
    }
  }
  return M;
}

std::vector<Collineation> CollineationGroup::gon_stabilizer() const {
  auto gl = gon_labels();
  std::set<int> gon_set(gl.gon.begin(), gl.gon.end());
  std::vector<Collineation> stab;
  for (const auto& g : elements_) {
    bool ok = true;
    for (int s : gl.gon) {
      auto [img, sign] = apply_to_label(g, s);
      (void)sign;
      if (!gon_set.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok) stab.push_back(g);
  }
  return stab;
}

}  // namespace eis
