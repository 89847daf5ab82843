#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eis/model.hpp"

#include <algorithm>
#include <set>

using namespace eis;

namespace {
const CycElem kTheta = CycElem::theta();
RealQuad rq(long a, long b) { return RealQuad(Rat(a), Rat(b)); }
CycElem real_cyc(long a, long b) { return CycElem(rq(a, b)); }
}  // namespace

TEST_CASE("incidence structure") {
  for (int p = 1; p <= 13; ++p) {
    int on = 0;
    for (int l = 1; l <= 13; ++l) on += IncidencePlane::is_incident(p, l);
    CHECK(on == 4);
  }
  auto pts = IncidencePlane::points_on_line(1);
  CHECK(std::set<int>(pts.begin(), pts.end()) == std::set<int>{1, 2, 4, 10});
}

TEST_CASE("root table invariants") {
  auto rt = build_roots();
  CHECK(herm(rt.p(2), rt.l(1)) == kTheta);
  CHECK(herm(rt.p(2), rt.l(2)) == kTheta);
  CHECK(herm(rt.p(3), rt.l(2)) == kTheta);
  CHECK(herm(rt.l(1), rt.l(1)) == CycElem(3));
  CHECK(herm(rt.p(5), rt.l(1)) == CycElem(0));
  for (int i = 1; i <= 13; ++i)
    for (int j = 1; j <= 13; ++j) {
      CHECK(herm(rt.p(i), rt.p(j)) == (i == j ? CycElem(3) : CycElem(0)));
      CHECK(herm(rt.l(i), rt.l(j)) == (i == j ? CycElem(3) : CycElem(0)));
      CycElem expect = IncidencePlane::is_incident(i, j) ? kTheta : CycElem(0);
      CHECK(herm(rt.p(i), rt.l(j)) == expect);
    }
}

TEST_CASE("special points and their pairings") {
  auto rt = build_roots();
  auto sp = special_points(rt);

  CHECK(herm_norm(sp.tau) == rq(-6, -8));
  CHECK(sp.tau == vec_add(sp.l_inf, vec_scale(CycElem::i(), sp.p_inf)));
  CHECK(sp.tau[0] == CycElem(rq(4, 1)));
  for (int i = 1; i <= 13; ++i) {
    CHECK(herm(sp.p_inf, rt.p(i)).is_zero());
    CHECK(herm(sp.l_inf, rt.l(i)).is_zero());
    CHECK(herm(sp.tau, rt.p(i)) == -kTheta);
    CHECK(herm(sp.tau, rt.l(i)) == CycElem(rq(0, -1)));  // -sqrt3
  }

  CHECK(herm_norm(sp.rho) == rq(-36, -24));
  CHECK(herm(sp.rho, sp.tau) == real_cyc(-36, -24));
  CHECK(herm_norm(sp.c) == rq(-3, 0));

  auto gl = gon_labels();
  // rho lies in the 9-ball: orthogonal to the A4 roots
  for (int x : gl.a4) CHECK(herm(sp.rho, rt.roots[x]).is_zero());
  // c is orthogonal to s_0 and to all three A4 blocks
  CHECK(herm(sp.c, rt.roots[gl.gon[0]]).is_zero());
  for (int k : {2, 3, 4, 5, 7, 8, 9, 10}) CHECK(herm(sp.c, rt.roots[gl.gon[k]]).is_zero());
  for (int x : gl.a4) CHECK(herm(sp.c, rt.roots[x]).is_zero());
  // (s_0 + c)/theta is a lattice vector
  std::vector<CycVec> gens(rt.roots.begin(), rt.roots.end());
  EisSpan L(gens);
  AmbientVector s0c = vec_scale(kTheta.inverse(), vec_add(rt.roots[gl.gon[0]], sp.c));
  CHECK(L.contains(s0c));
  CHECK(L.contains(sp.c));

  // projections tau' and rho'
  CHECK(sp.tau_prime_a ==
        vec_add(sp.tau, vec_scale(CycElem::sqrt3().inverse(), rt.roots[gl.a4[0]])));
  for (const AmbientVector* tp : {&sp.tau_prime_a, &sp.tau_prime_b, &sp.tau_prime_q}) {
    CHECK(herm_norm(*tp) == rq(-7, -8));
    CHECK(herm(*tp, sp.tau) == real_cyc(-7, -8));
  }
  CHECK(herm(sp.tau_prime_a, sp.rho) == real_cyc(-36, -24));
  CHECK(herm(sp.tau_prime_b, sp.rho) == real_cyc(-36, -24));
  CHECK(herm(sp.tau_prime_q, sp.rho) == real_cyc(-37, -24));
  CHECK(herm_norm(sp.rho_prime) == rq(-37, -24));
  CHECK(herm(sp.rho_prime, sp.rho) == real_cyc(-37, -24));
  CHECK(herm(sp.rho_prime, sp.tau) == real_cyc(-37, -24));
  CHECK(herm(sp.rho_prime, sp.tau_prime_q) == real_cyc(-37, -24));

  // projecting a root to its own mirror kills it
  auto z = project_to_mirror(rt.roots[gl.a4[1]], rt.roots[gl.a4[1]]);
  CHECK(herm_norm(z).is_zero());
  for (const auto& x : z) CHECK(x.is_zero());
}

TEST_CASE("twelve-gon and A4 pairings") {
  auto rt = build_roots();
  auto gl = gon_labels();
  for (int i = 0; i < 12; ++i) {
    for (int x : gl.a4) CHECK(herm(rt.roots[gl.gon[i]], rt.roots[x]).is_zero());
    for (int j = 0; j < 12; ++j) {
      CycElem prod = herm(rt.roots[gl.gon[i]], rt.roots[gl.gon[j]]);
      int d = (j - i + 12) % 12;
      if (d == 0) CHECK(prod == CycElem(3));
      else if (d == 1 || d == 11) CHECK((prod == kTheta || prod == kTheta.conj()));
      else CHECK(prod.is_zero());
    }
  }
  // Gram of s_0..s_11 has rank 10 (the 9-ball lattice plus radical of rank 2)
  CycMat G(12, CycVec(12));
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) G[i][j] = herm(rt.roots[gl.gon[i]], rt.roots[gl.gon[j]]);
  auto rr = rank_and_radical(HermitianGram(G));
  CHECK(rr.rank == 10);
  CHECK(rr.radical.size() == 2);
  // A4 chain braids: <s_A,s_B> nonzero etc.
  CHECK(herm(rt.roots[gl.a4[1]], rt.roots[gl.a4[0]]) == kTheta);
  CHECK(herm(rt.roots[gl.a4[1]], rt.roots[gl.a4[2]]) == kTheta);
  CHECK(herm(rt.roots[gl.a4[3]], rt.roots[gl.a4[2]]) == kTheta);
  CHECK(herm(rt.roots[gl.a4[3]], rt.roots[gl.a4[0]]).is_zero());
}

TEST_CASE("projection of tau to the A4 block and rho") {
  auto rt = build_roots();
  auto sp = special_points(rt);
  AmbientVector proj = project_to_a4_block(rt, sp.tau);
  // the displayed combination -(3+2sqrt3)(l1 + i p3) - (5+3sqrt3)(l2 + i p2)
  auto ip = [&](const AmbientVector& v) { return vec_scale(CycElem::i(), v); };
  AmbientVector disp = vec_add(
      vec_scale(CycElem(rq(-3, -2)), vec_add(rt.l(1), ip(rt.p(3)))),
      vec_scale(CycElem(rq(-5, -3)), vec_add(rt.l(2), ip(rt.p(2)))));
  CHECK(proj == disp);
  CHECK(vec_sub(sp.tau, proj) == sp.rho);
}

TEST_CASE("square-bracket basis") {
  auto rt = build_roots();
  auto cb = cbasis(rt);

  // Gram: (-3) + (3) + three identical A4 blocks
  CycMat expect(14, CycVec(14));
  expect[0][0] = CycElem(-3);
  expect[1][1] = CycElem(3);
  const CycElem th = kTheta, thb = kTheta.conj();
  CycElem block[4][4] = {{CycElem(3), thb, CycElem(0), CycElem(0)},
                         {th, CycElem(3), th, CycElem(0)},
                         {CycElem(0), thb, CycElem(3), thb},
                         {CycElem(0), CycElem(0), th, CycElem(3)}};
  for (int b = 0; b < 3; ++b)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) expect[2 + 4 * b + i][2 + 4 * b + j] = block[i][j];
  CHECK(cyc_equal(cb.gram, expect));

  // conversions are mutually inverse
  CHECK(cyc_equal(cyc_mul(cb.to_standard, cb.to_cbasis), cyc_identity(14)));

  // every one of the 26 roots satisfies the membership shape: a = b mod theta
  for (int label = 0; label < 26; ++label) {
    auto cc = cbasis_coords(cb, rt.roots[label]);
    REQUIRE(cc.has_value());
    CHECK(eis_congruent_mod_theta(cc->a, cc->b));
    CHECK(from_cbasis_coords(cb, *cc) == rt.roots[label]);
  }
  // and a vector violating the shape is rejected: p_1/theta has a = 1, b = 0
  AmbientVector bad = vec_scale(kTheta.inverse(), rt.p(1));
  auto bc = cbasis_coords(cb, bad);
  if (bc) CHECK(!eis_congruent_mod_theta(bc->a, bc->b));

  // two-sided span containment: the characterized lattice equals the span
  // of the 26 roots
  std::vector<CycVec> root_gens(rt.roots.begin(), rt.roots.end());
  EisSpan L(root_gens);
  auto sp = special_points(rt);
  std::vector<CycVec> char_gens;
  char_gens.push_back(vec_scale(th.inverse(), vec_add(sp.c, rt.roots[gon_labels().gon[0]])));
  char_gens.push_back(sp.c);
  for (int k = 0; k < 12; ++k) char_gens.push_back(cb.basis[2 + k]);
  for (const auto& gvec : char_gens) CHECK(L.contains(gvec));
  EisSpan M(char_gens);
  for (int label = 0; label < 26; ++label) CHECK(M.contains(rt.roots[label]));
}

TEST_CASE("sigma points on the segment") {
  auto rt = build_roots();
  auto sp = special_points(rt);
  CHECK(sigma_point(rt, Rat(1)) == sp.tau);
  CHECK_THROWS_AS(sigma_point(rt, Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(sigma_point(rt, Rat(5, 4)), std::invalid_argument);
  auto s = sigma_point(rt, Rat(1, 4));
  CHECK(herm_norm(s).sign() < 0);
  CycElem sr = herm(s, sp.rho);
  CHECK(sr.is_real());
  CHECK(sr.re.sign() < 0);
}

TEST_CASE("collineation group and gon stabilizer") {
  auto rt = build_roots();
  CollineationGroup G(rt);
  CHECK(G.elements().size() == 11232);

  // the subscript shift is incidence-preserving and belongs to the group
  Collineation shift;
  shift.swap = false;
  for (int i = 0; i < 13; ++i) {
    shift.point_img[i] = (i + 1) % 13;
    shift.line_img[i] = (i + 1) % 13;
  }
  CHECK(std::find(G.elements().begin(), G.elements().end(), shift) != G.elements().end());

  // lift of the shift exists and fixes tau exactly (it permutes coordinates)
  auto sp = special_points(rt);
  CycMat Ms = G.lift(shift);
  CHECK(cyc_mul_vec(Ms, sp.tau) == sp.tau);

  // some duality lift: pick any swapping element and check tau is fixed
  // projectively
  const Collineation* dual = nullptr;
  for (const auto& g : G.elements())
    if (g.swap) {
      dual = &g;
      break;
    }
  REQUIRE(dual != nullptr);
  CycMat Md = G.lift(*dual);
  CycVec mt = cyc_mul_vec(Md, sp.tau);
  // proportional to tau: cross products of coordinates vanish
  for (std::size_t k = 0; k < kAmbientDim; ++k) CHECK(mt[k] * sp.tau[0] == mt[0] * sp.tau[k]);

  auto stab = G.gon_stabilizer();
  CHECK(stab.size() == 24);

  auto gl = gon_labels();
  std::map<int, int> pos;
  for (int k = 0; k < 12; ++k) pos[gl.gon[k]] = k;
  std::set<int> a4set(gl.a4.begin(), gl.a4.end());
  std::set<int> images_of_0;
  int half_swapping_a4 = 0;
  for (const auto& g : stab) {
    // action on the twelve mirrors is by a dihedral symmetry k -> +-k + c
    std::array<int, 12> act;
    for (int k = 0; k < 12; ++k) act[k] = pos.at(apply_to_label(g, gl.gon[k]).first);
    int d1 = (act[1] - act[0] + 12) % 12;
    CHECK((d1 == 1 || d1 == 11));
    for (int k = 0; k < 12; ++k) CHECK((act[(k + 1) % 12] - act[k] + 12) % 12 == d1);
    images_of_0.insert(act[0]);
    // A4 block preserved as a mirror set; count the sA<->sD exchanges
    std::set<int> a4img;
    for (int x : gl.a4) a4img.insert(apply_to_label(g, x).first);
    CHECK(a4img == a4set);
    int imgA = apply_to_label(g, gl.a4[0]).first;
    if (imgA == gl.a4[3]) {
      CHECK(apply_to_label(g, gl.a4[1]).first == gl.a4[2]);
      CHECK(apply_to_label(g, gl.a4[2]).first == gl.a4[1]);
      CHECK(apply_to_label(g, gl.a4[3]).first == gl.a4[0]);
      ++half_swapping_a4;
    } else {
      CHECK(imgA == gl.a4[0]);
    }
    // lift fixes rho projectively
    CycMat M = G.lift(g);
    CycVec mr = cyc_mul_vec(M, sp.rho);
    for (std::size_t k = 0; k < kAmbientDim; ++k) CHECK(mr[k] * sp.rho[0] == mr[0] * sp.rho[k]);
  }
  CHECK(images_of_0.size() == 12);  // transitive on the twelve mirrors
  CHECK(half_swapping_a4 == 12);

  // faithfulness: distinct stabilizer elements act differently on the gon
  std::set<std::array<int, 12>> actions;
  for (const auto& g : stab) {
    std::array<int, 12> act;
    for (int k = 0; k < 12; ++k) act[k] = pos.at(apply_to_label(g, gl.gon[k]).first);
    actions.insert(act);
  }
  CHECK(actions.size() == 24);
}
