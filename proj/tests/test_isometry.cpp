#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eis/isometry.hpp"

#include <set>

using namespace eis;

namespace {
const CycElem kExpPi3 = CycElem::zeta12() * CycElem::zeta12();  // e^{i pi/3} = (1 + i sqrt3)/2
const CycElem kExpPi6 = CycElem::zeta12();                      // e^{i pi/6} = (sqrt3 + i)/2

ReflContext& ctx() {
  static ReflContext c;
  return c;
}
}  // namespace

TEST_CASE("triflection basics") {
  auto& c = ctx();
  const AmbientVector& s = c.a4_root(0);
  Isometry S = triflection(s);
  CHECK(S.apply(s) == vec_scale(CycElem::omega(), s));
  // fixes the orthogonal complement pointwise
  const AmbientVector& t = c.gon_root(0);
  REQUIRE(herm(t, s).is_zero());
  CHECK(S.apply(t) == t);
  CHECK(iso_equal(iso_pow(S, 3), iso_identity()));
  CHECK_THROWS_AS(triflection(c.special().tau), std::invalid_argument);
  // triflection depends only on the scalar class of the root
  CHECK(iso_equal(triflection(vec_scale(-CycElem::omega(), s)), S));
}

TEST_CASE("isometry constructor rejects non-isometries") {
  CycMat half = cyc_identity(kAmbientDim);
  half[3][3] = CycElem(Rat(1, 2));
  auto make = [&] { return Isometry(half); };
  CHECK_THROWS_AS(make(), std::invalid_argument);
}

TEST_CASE("triflections preserve the lattice") {
  auto& c = ctx();
  std::vector<CycVec> gens(c.roots().roots.begin(), c.roots().roots.end());
  EisSpan L(gens);
  for (int label = 0; label < 26; ++label)
    CHECK(preserves_lattice(L, c.roots(), triflection(c.roots().roots[label])));
}

TEST_CASE("word parsing and evaluation") {
  auto& c = ctx();
  CHECK(iso_equal(c.eval(""), iso_identity()));
  CHECK(iso_equal(c.eval("S0 S0 S0"), iso_identity()));
  CHECK(iso_equal(c.eval("S0^2"), iso_mul(c.gon(0), c.gon(0))));
  CHECK(iso_equal(c.eval("S0^-1"), iso_inverse(c.gon(0))));
  CHECK(iso_equal(c.eval("SA SB"), iso_mul(c.a4(0), c.a4(1))));
  CHECK(iso_equal(c.eval("Delta(SA,SB,SC,SD)"), c.delta_a4()));
  CHECK(iso_equal(c.eval("Delta(S1,S2,S3,S4,S5,S6,S7,S8,S9,S10,S11)"), c.delta_gon11()));
  CHECK(iso_equal(c.eval("Delta(SA,SB,SC,SD)^-1"), iso_inverse(c.delta_a4())));
  CHECK_THROWS_AS(parse_word("S15x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("Delta(S1"), std::invalid_argument);
  // concatenation identity: S1..S11 . S11..S1 = S1..S10 S11^2 S10..S1
  Isometry lhs = iso_mul(c.increasing_product(1), c.decreasing_product(11));
  Isometry rhs = c.eval("S1 S2 S3 S4 S5 S6 S7 S8 S9 S10 S11^2 S10 S9 S8 S7 S6 S5 S4 S3 S2 S1");
  CHECK(iso_equal(lhs, rhs));
}

TEST_CASE("increasing and decreasing products are j-independent as matrices") {
  auto& c = ctx();
  Isometry I = c.increasing_product(0), D = c.decreasing_product(0);
  for (int j = 1; j < 12; ++j) {
    CHECK(iso_equal(c.increasing_product(j), I));
    CHECK(iso_equal(c.decreasing_product(j), D));
  }
  auto pi = plane_action(c, I);
  auto pd = plane_action(c, D);
  auto pdel = plane_action(c, c.delta_a4());
  REQUIRE(pi.has_value());
  REQUIRE(pd.has_value());
  REQUIRE(pdel.has_value());
  CHECK(pi->ratio() == kExpPi6);
  CHECK(pd->ratio() == kExpPi6);
  CHECK(pdel->ratio() == kExpPi6);
}

TEST_CASE("scalar identity on the 9-ball lattice and its complement") {
  auto& c = ctx();
  Isometry W = iso_mul(c.increasing_product(1), c.decreasing_product(11));
  Isometry M1 = iso_scale(kExpPi3, W);
  Isometry M2 = iso_mul(c.delta_a4(), c.delta_a4());
  CHECK(iso_equal(M1, M2));
  for (int i = 0; i < 12; ++i) CHECK(M2.apply(c.gon_root(i)) == c.gon_root(i));
  for (int k = 0; k < 4; ++k) CHECK(M2.apply(c.a4_root(k)) == vec_scale(kExpPi3, c.a4_root(k)));
  // sixth powers of the increasing and decreasing products agree exactly
  CHECK(iso_equal(iso_pow(c.increasing_product(1), 6), iso_pow(c.decreasing_product(11), 6)));
  // pi rotation for the long fundamental element
  auto p11 = plane_action(c, c.delta_gon11());
  REQUIRE(p11.has_value());
  CHECK(p11->ratio() == CycElem(-1));
}

TEST_CASE("basepoint stabilizer words generate a dihedral group of order 24") {
  auto& c = ctx();
  Isometry g1 = iso_mul(c.increasing_product(1), iso_inverse(c.delta_a4()));
  Isometry g2 = iso_mul(iso_pow(c.increasing_product(1), 6), iso_inverse(c.delta_gon11()));
  CHECK(order_mod_scalars(g1) == 12);
  CHECK(order_mod_scalars(g2) == 2);
  // conjugation by g2 inverts g1 modulo scalars
  Isometry conj = iso_mul(iso_mul(g2, g1), iso_inverse(g2));
  CHECK(scalar_of(iso_mul(conj, g1)).has_value());
  // both act as a single scalar on the span of rho and tau
  const auto& sp = c.special();
  for (const Isometry* g : {&g1, &g2}) {
    AmbientVector gr = g->apply(sp.rho), gt = g->apply(sp.tau);
    CycElem lam(0);
    for (std::size_t k = 0; k < kAmbientDim && lam.is_zero(); ++k)
      if (!sp.rho[k].is_zero()) lam = gr[k] / sp.rho[k];
    CHECK(gr == vec_scale(lam, sp.rho));
    CHECK(gt == vec_scale(lam, sp.tau));
  }
  // closure modulo scalars has order 24
  auto canon = [](const Isometry& w) {
    CycElem lead(0);
    for (std::size_t i = 0; i < kAmbientDim && lead.is_zero(); ++i)
      for (std::size_t j = 0; j < kAmbientDim && lead.is_zero(); ++j)
        if (!w.m[i][j].is_zero()) lead = w.m[i][j];
    return cyc_scale(lead.inverse(), w.m);
  };
  std::vector<CycMat> seen;
  auto add = [&](const CycMat& m) {
    for (const auto& s : seen)
      if (cyc_equal(s, m)) return false;
    seen.push_back(m);
    return true;
  };
  std::vector<Isometry> frontier = {iso_identity()};
  add(canon(iso_identity()));
  while (!frontier.empty()) {
    std::vector<Isometry> next;
    for (const auto& w : frontier)
      for (const Isometry* g : {&g1, &g2}) {
        Isometry prod = iso_mul(w, *g);
        if (add(canon(prod))) next.push_back(prod);
      }
    frontier = std::move(next);
  }
  CHECK(seen.size() == 24);
}

TEST_CASE("conjugation tables for the two stabilizer words") {
  auto& c = ctx();
  Isometry W1 = iso_mul(c.increasing_product(1), iso_inverse(c.delta_a4()));
  Isometry W1i = iso_inverse(W1);
  for (int j = 0; j < 12; ++j)
    CHECK(iso_equal(iso_mul(iso_mul(W1, c.gon(j)), W1i), c.gon(j + 1)));
  CHECK(iso_equal(iso_mul(iso_mul(W1, c.a4(0)), W1i), c.a4(3)));
  CHECK(iso_equal(iso_mul(iso_mul(W1, c.a4(3)), W1i), c.a4(0)));
  CHECK(iso_equal(iso_mul(iso_mul(W1, c.a4(1)), W1i), c.a4(2)));
  CHECK(iso_equal(iso_mul(iso_mul(W1, c.a4(2)), W1i), c.a4(1)));

  Isometry W2 = iso_mul(iso_pow(c.increasing_product(1), 6), iso_inverse(c.delta_gon11()));
  Isometry W2i = iso_inverse(W2);
  for (int j = 0; j < 12; ++j)
    CHECK(iso_equal(iso_mul(iso_mul(W2, c.gon(j)), W2i), c.gon(6 - j)));
  for (int k = 0; k < 4; ++k)
    CHECK(iso_equal(iso_mul(iso_mul(W2, c.a4(k)), W2i), c.a4(k)));
}

TEST_CASE("braid and commutation relations follow the diagram") {
  auto& c = ctx();
  CHECK(braid_relation_holds(c.gon_root(0), c.gon_root(2)));   // orthogonal: commute
  CHECK(braid_relation_holds(c.gon_root(0), c.gon_root(1)));   // adjacent: braid
  CHECK(braid_relation_holds(c.gon_root(0), c.a4_root(0)));    // gon vs A4: commute
  CHECK(braid_relation_holds(c.a4_root(0), c.a4_root(1)));     // chain: braid
  CHECK_THROWS_AS(braid_relation_holds(c.roots().p(1), vec_scale(CycElem(2), c.roots().p(2))),
                  std::invalid_argument);
}

TEST_CASE("plane action composes and refuses") {
  auto& c = ctx();
  auto pid = plane_action(c, iso_identity());
  REQUIRE(pid.has_value());
  CHECK(pid->ratio() == CycElem(1));
  // a single gon reflection moves rho's line, so it must refuse
  CHECK(!plane_action(c, c.gon(0)).has_value());
  Isometry I = c.increasing_product(0);
  auto p1 = plane_action(c, I);
  auto p2 = plane_action(c, iso_mul(I, I));
  REQUIRE(p1.has_value());
  REQUIRE(p2.has_value());
  CHECK(p2->ratio() == p1->ratio() * p1->ratio());
}
