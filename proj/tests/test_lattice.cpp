#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eis/lattice.hpp"

#include <set>

using namespace eis;

namespace {

DirectedGraph a4_path() {
  DirectedGraph g;
  g.nodes = 4;
  g.edges = {{0, 1}, {1, 2}, {2, 3}};
  return g;
}

DirectedGraph a4_alternating() {
  DirectedGraph g;
  g.nodes = 4;
  g.edges = {{0, 1}, {2, 1}, {2, 3}};
  return g;
}

// 13 points, 13 lines; line j contains points j, j+1, j+3, j+9 (mod 13).
// Nodes 0..12 are points, 13..25 lines; edges run line -> point.
DirectedGraph incidence_graph() {
  DirectedGraph g;
  g.nodes = 26;
  for (int j = 0; j < 13; ++j)
    for (int d : {0, 1, 3, 9}) g.edges.push_back({13 + j, (j + d) % 13});
  return g;
}

DirectedGraph twelve_gon_alternating() {
  DirectedGraph g;
  g.nodes = 12;
  for (int k = 0; k < 12; k += 2) {
    g.edges.push_back({k, (k + 1) % 12});
    g.edges.push_back({(k + 2) % 12, (k + 1) % 12});
  }
  return g;
}

GramLattice hyperbolic_cell() {
  CycMat g(2, CycVec(2));
  g[0][1] = CycElem::theta();
  g[1][0] = CycElem::theta().conj();
  return GramLattice(HermitianGram(g));
}

GramLattice l4() { return GramLattice(gram_from_graph(a4_path())); }

}  // namespace

TEST_CASE("graph validation") {
  DirectedGraph bad;
  bad.nodes = 2;
  bad.edges = {{0, 0}};
  CHECK_THROWS_AS(gram_from_graph(bad), std::invalid_argument);
  bad.edges = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(gram_from_graph(bad), std::invalid_argument);
  DirectedGraph single;
  single.nodes = 1;
  auto G = gram_from_graph(single);
  CHECK(G.size() == 1);
  CHECK(G.at(0, 0) == CycElem(3));
}

TEST_CASE("a4 gram shape") {
  auto G = gram_from_graph(a4_path());
  CHECK(G.at(0, 0) == CycElem(3));
  CHECK(G.at(1, 0) == CycElem::theta());
  CHECK(G.at(0, 1) == CycElem::theta().conj());
  CHECK(G.at(0, 2) == CycElem(0));
  CHECK(signature(G).positive == 4);
  CHECK(signature(G).negative == 0);
}

TEST_CASE("incidence graph lattice has rank 14, radical 12") {
  auto G = gram_from_graph(incidence_graph());
  auto rr = rank_and_radical(G);
  CHECK(rr.rank == 14);
  CHECK(rr.radical.size() == 12);
  for (const auto& v : rr.radical) {
    CycVec gv = cyc_mul_vec(G.g, v);
    for (const auto& x : gv) CHECK(x.is_zero());
  }
  auto sig = signature(G);
  CHECK(sig.positive == 13);
  CHECK(sig.negative == 1);
  CHECK(sig.zero == 12);
}

TEST_CASE("alternating 12-gon lattice has nullity 2") {
  auto rr = rank_and_radical(gram_from_graph(twelve_gon_alternating()));
  CHECK(rr.rank == 10);
  CHECK(rr.radical.size() == 2);
  auto sig = signature(gram_from_graph(twelve_gon_alternating()));
  CHECK(sig.positive == 9);
  CHECK(sig.negative == 1);
  CHECK(sig.zero == 2);
}

TEST_CASE("real form of L4 is even unimodular of rank 8") {
  for (auto graph : {a4_path(), a4_alternating()}) {
    IntMat B = real_form(GramLattice(gram_from_graph(graph)));
    REQUIRE(B.size() == 8);
    Int d = int_det(B);
    CHECK((d == 1 || d == -1));
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(B[i][i] % 2 == 0);
      for (std::size_t j = 0; j < 8; ++j) CHECK(B[i][j] == B[j][i]);
    }
  }
}

TEST_CASE("real form of rank-1 norm-3 lattice is A2") {
  CycMat g(1, CycVec(1, CycElem(3)));
  IntMat B = real_form(GramLattice(HermitianGram(g)));
  CHECK(B[0][0] == 2);
  CHECK(B[0][1] == -1);
  CHECK(B[1][0] == -1);
  CHECK(B[1][1] == 2);
  CHECK(int_det(B) == 3);
}

TEST_CASE("hyperbolic cell real form") {
  IntMat B = real_form(hyperbolic_cell());
  Int d = int_det(B);
  CHECK((d == 1 || d == -1));
  CycMat M(4, CycVec(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) M[i][j] = CycElem(Rat(B[i][j]));
  auto sig = signature(HermitianGram(M));
  CHECK(sig.positive == 2);
  CHECK(sig.negative == 2);
}

TEST_CASE("theta duality") {
  CHECK(theta_dual_equals_self(l4()));
  CHECK(theta_dual_equals_self(hyperbolic_cell()));

  CycMat g3(2, CycVec(2));
  g3[0][0] = CycElem(3);
  g3[1][1] = CycElem(3);
  CHECK(!theta_dual_equals_self(GramLattice(HermitianGram(g3))));

  // hyperbolic cell + three copies of L4
  CycMat big(14, CycVec(14));
  auto cell = hyperbolic_cell().gram.g;
  auto a4 = gram_from_graph(a4_path()).g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) big[i][j] = cell[i][j];
  for (int b = 0; b < 3; ++b)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) big[2 + 4 * b + i][2 + 4 * b + j] = a4[i][j];
  GramLattice L{HermitianGram(big)};
  CHECK(theta_dual_equals_self(L));
  auto sig = signature(L.gram);
  CHECK(sig.positive == 13);
  CHECK(sig.negative == 1);
  CHECK(sig.zero == 0);

  CycMat degen(2, CycVec(2));
  degen[0][0] = CycElem(3);
  CHECK_THROWS_AS(theta_dual_equals_self(GramLattice(HermitianGram(degen))),
                  std::invalid_argument);
}

TEST_CASE("L4 vector counts by norm") {
  auto L = l4();
  CHECK(enumerate_by_norm(L, Rat(1)).empty());
  CHECK(enumerate_by_norm(L, Rat(2)).empty());
  auto roots = enumerate_by_norm(L, Rat(3));
  CHECK(roots.size() == 240);
  auto norm6 = enumerate_by_norm(L, Rat(6));
  CHECK(norm6.size() == 2160);
  CHECK(enumerate_by_norm(L, Rat(0)).size() == 1);

  // closed under units and negation, sorted canonically, norms exact
  std::set<EisVector, bool (*)(const EisVector&, const EisVector&)> seen(eis_vector_less);
  for (const auto& v : roots) seen.insert(v);
  const EisInt w = EisInt::omega();
  for (const auto& v : roots) {
    EisVector wv(v.size()), neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      wv[i] = w * v[i];
      neg[i] = -v[i];
    }
    CHECK(seen.count(wv) == 1);
    CHECK(seen.count(neg) == 1);
  }
  CHECK(roots.size() % 6 == 0);
  for (std::size_t k = 1; k < roots.size(); ++k) CHECK(eis_vector_less(roots[k - 1], roots[k]));

  // recompute the hermitian norm of a few vectors against the Gram
  const auto& G = L.gram.g;
  for (std::size_t k = 0; k < roots.size(); k += 37) {
    CycVec v = eis_to_cyc_vec(roots[k]);
    CycElem n(0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) n += v[i] * G[i][j] * v[j].conj();
    CHECK(n == CycElem(3));
  }

  CHECK_THROWS_AS(enumerate_by_norm(L, Rat(-1)), std::invalid_argument);
  CycMat lor(2, CycVec(2));
  lor[0][0] = CycElem(-3);
  lor[1][1] = CycElem(3);
  CHECK_THROWS_AS(enumerate_by_norm(GramLattice(HermitianGram(lor)), Rat(3)),
                  std::invalid_argument);
}

TEST_CASE("span membership with witnesses") {
  const CycElem th = CycElem::theta();
  std::vector<CycVec> gens = {{th, CycElem(0)}, {CycElem(0), th}};
  EisSpan span(gens);
  CHECK(span.zrank() == 4);

  auto c = span.membership(gens[0]);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == EisInt{1, 0});
  CHECK((*c)[1] == EisInt{0, 0});

  CycVec v = {CycElem::omega() * th, th};
  auto cv = span.membership(v);
  REQUIRE(cv.has_value());
  CHECK((*cv)[0] == EisInt::omega());
  CHECK((*cv)[1] == EisInt{1, 0});

  // a vector outside the span, with theta-denominated entries allowed; the
  // residual certificate is the nonzero reduced remainder
  IntVec residual;
  CHECK(!span.membership({CycElem(1), CycElem(0)}, &residual).has_value());
  bool nonzero = false;
  for (const auto& x : residual) nonzero = nonzero || sgn(x) != 0;
  CHECK(nonzero);
  CHECK(span.membership(gens[1], &residual).has_value());
  for (const auto& x : residual) CHECK(sgn(x) == 0);
  CHECK_THROWS_AS(span.membership({CycElem(1)}), std::invalid_argument);
}
