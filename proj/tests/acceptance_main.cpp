// Acceptance runner: executes every recorded acceptance criterion at its
// stated tolerance and prints one pass/fail line per criterion.  Exit status
// is zero only if all criteria hold.

#include "eis/suites.hpp"

#include <chrono>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <thread>

using namespace eis;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void line(int criterion, const std::string& what, bool pass, const std::string& note = "") {
  std::cout << "criterion " << criterion << (pass ? ": PASS  " : ": FAIL  ") << what;
  if (!note.empty()) std::cout << "  [" << note << "]";
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

double secs(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

bool driver_pass(const DriverReport& d, std::string& detail) {
  for (const auto& c : d.checks)
    if (!c.pass) {
      detail = c.id + (c.detail.empty() ? "" : (": " + c.detail));
      return false;
    }
  return true;
}

}  // namespace

int main() {
  std::filesystem::path cache_dir = ".eisverify-cache";
  if (const char* env = std::getenv("EISVERIFY_CACHE_DIR")) cache_dir = env;
  const int threads = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t seed = 20240901;

  GeoContext g;

  // 1. batch table row counts at the recorded values, total, under 2 minutes
  {
    auto t0 = Clock::now();
    std::vector<long> counts = enumerate_center_table(g, 3, [](const RootVec&, int, int) {});
    double el = secs(t0, Clock::now());
    const auto& rows = center_table_rows();
    bool rows_ok = true;
    std::string detail;
    long total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      total += counts[i];
      if (counts[i] != rows[i].expected_mirrors) {
        rows_ok = false;
        detail += "row " + std::to_string(i) + " computed " + std::to_string(counts[i]) +
                  " recorded " + std::to_string(rows[i].expected_mirrors) + "; ";
      }
    }
    bool total_ok = total == 712930;
    if (!total_ok) detail += "total computed " + std::to_string(total) + " recorded 712930; ";
    bool time_ok = el < 120.0;
    line(1, "batch table row counts and total", rows_ok && total_ok && time_ok,
         detail + "elapsed " + std::to_string(el) + "s");
  }

  // cached enumerations shared by several criteria
  auto around_c = batches_cached(g, "c", 3, false, cache_dir);
  auto around_c_gen = batches_cached(g, "c-gen", 3, true, cache_dir);
  auto around_p = batches_cached(g, "pinf", 3, true, cache_dir);

  // 2. the generic enumeration reproduces the identical class sets, batch by batch
  {
    bool agree = around_c.size() == around_c_gen.size();
    std::string note;
    for (std::size_t b = 0; b < around_c.size() && agree; ++b) {
      agree = around_c[b].classes == around_c_gen[b].classes;
      note += std::to_string(around_c[b].classes.size()) + (b + 1 < around_c.size() ? "/" : "");
    }
    line(2, "independent enumerations agree batch by batch", agree, note);
  }

  // 3. block lattice counts under 5 seconds
  {
    auto t0 = Clock::now();
    CycMat block(4, CycVec(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) block[i][j] = g.cb.gram[2 + i][2 + j];
    GramLattice l4{HermitianGram(block)};
    auto n3 = enumerate_by_norm(l4, Rat(3));
    auto n6 = enumerate_by_norm(l4, Rat(6));
    double el = secs(t0, Clock::now());
    line(3, "240 norm-3 and 2160 norm-6 block vectors",
         n3.size() == 240 && n6.size() == 2160 && el < 5.0,
         std::to_string(n3.size()) + "/" + std::to_string(n6.size()) + ", " +
             std::to_string(el) + "s");
  }

  // 4. the twelve covering distances, exactly, each radicand below 10/3
  {
    std::string detail;
    bool ok = driver_pass(verify_covering_distances(g), detail);
    line(4, "covering distance closed forms and radicand bound", ok, detail);
  }

  // 5. polygon classification against every enumerated mirror, under 10 minutes
  {
    auto t0 = Clock::now();
    std::string detail;
    bool ok = driver_pass(verify_polygon_classification(g, around_c, around_p, threads), detail);
    double el = secs(t0, Clock::now());
    line(5, "polygon-mirror classification pattern", ok && el < 600.0,
         detail + "elapsed " + std::to_string(el) + "s");
  }

  // 6. nearest mirrors to the projection point
  {
    std::string detail;
    bool ok = driver_pass(verify_nearest_to_rho(g, around_c, threads), detail);
    line(6, "minimum mirror distance at the projection point", ok, detail);
  }

  // 7. nearest mirrors to the symmetry point
  {
    std::string detail;
    bool ok = driver_pass(verify_nearest_to_tau(g, around_p), detail);
    line(7, "the 26 point- and line-mirrors are strictly nearest the basepoint", ok, detail);
  }

  // 8. reflection word identities
  {
    ReflContext c;
    const CycElem exp_pi3 = CycElem::zeta12() * CycElem::zeta12();
    Isometry I = c.increasing_product(0), D = c.decreasing_product(0);
    bool ok = true;
    for (int j = 1; j < 12; ++j)
      ok = ok && iso_equal(c.increasing_product(j), I) && iso_equal(c.decreasing_product(j), D);
    auto pi = plane_action(c, I), pd = plane_action(c, D), pdel = plane_action(c, c.delta_a4());
    ok = ok && pi && pd && pdel && pi->ratio() == CycElem::zeta12() &&
         pd->ratio() == CycElem::zeta12() && pdel->ratio() == CycElem::zeta12();
    auto p11 = plane_action(c, c.delta_gon11());
    ok = ok && p11 && p11->ratio() == CycElem(-1);
    Isometry M1 = iso_scale(exp_pi3, iso_mul(c.increasing_product(1), c.decreasing_product(11)));
    Isometry M2 = iso_mul(c.delta_a4(), c.delta_a4());
    ok = ok && iso_equal(M1, M2);
    for (int i = 0; i < 12; ++i) ok = ok && M2.apply(c.gon_root(i)) == c.gon_root(i);
    for (int k = 0; k < 4; ++k)
      ok = ok && M2.apply(c.a4_root(k)) == vec_scale(exp_pi3, c.a4_root(k));
    ok = ok && iso_equal(iso_pow(c.increasing_product(1), 6), iso_pow(c.decreasing_product(11), 6));
    Isometry g1 = iso_mul(c.increasing_product(1), iso_inverse(c.delta_a4()));
    Isometry g2 = iso_mul(iso_pow(c.increasing_product(1), 6), iso_inverse(c.delta_gon11()));
    ok = ok && order_mod_scalars(g1) == 12 && order_mod_scalars(g2) == 2;
    Isometry conj = iso_mul(iso_mul(g2, g1), iso_inverse(g2));
    ok = ok && scalar_of(iso_mul(conj, g1)).has_value();
    // dihedral group of order 24 modulo scalars
    {
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
          for (const Isometry* gg : {&g1, &g2}) {
            Isometry prod = iso_mul(w, *gg);
            if (add(canon(prod))) next.push_back(prod);
          }
        frontier = std::move(next);
      }
      ok = ok && seen.size() == 24;
    }
    line(8, "rotation and stabilizer word identities", ok);

    // 9. conjugation tables and the neighborhood relators under matrices
    {
      bool tok = true;
      Isometry W1i = iso_inverse(g1), W2i = iso_inverse(g2);
      for (int j = 0; j < 12; ++j)
        tok = tok && iso_equal(iso_mul(iso_mul(g1, c.gon(j)), W1i), c.gon(j + 1)) &&
              iso_equal(iso_mul(iso_mul(g2, c.gon(j)), W2i), c.gon(6 - j));
      tok = tok && iso_equal(iso_mul(iso_mul(g1, c.a4(0)), W1i), c.a4(3)) &&
            iso_equal(iso_mul(iso_mul(g1, c.a4(3)), W1i), c.a4(0)) &&
            iso_equal(iso_mul(iso_mul(g1, c.a4(1)), W1i), c.a4(2)) &&
            iso_equal(iso_mul(iso_mul(g1, c.a4(2)), W1i), c.a4(1));
      for (int k = 0; k < 4; ++k)
        tok = tok && iso_equal(iso_mul(iso_mul(g2, c.a4(k)), W2i), c.a4(k));

      auto rs = relator_suite(RelatorSuite::NeighborhoodRelators);
      auto outcomes = check_relators(rs, IsometryAssignment{&c});
      bool relations_ok = true, product_exact = false;
      for (std::size_t i = 0; i < rs.size(); ++i) {
        relations_ok = relations_ok && outcomes[i].pass;
        if (rs[i].name == "D^6=I^6") product_exact = outcomes[i].pass && outcomes[i].exact;
      }
      // the product relation realizes exactly the e^{i pi/3} scalar
      Isometry lhs = iso_mul(c.delta_a4(), c.delta_a4());
      Isometry rhs =
          iso_scale(exp_pi3, iso_mul(c.increasing_product(1), c.decreasing_product(11)));
      bool scalar_ok = iso_equal(lhs, rhs);
      auto rs2 = relator_suite(RelatorSuite::ConjugationTables);
      for (const auto& oc : check_relators(rs2, IsometryAssignment{&c}))
        relations_ok = relations_ok && oc.pass && oc.exact;
      line(9, "conjugation tables and neighborhood relators", tok && relations_ok &&
                                                                  product_exact && scalar_ok);
    }
  }

  // 10. deflation, under a second
  {
    auto t0 = Clock::now();
    auto rep = deflation_check();
    double el = secs(t0, Clock::now());
    line(10, "deflation of the affine group over the gon", rep.pass() && el < 1.0,
         "rank " + std::to_string(rep.conjugate_rank) + ", " + std::to_string(el) + "s");
  }

  // 11. lattice structure
  {
    bool ok = true;
    std::string note;
    DirectedGraph a4;
    a4.nodes = 4;
    a4.edges = {{0, 1}, {1, 2}, {2, 3}};
    GramLattice L4{gram_from_graph(a4)};
    CycMat cellm(2, CycVec(2));
    cellm[0][1] = CycElem::theta();
    cellm[1][0] = CycElem::theta().conj();
    GramLattice cell{HermitianGram(cellm)};
    CycMat sum(14, CycVec(14));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) sum[i][j] = cellm[i][j];
    for (int blk = 0; blk < 3; ++blk)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) sum[2 + 4 * blk + i][2 + 4 * blk + j] = L4.gram.g[i][j];
    ok = ok && theta_dual_equals_self(L4) && theta_dual_equals_self(cell) &&
         theta_dual_equals_self(GramLattice{HermitianGram(sum)});

    std::vector<AmbientVector> Lbasis;
    Lbasis.push_back(
        vec_scale(CycElem::theta().inverse(), vec_add(g.sp.c, g.rt.roots[g.gl.gon[0]])));
    Lbasis.push_back(g.sp.c);
    for (int k = 0; k < 12; ++k) Lbasis.push_back(g.cb.basis[2 + k]);
    CycMat Lgram(14, CycVec(14));
    for (int i = 0; i < 14; ++i)
      for (int j = 0; j < 14; ++j) Lgram[i][j] = herm(Lbasis[i], Lbasis[j]);
    GramLattice Lfull{HermitianGram(Lgram)};
    ok = ok && theta_dual_equals_self(Lfull);
    auto sigL = signature(Lfull.gram);
    ok = ok && sigL.positive == 13 && sigL.negative == 1 && sigL.zero == 0;

    std::vector<AmbientVector> dm_basis;
    {
      CycMat rows;
      for (int j = 0; j < 12; ++j) {
        rows.push_back(g.rt.roots[g.gl.gon[j]]);
        if (cyc_rank(rows) < rows.size())
          rows.pop_back();
        else
          dm_basis.push_back(g.rt.roots[g.gl.gon[j]]);
      }
      EisSpan dm_span(std::vector<CycVec>(dm_basis.begin(), dm_basis.end()));
      for (int j = 0; j < 12; ++j) ok = ok && dm_span.contains(g.rt.roots[g.gl.gon[j]]);
    }
    CycMat DMgram(10, CycVec(10));
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) DMgram[i][j] = herm(dm_basis[i], dm_basis[j]);
    GramLattice Ldm{HermitianGram(DMgram)};
    ok = ok && theta_dual_equals_self(Ldm);
    auto sigDM = signature(Ldm.gram);
    ok = ok && sigDM.positive == 9 && sigDM.negative == 1 && sigDM.zero == 0;

    DirectedGraph inc;
    inc.nodes = 26;
    for (int j = 1; j <= 13; ++j)
      for (int pt : IncidencePlane::points_on_line(j)) inc.edges.push_back({13 + j - 1, pt - 1});
    auto rr = rank_and_radical(gram_from_graph(inc));
    ok = ok && rr.rank == 14 && rr.radical.size() == 12;

    DirectedGraph gon;
    gon.nodes = 12;
    for (int k = 0; k < 12; k += 2) {
      gon.edges.push_back({k, (k + 1) % 12});
      gon.edges.push_back({(k + 2) % 12, (k + 1) % 12});
    }
    auto rr2 = rank_and_radical(gram_from_graph(gon));
    ok = ok && rr2.rank == 10 && rr2.radical.size() == 2;

    IntMat e8 = real_form(L4);
    Int det = int_det(e8);
    bool even = e8.size() == 8;
    for (std::size_t i = 0; i < e8.size(); ++i) even = even && (e8[i][i] % 2 == 0);
    ok = ok && even && (det == 1 || det == -1);
    line(11, "theta-duality, radicals, signatures, and the real form", ok);
  }

  // 12. bracket basis Gram and two-sided membership characterization
  {
    bool ok = true;
    CycMat expect(14, CycVec(14));
    expect[0][0] = CycElem(-3);
    expect[1][1] = CycElem(3);
    const CycElem th = CycElem::theta(), thb = CycElem::theta().conj();
    CycElem blk[4][4] = {{CycElem(3), thb, CycElem(0), CycElem(0)},
                         {th, CycElem(3), th, CycElem(0)},
                         {CycElem(0), thb, CycElem(3), thb},
                         {CycElem(0), CycElem(0), th, CycElem(3)}};
    for (int t = 0; t < 3; ++t)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) expect[2 + 4 * t + i][2 + 4 * t + j] = blk[i][j];
    ok = ok && cyc_equal(g.cb.gram, expect);

    std::vector<CycVec> root_gens(g.rt.roots.begin(), g.rt.roots.end());
    EisSpan L(root_gens);
    std::vector<CycVec> char_gens;
    char_gens.push_back(vec_scale(th.inverse(), vec_add(g.sp.c, g.rt.roots[g.gl.gon[0]])));
    char_gens.push_back(g.sp.c);
    for (int k = 0; k < 12; ++k) char_gens.push_back(g.cb.basis[2 + k]);
    for (const auto& v : char_gens) ok = ok && L.contains(v);
    EisSpan M(char_gens);
    for (int label = 0; label < 26; ++label) ok = ok && M.contains(g.rt.roots[label]);
    for (int label = 0; label < 26 && ok; ++label) {
      auto cc = cbasis_coords(g.cb, g.rt.roots[label]);
      ok = cc && eis_congruent_mod_theta(cc->a, cc->b);
    }
    line(12, "bracket basis Gram and membership characterization", ok);
  }

  // 13. a recorded segment parameter passing both subball criteria
  {
    auto res = verify_sigma_criteria(g, Rat(1, 2));
    line(13, "segment parameter for the subball criteria", res.report.pass(),
         "t = " + res.t_found.str());
  }

  // 14. randomized property suites with a recorded seed
  {
    bool ok = true;
    std::string note = "seed " + std::to_string(seed);
    std::mt19937_64 rng(seed);

    // field axioms
    auto rnd = [&]() {
      auto rr = [&]() { return Rat((long)(rng() % 21) - 10, (long)(rng() % 9) + 1); };
      return CycElem(RealQuad(rr(), rr()), RealQuad(rr(), rr()));
    };
    for (int i = 0; i < 1000 && ok; ++i) {
      CycElem a = rnd(), b = rnd(), d = rnd();
      ok = ((a * b) * d == a * (b * d)) && (a * (b + d) == a * b + a * d) &&
           a.norm().sign() >= 0;
      if (!a.is_zero()) ok = ok && (a * a.inverse() == CycElem(1));
    }
    if (!ok) note += "; field axioms failed";

    // scalar invariance, at least a thousand cases
    bool scl = true;
    const AmbientVector& root = g.rt.roots[g.gl.a4[0]];
    RealQuad base_cosh = cosh_sq_dist(g.sp.tau, g.sp.rho).value;
    RealQuad base_sinh = sinh_sq_dist_to_mirror(g.sp.tau, root).value;
    auto rnd_scalar = [&]() {
      while (true) {
        auto rr = [&]() { return Rat((long)(rng() % 9) - 4, (long)(rng() % 4) + 1); };
        CycElem z(RealQuad(rr(), rr()), RealQuad(rr(), rr()));
        if (!z.is_zero()) return z;
      }
    };
    for (int i = 0; i < 1000 && scl; ++i) {
      AmbientVector v = vec_scale(rnd_scalar(), g.sp.tau);
      AmbientVector w = vec_scale(rnd_scalar(), g.sp.rho);
      scl = cosh_sq_dist(v, w).value == base_cosh &&
            sinh_sq_dist_to_mirror(v, root).value == base_sinh;
    }
    ok = ok && scl;
    if (!scl) note += "; scalar invariance failed";

    // unit closure of an enumeration
    {
      CycMat block(4, CycVec(4));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) block[i][j] = g.cb.gram[2 + i][2 + j];
      auto n3 = enumerate_by_norm(GramLattice{HermitianGram(block)}, Rat(3));
      std::set<EisVector, bool (*)(const EisVector&, const EisVector&)> seen(eis_vector_less);
      for (const auto& v : n3) seen.insert(v);
      bool closure = n3.size() == 240;
      for (const auto& v : n3) {
        EisVector wv(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) wv[i] = EisInt::omega() * v[i];
        closure = closure && seen.count(wv) == 1;
      }
      ok = ok && closure;
      if (!closure) note += "; unit closure failed";
    }

    // classification against a dense-sampling oracle on random triangles
    {
      int compared = 0, agreed = 0, tried = 0;
      auto rnd_rat = [&](long lo, long hi, long den) {
        return Rat(lo * den + (long)(rng() % ((hi - lo) * den + 1)), den);
      };
      while (compared < 110 && tried < 4000) {
        ++tried;
        std::vector<AmbientVector> verts;
        bool good = true;
        for (int k = 0; k < 3; ++k) {
          AmbientVector v(kAmbientDim, CycElem(0));
          v[0] = CycElem(rnd_rat(2, 5, 6));
          v[1] = CycElem(rnd_rat(-1, 1, 6));
          v[2] = CycElem(rnd_rat(-1, 1, 6));
          if (herm_norm(v).sign() >= 0) good = false;
          verts.push_back(std::move(v));
        }
        if (!good) continue;
        for (int i = 0; i < 3 && good; ++i)
          for (int j = i + 1; j < 3 && good; ++j) {
            CycElem p = herm(verts[i], verts[j]);
            good = p.is_real() && p.re.sign() < 0;
          }
        if (!good) continue;
        AmbientVector s(kAmbientDim, CycElem(0));
        EisInt se[4];
        for (int k = 0; k < 4; ++k)
          se[k] = EisInt{(std::int64_t)(rng() % 5) - 2, (std::int64_t)(rng() % 5) - 2};
        if (-se[0].norm() + se[1].norm() + se[2].norm() + se[3].norm() != 3) continue;
        for (int k = 0; k < 4; ++k) s[k] = se[k].to_cyc();
        Polygon P;
        try {
          P = make_polygon("random", verts, {"v0", "v1", "v2"});
        } catch (const std::invalid_argument&) {
          continue;
        }
        MirrorHit exact = classify_mirror(P, s);
        std::complex<double> z[3];
        double scale = 0;
        for (int k = 0; k < 3; ++k) {
          CycElem p = herm(P.verts[k], s);
          auto dbl = [](const RealQuad& r) {
            return mpq_get_d(r.a.raw().get_mpq_t()) +
                   1.7320508075688772935 * mpq_get_d(r.b.raw().get_mpq_t());
          };
          z[k] = {dbl(p.re), dbl(p.im)};
          scale = std::max(scale, std::abs(z[k]));
        }
        if (scale == 0) continue;
        double best = 1e300;
        const int N = 80;
        for (int a = 0; a <= N; ++a)
          for (int bb = 0; bb + a <= N; ++bb) {
            double t0 = double(a) / N, t1 = double(bb) / N, t2 = 1.0 - t0 - t1;
            best = std::min(best, std::abs(t0 * z[0] + t1 * z[1] + t2 * z[2]));
          }
        double rel = best / scale;
        bool oracle_hit, decisive = true;
        if (rel < 5e-3)
          oracle_hit = true;
        else if (rel > 5e-2)
          oracle_hit = false;
        else
          decisive = false;
        if (!decisive) continue;
        ++compared;
        if ((exact.kind != HitKind::Miss) == oracle_hit) ++agreed;
      }
      bool cls = compared >= 100 && agreed == compared;
      ok = ok && cls;
      note += "; oracle " + std::to_string(agreed) + "/" + std::to_string(compared);
    }
    line(14, "randomized property suites", ok, note);
  }

  std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria pass"
                                : "ACCEPTANCE: " + std::to_string(g_failures) +
                                      " criterion(s) failed")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
