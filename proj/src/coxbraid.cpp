#include "eis/coxbraid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace eis {

namespace {

std::int64_t floordiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace

AffinePermutation::AffinePermutation() {
  for (int i = 0; i < kN; ++i) w_[i] = i + 1;
}

AffinePermutation::AffinePermutation(std::array<std::int64_t, kN> window) : w_(window) {
  std::array<bool, kN> seen{};
  std::int64_t sum = 0;
  for (int i = 0; i < kN; ++i) {
    std::int64_t res = w_[i] - 1 - 12 * floordiv(w_[i] - 1, 12);
    if (seen[res]) throw std::invalid_argument("AffinePermutation: residues not a permutation");
    seen[res] = true;
    sum += w_[i] - (i + 1);
  }
  if (sum != 0) throw std::invalid_argument("AffinePermutation: window sum nonzero");
}

std::int64_t AffinePermutation::operator()(std::int64_t i) const {
  std::int64_t p = floordiv(i - 1, 12);
  return w_[i - 1 - 12 * p] + 12 * p;
}

AffinePermutation AffinePermutation::compose(const AffinePermutation& inner) const {
  std::array<std::int64_t, kN> w;
  for (int k = 0; k < kN; ++k) w[k] = (*this)(inner(k + 1));
  return AffinePermutation(w);
}

AffinePermutation AffinePermutation::inverse() const {
  std::array<std::int64_t, kN> w{};
  for (int k = 0; k < kN; ++k) {
    std::int64_t v = w_[k];
    std::int64_t p = floordiv(v - 1, 12);
    w[v - 1 - 12 * p] = (k + 1) - 12 * p;
  }
  return AffinePermutation(w);
}

bool AffinePermutation::is_translation() const {
  for (int i = 0; i < kN; ++i)
    if ((w_[i] - (i + 1)) % 12 != 0) return false;
  return true;
}

std::optional<std::array<std::int64_t, AffinePermutation::kN>> AffinePermutation::translation_part()
    const {
  if (!is_translation()) return std::nullopt;
  std::array<std::int64_t, kN> t;
  for (int i = 0; i < kN; ++i) t[i] = (w_[i] - (i + 1)) / 12;
  return t;
}

std::array<int, AffinePermutation::kN> AffinePermutation::finite_part() const {
  std::array<int, kN> p;
  for (int i = 0; i < kN; ++i) p[i] = int(w_[i] - 1 - 12 * floordiv(w_[i] - 1, 12));
  return p;
}

AffinePermutation cox_generator(int i) {
  if (i < 0 || i > 11) throw std::invalid_argument("cox_generator: index out of range");
  std::array<std::int64_t, 12> w;
  for (int k = 0; k < 12; ++k) w[k] = k + 1;
  if (i == 0) {
    w[0] = 0;    // f(1) = 0
    w[11] = 13;  // f(12) = 13
  } else {
    w[i - 1] = i + 1;
    w[i] = i;
  }
  return AffinePermutation(w);
}

// ---- relator suites ----

namespace {

ReflWord sym(int s, long e = 1) { return {WordLetter{s, e}}; }

ReflWord cat(std::initializer_list<ReflWord> parts) {
  ReflWord w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

ReflWord inv(const ReflWord& w) {
  ReflWord r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->sym, -it->exp});
  return r;
}

ReflWord run(int first, int count, int step) {  // g_first g_{first+step} ... (mod 12)
  ReflWord w;
  for (int k = 0; k < count; ++k) w.push_back({(((first + k * step) % 12) + 12) % 12, 1});
  return w;
}

ReflWord pow_word(const ReflWord& w, int e) {
  ReflWord r;
  for (int k = 0; k < e; ++k) r.insert(r.end(), w.begin(), w.end());
  return r;
}

ReflWord delta_word(const std::vector<int>& syms) {
  ReflWord w;
  for (std::size_t m = syms.size(); m >= 1; --m)
    for (std::size_t k = 0; k < m; ++k) w.push_back({syms[k], 1});
  return w;
}

void add_braid(std::vector<Relator>& out, int a, int b, const std::string& name) {
  out.push_back({name, cat({sym(a), sym(b), sym(a), sym(b, -1), sym(a, -1), sym(b, -1)})});
}

void add_commute(std::vector<Relator>& out, int a, int b, const std::string& name) {
  out.push_back({name, cat({sym(a), sym(b), sym(a, -1), sym(b, -1)})});
}

void gon_artin(std::vector<Relator>& out) {
  for (int j = 0; j < 12; ++j)
    for (int k = j + 1; k < 12; ++k) {
      int d = std::min((k - j + 12) % 12, (j - k + 12) % 12);
      std::string nm = "g" + std::to_string(j) + "-g" + std::to_string(k);
      if (d == 1)
        add_braid(out, j, k, "braid " + nm);
      else
        add_commute(out, j, k, "commute " + nm);
    }
}

void a4_artin(std::vector<Relator>& out) {
  const char* names = "ABCD";
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      std::string nm = std::string("g") + names[a] + "-g" + names[b];
      if (b == a + 1)
        add_braid(out, 12 + a, 12 + b, "braid " + nm);
      else
        add_commute(out, 12 + a, 12 + b, "commute " + nm);
    }
  for (int j = 0; j < 12; ++j)
    for (int a = 0; a < 4; ++a)
      add_commute(out, j, 12 + a,
                  "commute g" + std::to_string(j) + "-g" + std::string(1, names[a]));
}

ReflWord equality(const ReflWord& lhs, const ReflWord& rhs) { return cat({lhs, inv(rhs)}); }

}  // namespace

std::vector<Relator> relator_suite(RelatorSuite which) {
  std::vector<Relator> out;
  // Increasing and decreasing words have 11 letters for all suites; the
  // twelfth letter would break every quotient check.
  auto inc11 = [](int j) { return run(j, 11, +1); };
  auto dec11 = [](int j) { return run(j, 11, -1); };

  switch (which) {
    case RelatorSuite::GonArtin:
      gon_artin(out);
      break;
    case RelatorSuite::GonArtinD:
      gon_artin(out);
      for (int j = 1; j < 12; ++j)
        out.push_back({"D" + std::to_string(j) + "=D0", equality(dec11(j), dec11(0))});
      break;
    case RelatorSuite::GonArtinI:
      gon_artin(out);
      for (int j = 1; j < 12; ++j)
        out.push_back({"I" + std::to_string(j) + "=I0", equality(inc11(j), inc11(0))});
      break;
    case RelatorSuite::SphereBraid:
      gon_artin(out);
      for (int j = 1; j < 12; ++j) {
        out.push_back({"D" + std::to_string(j) + "=D0", equality(dec11(j), dec11(0))});
        out.push_back({"I" + std::to_string(j) + "=I0", equality(inc11(j), inc11(0))});
      }
      out.push_back({"ID=1", cat({inc11(1), dec11(11)})});
      break;
    case RelatorSuite::ModuliSpace:
      gon_artin(out);
      for (int j = 1; j < 12; ++j) {
        out.push_back({"I" + std::to_string(j) + "=I0", equality(inc11(j), inc11(0))});
        out.push_back({"D" + std::to_string(j) + "=D0", equality(dec11(j), dec11(0))});
      }
      out.push_back({"ID=1", cat({inc11(1), dec11(11)})});
      out.push_back({"I^12=1", pow_word(inc11(1), 12)});
      out.push_back({"D^12=1", pow_word(dec11(11), 12)});
      out.push_back({"I^6=D^6", equality(pow_word(inc11(1), 6), pow_word(dec11(11), 6))});
      break;
    case RelatorSuite::NeighborhoodRelators: {
      gon_artin(out);
      a4_artin(out);
      for (int j = 0; j < 12; ++j) {
        if (j != 1) out.push_back({"I" + std::to_string(j) + "=I1", equality(inc11(j), inc11(1))});
        if (j != 11)
          out.push_back({"D" + std::to_string(j) + "=D11", equality(dec11(j), dec11(11))});
      }
      ReflWord delta2 = pow_word(delta_word({12, 13, 14, 15}), 2);
      out.push_back({"ID=Delta(gA..gD)^2", equality(cat({inc11(1), dec11(11)}), delta2)});
      out.push_back({"D^6=I^6", equality(pow_word(dec11(11), 6), pow_word(inc11(1), 6))});
      break;
    }
    case RelatorSuite::ConjugationTables: {
      ReflWord W1 = cat({inc11(1), inv(delta_word({12, 13, 14, 15}))});
      ReflWord W2 =
          cat({pow_word(inc11(1), 6), inv(delta_word({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}))});
      auto conj = [](const ReflWord& w, int s) { return cat({w, sym(s), inv(w)}); };
      for (int j = 0; j < 12; ++j)
        out.push_back({"W1 g" + std::to_string(j) + " W1^-1 = g" + std::to_string((j + 1) % 12),
                       equality(conj(W1, j), sym((j + 1) % 12))});
      const int A = 12, B = 13, C = 14, D = 15;
      out.push_back({"W1 gA W1^-1 = gD", equality(conj(W1, A), sym(D))});
      out.push_back({"W1 gD W1^-1 = gA", equality(conj(W1, D), sym(A))});
      out.push_back({"W1 gB W1^-1 = gC", equality(conj(W1, B), sym(C))});
      out.push_back({"W1 gC W1^-1 = gB", equality(conj(W1, C), sym(B))});
      for (int j = 0; j < 12; ++j)
        out.push_back(
            {"W2 g" + std::to_string(j) + " W2^-1 = g" + std::to_string(((6 - j) % 12 + 12) % 12),
             equality(conj(W2, j), sym(((6 - j) % 12 + 12) % 12))});
      const char* names = "ABCD";
      for (int a = 0; a < 4; ++a)
        out.push_back({std::string("W2 g") + names[a] + " W2^-1 = g" + names[a],
                       equality(conj(W2, 12 + a), sym(12 + a))});
      for (int k = 0; k < 12; ++k) {
        out.push_back({"I g" + std::to_string(k) + " I^-1 = g" + std::to_string((k + 1) % 12),
                       equality(conj(inc11(1), k), sym((k + 1) % 12))});
        out.push_back({"D g" + std::to_string(k) + " D^-1 = g" + std::to_string((k + 11) % 12),
                       equality(conj(dec11(11), k), sym((k + 11) % 12))});
        out.push_back(
            {"Del11 g" + std::to_string(k) + " Del11^-1 = g" + std::to_string((12 - k) % 12),
             equality(conj(delta_word({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}), k),
                      sym((12 - k) % 12))});
      }
      break;
    }
  }
  return out;
}

// ---- assignments ----

namespace {

Perm12 perm_identity() {
  Perm12 p;
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm12 perm_mul(const Perm12& outer, const Perm12& inner) {  // outer after inner
  Perm12 r;
  for (int i = 0; i < 12; ++i) r[i] = outer[inner[i]];
  return r;
}

Perm12 perm_inv(const Perm12& p) {
  Perm12 r;
  for (int i = 0; i < 12; ++i) r[p[i]] = i;
  return r;
}

}  // namespace

PermAssignment transposition_assignment() {
  PermAssignment a;
  for (int i = 0; i < 12; ++i) {
    Perm12 p = perm_identity();
    std::swap(p[i], p[(i + 1) % 12]);
    a.images[i] = p;
    a.defined[i] = true;
  }
  return a;
}

std::vector<RelatorOutcome> check_relators(const std::vector<Relator>& rs,
                                           const PermAssignment& a) {
  std::vector<RelatorOutcome> out;
  for (const auto& r : rs) {
    Perm12 acc = perm_identity();
    for (const auto& [s, e] : r.word) {
      if (s < 0 || s > 15 || !a.defined[s])
        throw std::invalid_argument("assignment missing symbol");
      Perm12 base = e < 0 ? perm_inv(a.images[s]) : a.images[s];
      long k = e < 0 ? -e : e;
      for (long q = 0; q < k; ++q) acc = perm_mul(acc, base);
    }
    out.push_back({r.name, acc == perm_identity(), true, ""});
  }
  return out;
}

std::vector<RelatorOutcome> check_relators(const std::vector<Relator>& rs,
                                           const AffineAssignment&) {
  std::vector<RelatorOutcome> out;
  for (const auto& r : rs) {
    AffinePermutation acc;
    for (const auto& [s, e] : r.word) {
      if (s < 0 || s > 11)
        throw std::invalid_argument("affine assignment defines only the 12-gon symbols");
      AffinePermutation base = cox_generator(s);
      if (e < 0) base = base.inverse();
      long k = e < 0 ? -e : e;
      for (long q = 0; q < k; ++q) acc = acc.compose(base);
    }
    out.push_back({r.name, acc == AffinePermutation(), true, ""});
  }
  return out;
}

std::vector<RelatorOutcome> check_relators(const std::vector<Relator>& rs,
                                           const IsometryAssignment& a) {
  std::vector<RelatorOutcome> out;
  for (const auto& r : rs) {
    Isometry w = a.ctx->eval(r.word);
    RelatorOutcome oc{r.name, false, true, ""};
    if (iso_equal(w, iso_identity())) {
      oc.pass = true;
    } else if (auto s = scalar_of(w)) {
      oc.pass = true;
      oc.exact = false;
      oc.realized_scalar = s->str();
    }
    out.push_back(oc);
  }
  return out;
}

std::string relators_to_text(const std::vector<Relator>& rs) {
  std::ostringstream os;
  const char* a4names = "ABCD";
  for (const auto& r : rs) {
    for (std::size_t k = 0; k < r.word.size(); ++k) {
      const auto& [s, e] = r.word[k];
      if (k) os << ' ';
      if (s < 12)
        os << 'S' << s;
      else
        os << 'S' << a4names[s - 12];
      if (e != 1) os << '^' << e;
    }
    os << '\n';
  }
  return os.str();
}

// ---- deflation ----

DeflationReport deflation_check() {
  DeflationReport rep;

  auto eval_word = [](const ReflWord& w) {
    AffinePermutation acc;
    for (const auto& [s, e] : w) {
      AffinePermutation base = cox_generator(s);
      if (e < 0) base = base.inverse();
      long k = e < 0 ? -e : e;
      for (long q = 0; q < k; ++q) acc = acc.compose(base);
    }
    return acc;
  };

  ReflWord delta = cat({run(0, 11, +1), inv(run(1, 11, +1))});
  AffinePermutation d = eval_word(delta);
  auto t = d.translation_part();
  rep.image_is_translation = t.has_value() && !(d == AffinePermutation());
  if (!rep.image_is_translation) return rep;
  rep.translation = *t;

  // conjugates of the translation; the vectors collected span the full
  // sum-zero sublattice once the rank stops growing
  std::set<std::array<std::int64_t, 12>> vecs;
  vecs.insert(*t);
  std::deque<AffinePermutation> queue = {d};
  std::set<std::array<std::int64_t, 12>> enqueued = {*t};
  while (!queue.empty() && vecs.size() < 4096) {
    AffinePermutation cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < 12; ++i) {
      AffinePermutation g = cox_generator(i);
      AffinePermutation conj = g.compose(cur).compose(g.inverse());
      auto tv = conj.translation_part();
      if (!tv) throw std::logic_error("deflation: conjugate of a translation not a translation");
      if (enqueued.insert(*tv).second) {
        vecs.insert(*tv);
        queue.push_back(conj);
      }
    }
  }
  IntMat rows;
  for (const auto& v : vecs) {
    IntVec row(12);
    for (int i = 0; i < 12; ++i) row[i] = Int((long)v[i]);
    rows.push_back(row);
  }
  rep.conjugate_rank = hnf_rows(rows).size();

  // relabeling g_i -> g_{i+1} shifts the translation vector cyclically
  ReflWord shifted;
  for (const auto& [s, e] : delta) shifted.push_back({(s + 1) % 12, e});
  auto ts = eval_word(shifted).translation_part();
  if (ts) {
    for (int off = 0; off < 12 && !rep.rotation_shifts_translation; ++off) {
      bool match = true;
      for (int i = 0; i < 12; ++i) match = match && ((*ts)[i] == rep.translation[(i + off) % 12]);
      rep.rotation_shifts_translation = match;
    }
  }

  auto a = transposition_assignment();
  std::vector<Relator> cox = relator_suite(RelatorSuite::GonArtin);
  for (int i = 0; i < 12; ++i)
    cox.push_back({"square g" + std::to_string(i), cat({sym(i), sym(i)})});
  bool all = true;
  for (const auto& oc : check_relators(cox, a)) all = all && oc.pass;
  rep.s12_satisfies_relators = all;
  rep.s12_kills_deflation_word = check_relators({{"deflation", delta}}, a)[0].pass;
  return rep;
}

}  // namespace eis
