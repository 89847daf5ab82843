#include "eis/exactnum.hpp"

#include <array>
#include <sstream>

namespace eis {

std::string Rat::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
  return s;
}

Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

RealQuad RealQuad::inverse() const {
  // 1/(a + b sqrt3) = (a - b sqrt3) / (a^2 - 3 b^2)
  Rat d = a * a - Rat(3) * b * b;
  if (d.is_zero()) throw std::domain_error("RealQuad: inverse of zero");
  return {a / d, -b / d};
}

int RealQuad::sign() const {
  int sa = a.sign(), sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 3 b^2; the larger term wins.
  // (a^2 = 3 b^2 cannot happen for nonzero rationals.)
  Rat a2 = a * a, b23 = Rat(3) * b * b;
  return (a2 > b23) ? sa : sb;
}

std::string RealQuad::str() const {
  std::string s = a.str();
  if (!b.is_zero()) s += (b.sign() < 0 ? " - " : " + ") + b.abs().str() + "*sqrt3";
  return s;
}

std::string CycElem::str() const {
  return re.a.str() + " + " + re.b.str() + "*sqrt3 + " + im.a.str() + "*i + " +
         im.b.str() + "*i*sqrt3";
}

namespace {

// Splits "c0 + c1*sqrt3 + c2*i + c3*i*sqrt3" (with optional '-' inside the
// rational coefficients) into its four coefficients.
std::array<Rat, 4> parse_components(const std::string& s) {
  std::array<Rat, 4> c{Rat(0), Rat(0), Rat(0), Rat(0)};
  std::istringstream in(s);
  std::string tok;
  int sign = 1;
  while (in >> tok) {
    if (tok == "+") { sign = 1; continue; }
    if (tok == "-") { sign = -1; continue; }
    int slot = 0;
    auto star = tok.find('*');
    std::string numpart = tok.substr(0, star);
    if (star != std::string::npos) {
      std::string suffix = tok.substr(star + 1);
      if (suffix == "sqrt3") slot = 1;
      else if (suffix == "i") slot = 2;
      else if (suffix == "i*sqrt3") slot = 3;
      else throw std::invalid_argument("CycElem::parse: bad term '" + tok + "'");
    }
    Rat r = Rat::parse(numpart);
    c[slot] = c[slot] + (sign < 0 ? -r : r);
    sign = 1;
  }
  return c;
}

}  // namespace

CycElem CycElem::parse(const std::string& s) {
  auto c = parse_components(s);
  return {RealQuad(c[0], c[1]), RealQuad(c[2], c[3])};
}

namespace {

inline std::int64_t ck_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("EisInt: add overflow");
  return r;
}
inline std::int64_t ck_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("EisInt: sub overflow");
  return r;
}
inline std::int64_t ck_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("EisInt: mul overflow");
  return r;
}

}  // namespace

EisInt EisInt::operator-() const { return {ck_sub(0, m), ck_sub(0, n)}; }
EisInt EisInt::operator+(const EisInt& o) const { return {ck_add(m, o.m), ck_add(n, o.n)}; }
EisInt EisInt::operator-(const EisInt& o) const { return {ck_sub(m, o.m), ck_sub(n, o.n)}; }

EisInt EisInt::operator*(const EisInt& o) const {
  // (m + n w)(m' + n' w) = mm' - nn' + (mn' + nm' - nn') w   since w^2 = -1 - w
  std::int64_t ac = ck_mul(m, o.m), bd = ck_mul(n, o.n);
  std::int64_t ad = ck_mul(m, o.n), bc = ck_mul(n, o.m);
  return {ck_sub(ac, bd), ck_sub(ck_add(ad, bc), bd)};
}

EisInt EisInt::conj() const { return {ck_sub(m, n), ck_sub(0, n)}; }

std::int64_t EisInt::norm() const {
  return ck_add(ck_sub(ck_mul(m, m), ck_mul(m, n)), ck_mul(n, n));
}

CycElem EisInt::to_cyc() const {
  return {RealQuad(Rat(ck_sub(ck_mul(2, m), n), 2)), RealQuad(Rat(0), Rat(n, 2))};
}

const std::array<EisInt, 6>& EisInt::units() {
  static const std::array<EisInt, 6> u = {EisInt{1, 0},  EisInt{0, 1},  EisInt{-1, -1},
                                          EisInt{-1, 0}, EisInt{0, -1}, EisInt{1, 1}};
  return u;
}

std::string EisInt::str() const {
  return std::to_string(m) + (n >= 0 ? "+" : "") + std::to_string(n) + "w";
}

bool eis_div_theta(const EisInt& x, EisInt& q_out) {
  // x / theta = x * conj(theta) / 3, conj(theta) = -theta = -1 - 2 omega.
  EisInt y = x * EisInt{-1, -2};
  if (y.m % 3 != 0 || y.n % 3 != 0) return false;
  q_out = EisInt{y.m / 3, y.n / 3};
  return true;
}

bool eis_congruent_mod_theta(const EisInt& a, const EisInt& b) {
  EisInt d = a - b, q;
  return eis_div_theta(d, q);
}

Int isqrt(const Int& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

int cmp_sqrt_sum(const RealQuad& u, const RealQuad& v, const RealQuad& w) {
  if (u.sign() < 0 || v.sign() < 0 || w.sign() < 0)
    throw std::domain_error("cmp_sqrt_sum: negative radicand");
  // (sqrt u + sqrt v)^2 = u + v + 2 sqrt(uv)  vs  w
  RealQuad rest = w - u - v;
  if (rest.sign() < 0) return +1;  // already bigger even before the cross term
  // compare 2 sqrt(uv) with rest (both nonnegative): square once more
  RealQuad lhs = RealQuad(Rat(4)) * u * v;
  RealQuad rhs = rest * rest;
  return (lhs - rhs).sign();
}

}  // namespace eis
