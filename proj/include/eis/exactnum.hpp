#pragma once

// Exact arithmetic in the degree-4 field Q(i, sqrt3) = Q(omega, sqrt3),
// its real subfield Q(sqrt3), and the Eisenstein integers Z[omega].
// Everything here is immutable value types; no floating point.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eis {

using Int = mpz_class;

// Arbitrary-precision rational, always reduced, denominator > 0.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(const Int& n) : v_(n) {}
  Rat(long num, long den) : v_(num, den) { normalize(); }
  Rat(const Int& num, const Int& den) : v_(num, den) { normalize(); }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  const Int num() const { return v_.get_num(); }
  const Int den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(v_ / o.v_));
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  // Largest integer <= value.
  Int floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }
  // Nearest integer, ties toward +infinity.
  Int round() const { return (*this + Rat(1, 2)).floor(); }

  std::string str() const;
  static Rat parse(const std::string& s);

private:
  void normalize() {
    if (sgn(v_.get_den()) == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }
  mpq_class v_;
};

// Element a + b*sqrt(3) of the real quadratic field Q(sqrt3).
struct RealQuad {
  Rat a, b;

  RealQuad() = default;
  RealQuad(Rat a_) : a(std::move(a_)) {}
  RealQuad(long n) : a(n) {}
  RealQuad(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}

  static RealQuad sqrt3() { return RealQuad(Rat(0), Rat(1)); }

  RealQuad operator-() const { return {-a, -b}; }
  RealQuad operator+(const RealQuad& o) const { return {a + o.a, b + o.b}; }
  RealQuad operator-(const RealQuad& o) const { return {a - o.a, b - o.b}; }
  RealQuad operator*(const RealQuad& o) const {
    return {a * o.a + Rat(3) * b * o.b, a * o.b + b * o.a};
  }
  RealQuad inverse() const;
  RealQuad operator/(const RealQuad& o) const { return *this * o.inverse(); }
  RealQuad& operator+=(const RealQuad& o) { a += o.a; b += o.b; return *this; }
  RealQuad& operator-=(const RealQuad& o) { a -= o.a; b -= o.b; return *this; }

  bool operator==(const RealQuad& o) const { return a == o.a && b == o.b; }
  bool operator!=(const RealQuad& o) const { return !(*this == o); }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_rational() const { return b.is_zero(); }

  // Exact sign of a + b*sqrt3 as a real number, by case analysis on the
  // signs of a, b and comparison of a^2 with 3 b^2.  Never approximates.
  int sign() const;

  bool operator<(const RealQuad& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const RealQuad& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const RealQuad& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const RealQuad& o) const { return (*this - o).sign() >= 0; }

  std::string str() const;
};

// Element re + i*im of Q(i, sqrt3), with re, im in Q(sqrt3).
// Basis over Q: {1, sqrt3, i, i*sqrt3}.  Conjugation fixes re, negates im.
struct CycElem {
  RealQuad re, im;

  CycElem() = default;
  CycElem(long n) : re(n) {}
  CycElem(Rat r) : re(std::move(r)) {}
  CycElem(RealQuad r) : re(std::move(r)) {}
  CycElem(RealQuad r, RealQuad i_) : re(std::move(r)), im(std::move(i_)) {}

  // omega = (-1 + i sqrt3)/2, a primitive cube root of unity.
  static CycElem omega() { return {RealQuad(Rat(-1, 2)), RealQuad(Rat(0), Rat(1, 2))}; }
  // theta = omega - conj(omega) = i sqrt3, with theta^2 = -3.
  static CycElem theta() { return {RealQuad(Rat(0)), RealQuad(Rat(0), Rat(1))}; }
  static CycElem i() { return {RealQuad(Rat(0)), RealQuad(Rat(1))}; }
  // Primitive 12th root of unity (sqrt3 + i)/2; its square is e^{i pi/3}.
  static CycElem zeta12() { return {RealQuad(Rat(0), Rat(1, 2)), RealQuad(Rat(1, 2))}; }
  static CycElem sqrt3() { return {RealQuad::sqrt3(), RealQuad()}; }

  CycElem conj() const { return {re, -im}; }
  CycElem operator-() const { return {-re, -im}; }
  CycElem operator+(const CycElem& o) const { return {re + o.re, im + o.im}; }
  CycElem operator-(const CycElem& o) const { return {re - o.re, im - o.im}; }
  CycElem operator*(const CycElem& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CycElem& operator+=(const CycElem& o) { re += o.re; im += o.im; return *this; }
  CycElem& operator-=(const CycElem& o) { re -= o.re; im -= o.im; return *this; }

  // |x|^2 = x * conj(x); always a nonnegative element of Q(sqrt3).
  RealQuad norm() const { return re * re + im * im; }

  CycElem inverse() const {
    RealQuad n = norm();
    if (n.is_zero()) throw std::domain_error("CycElem: inverse of zero");
    RealQuad ninv = n.inverse();
    return {re * ninv, -im * ninv};
  }
  CycElem operator/(const CycElem& o) const { return *this * o.inverse(); }

  bool operator==(const CycElem& o) const { return re == o.re && im == o.im; }
  bool operator!=(const CycElem& o) const { return !(*this == o); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  // Canonical rendering "p/q + r/s*sqrt3 + t/u*i + v/w*i*sqrt3"; round-trips
  // through parse().
  std::string str() const;
  static CycElem parse(const std::string& s);
};

inline CycElem operator*(const Rat& r, const CycElem& x) { return CycElem(RealQuad(r)) * x; }
inline CycElem operator*(const RealQuad& r, const CycElem& x) { return CycElem(r) * x; }

// Eisenstein integer m + n*omega.  Coordinates are machine integers with
// overflow-checked arithmetic; every operation that would overflow throws.
struct EisInt {
  std::int64_t m = 0, n = 0;

  EisInt() = default;
  EisInt(std::int64_t m_, std::int64_t n_ = 0) : m(m_), n(n_) {}

  static EisInt omega() { return {0, 1}; }
  // theta = 1 + 2*omega  (= omega - conj(omega))
  static EisInt theta() { return {1, 2}; }

  EisInt operator-() const;
  EisInt operator+(const EisInt& o) const;
  EisInt operator-(const EisInt& o) const;
  EisInt operator*(const EisInt& o) const;
  bool operator==(const EisInt& o) const { return m == o.m && n == o.n; }
  bool operator!=(const EisInt& o) const { return !(*this == o); }
  bool is_zero() const { return m == 0 && n == 0; }

  // conj(m + n omega) = (m - n) - n omega
  EisInt conj() const;
  // |m + n omega|^2 = m^2 - m n + n^2
  std::int64_t norm() const;

  // Ring embedding into Q(i, sqrt3): m + n*omega = (2m-n)/2 + (n/2) i sqrt3.
  CycElem to_cyc() const;

  // The six units +-1, +-omega, +-omega^2.
  static const std::array<EisInt, 6>& units();

  std::string str() const;
};

// Exact division by theta: returns q with q*theta == x, if it exists.
bool eis_div_theta(const EisInt& x, EisInt& q_out);

// True iff (a - b)/theta is an Eisenstein integer.  E/(theta) has 3 classes;
// the class of m + n omega is (m + n) mod 3.
bool eis_congruent_mod_theta(const EisInt& a, const EisInt& b);

inline int real_sign(const RealQuad& x) { return x.sign(); }

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

// Compares sqrt(u) + sqrt(v) with sqrt(w) for nonnegative u, v, w in
// Q(sqrt3); returns -1, 0, +1.  Works by squaring in a sign-checked order.
int cmp_sqrt_sum(const RealQuad& u, const RealQuad& v, const RealQuad& w);

}  // namespace eis
