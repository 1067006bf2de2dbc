#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <optional>
#include <string>

#include "errors.hpp"

/*
  Scalar kinds for bilinear-form computations.

  Rational   exact, covers graphs whose bonds lie in {2, 3, infinity}
             (cosine values 0, 1/2, 1).
  Quad       exact in the field Q(sqrt2, sqrt3, sqrt5), covering bonds
             4, 5, 6 as well.  Elements are stored on the basis
             { sqrt(2^a 3^b 5^c) : a,b,c in {0,1} } indexed by bitmask.
  Approx     double with a fixed tolerance, for arbitrary finite bonds.

  Each type provides the same small interface: ring operations, division,
  an exact (resp. tolerant) sign, a strict total order usable as a map key,
  minus_cos_pi_over(m) producing the Gram entry -cos(pi/m) when the bond is
  representable, and printing.
*/

namespace braidforge::exact {

struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g) {
      n /= g;
      d /= g;
    }
    num = n;
    den = d == 0 ? 1 : d;
  }

  static long long fit(__int128 v) {
    if (v > INT64_MAX || v < -INT64_MAX)
      throw OverflowError("exact scalar overflow; rerun in float scalar mode");
    return (long long)v;
  }

  static Rational reduce128(__int128 n, __int128 d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    Rational r;
    r.num = fit(n);
    r.den = fit(d);
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return reduce128((__int128)a.num * b.den + (__int128)b.num * a.den, (__int128)a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return reduce128((__int128)a.num * b.den - (__int128)b.num * a.den, (__int128)a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return reduce128((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw Error("rational division by zero");
    return reduce128((__int128)a.num * b.den, (__int128)a.den * b.num);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num = -r.num;
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  bool operator==(const Rational&) const = default;
  // Numeric order; values are normalized so this is consistent with ==.
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }

  int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
  bool is_zero() const { return num == 0; }
  double to_double() const { return (double)num / (double)den; }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  static std::optional<Rational> minus_cos_pi_over(int m) {
    if (m == -1) return Rational(-1);  // infinite bond
    if (m == 2) return Rational(0);
    if (m == 3) return Rational(-1, 2);
    return std::nullopt;
  }
  static const char* mode_name() { return "rational"; }
};

// Basis index bits: bit0 -> factor 2, bit1 -> factor 3, bit2 -> factor 5.
inline int quad_radicand(int mask) {
  int r = 1;
  if (mask & 1) r *= 2;
  if (mask & 2) r *= 3;
  if (mask & 4) r *= 5;
  return r;
}

struct Quad {
  std::array<Rational, 8> c{};

  Quad() = default;
  Quad(long long n) { c[0] = Rational(n); }
  Quad(const Rational& r) { c[0] = r; }

  static Quad basis(int mask, const Rational& coeff) {
    Quad q;
    q.c[mask] = coeff;
    return q;
  }

  friend Quad operator+(const Quad& a, const Quad& b) {
    Quad r;
    for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Quad operator-(const Quad& a, const Quad& b) {
    Quad r;
    for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Quad operator*(const Quad& a, const Quad& b) {
    Quad r;
    for (int i = 0; i < 8; ++i) {
      if (a.c[i].is_zero()) continue;
      for (int j = 0; j < 8; ++j) {
        if (b.c[j].is_zero()) continue;
        // sqrt(r_i) sqrt(r_j) = r_{i&j} sqrt(r_{i^j})
        r.c[i ^ j] += a.c[i] * b.c[j] * Rational(quad_radicand(i & j));
      }
    }
    return r;
  }
  Quad operator-() const {
    Quad r;
    for (int i = 0; i < 8; ++i) r.c[i] = -c[i];
    return r;
  }
  Quad& operator+=(const Quad& b) { return *this = *this + b; }
  Quad& operator-=(const Quad& b) { return *this = *this - b; }
  Quad& operator*=(const Quad& b) { return *this = *this * b; }

  bool operator==(const Quad&) const = default;
  // Key order (lexicographic on coordinates), not numeric order.
  friend bool operator<(const Quad& a, const Quad& b) {
    for (int i = 0; i < 8; ++i) {
      if (a.c[i] == b.c[i]) continue;
      return a.c[i] < b.c[i];
    }
    return false;
  }

  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }

  // Flips the sign of every coordinate whose basis radicand contains the
  // prime selected by `bit`; the product x * conj_bit(x) drops into the
  // subfield without that prime.
  Quad conj_bit(int bit) const {
    Quad r = *this;
    for (int i = 0; i < 8; ++i)
      if (i & (1 << bit)) r.c[i] = -r.c[i];
    return r;
  }

  friend Quad operator/(const Quad& a, const Quad& b) {
    if (b.is_zero()) throw Error("division by zero in quadratic field");
    Quad y2 = b.conj_bit(0);
    Quad z = b * y2;  // no sqrt2 part
    Quad y3 = z.conj_bit(1);
    Quad v = z * y3;  // no sqrt3 part
    Quad y5 = v.conj_bit(2);
    Quad nrm = v * y5;  // rational
    return a * y2 * y3 * y5 * Quad(Rational(1) / nrm.c[0]);
  }

  // Exact sign by recursive conjugation: write x = A + B sqrt(r) over the
  // subfield and compare A^2 with r B^2 when the parts disagree in sign.
  static int sign_rec(const Quad& x, int bit) {
    if (bit < 0) return x.c[0].sign();
    Quad A, B;
    for (int i = 0; i < 8; ++i) {
      if (i & (1 << bit))
        B.c[i & ~(1 << bit)] = x.c[i];
      else
        A.c[i] = x.c[i];
    }
    if (B.is_zero()) return sign_rec(A, bit - 1);
    if (A.is_zero()) return sign_rec(B, bit - 1);
    int sA = sign_rec(A, bit - 1);
    int sB = sign_rec(B, bit - 1);
    if (sA == sB) return sA;
    int r = bit == 0 ? 2 : bit == 1 ? 3 : 5;
    Quad D = A * A - Quad(Rational(r)) * (B * B);
    return sA * sign_rec(D, bit - 1);
  }

  int sign() const { return sign_rec(*this, 2); }

  double to_double() const {
    double v = 0;
    for (int i = 0; i < 8; ++i) v += c[i].to_double() * std::sqrt((double)quad_radicand(i));
    return v;
  }

  std::string to_string() const {
    std::string out;
    for (int i = 0; i < 8; ++i) {
      if (c[i].is_zero()) continue;
      std::string term = c[i].to_string();
      if (i != 0) term += "r" + std::to_string(quad_radicand(i));
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out.empty() ? "0" : out;
  }

  static std::optional<Quad> minus_cos_pi_over(int m) {
    if (auto r = Rational::minus_cos_pi_over(m)) return Quad(*r);
    if (m == 4) return basis(1, Rational(-1, 2));             // -sqrt2/2
    if (m == 5) return Quad(Rational(-1, 4)) + basis(4, Rational(-1, 4));  // -(1+sqrt5)/4
    if (m == 6) return basis(2, Rational(-1, 2));             // -sqrt3/2
    return std::nullopt;
  }
  static const char* mode_name() { return "quadratic"; }
};

struct Approx {
  static constexpr double kTol = 1e-9;
  double v = 0;

  Approx() = default;
  Approx(int n) : v(n) {}
  Approx(long long n) : v((double)n) {}
  Approx(double x) : v(x) {}

  friend Approx operator+(const Approx& a, const Approx& b) { return {a.v + b.v}; }
  friend Approx operator-(const Approx& a, const Approx& b) { return {a.v - b.v}; }
  friend Approx operator*(const Approx& a, const Approx& b) { return {a.v * b.v}; }
  friend Approx operator/(const Approx& a, const Approx& b) {
    if (std::fabs(b.v) <= kTol) throw Error("float scalar division by (near) zero");
    return {a.v / b.v};
  }
  Approx operator-() const { return {-v}; }
  Approx& operator+=(const Approx& b) { return *this = *this + b; }
  Approx& operator-=(const Approx& b) { return *this = *this - b; }
  Approx& operator*=(const Approx& b) { return *this = *this * b; }

  // Dedup key: a fixed rounding grid, coarse compared to the tolerance.
  long long key() const { return (long long)llround(v * 1e6); }
  friend bool operator==(const Approx& a, const Approx& b) { return std::fabs(a.v - b.v) <= kTol; }
  friend bool operator<(const Approx& a, const Approx& b) { return a.key() < b.key(); }

  bool is_zero() const { return std::fabs(v) <= kTol; }
  int sign() const { return v > kTol ? 1 : v < -kTol ? -1 : 0; }
  double to_double() const { return v; }

  std::string to_string() const {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v + 0.0);  // +0.0 avoids "-0"
    return buf;
  }

  static std::optional<Approx> minus_cos_pi_over(int m) {
    if (m == -1) return Approx(-1.0);
    return Approx(-std::cos(M_PI / (double)m));
  }
  static const char* mode_name() { return "float"; }
};

}  // namespace braidforge::exact
