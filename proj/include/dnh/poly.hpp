#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dnh/rational.hpp"

namespace dnh {

/// Dense univariate polynomial over an exact field K. Coefficients are
/// stored from degree 0 up, with no trailing zero (the zero polynomial has
/// an empty coefficient vector).
template <class K>
struct Poly {
  std::vector<K> c;

  Poly() = default;
  explicit Poly(K k) {
    if (!(k == K(0))) c.push_back(std::move(k));
  }
  static Poly monomial(K k, int deg) {
    Poly p;
    if (k == K(0)) return p;
    p.c.assign(deg + 1, K(0));
    p.c.back() = std::move(k);
    return p;
  }
  static Poly x() { return monomial(K(1), 1); }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
  const K& lead() const { return c.back(); }

  void trim() {
    while (!c.empty() && c.back() == K(0)) c.pop_back();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, K(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == K(0)) continue;
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const K& k) const {
    if (k == K(0)) return Poly();
    Poly r = *this;
    for (auto& x : r.c) x = x * k;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

  K eval(const K& x0) const {
    K acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x0 + *it;
    return acc;
  }

  /// Euclidean division: *this = q*d + r with deg r < deg d.
  static void divmod(const Poly& a, const Poly& d, Poly& q, Poly& r) {
    if (d.is_zero()) throw std::domain_error("poly division by zero");
    q = Poly();
    r = a;
    if (a.degree() < d.degree()) return;
    q.c.assign(a.degree() - d.degree() + 1, K(0));
    K inv_lead = K(1) / d.lead();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int k = r.degree() - d.degree();
      K factor = r.lead() * inv_lead;
      q.c[k] = factor;
      for (int i = 0; i <= d.degree(); ++i) r.c[k + i] -= factor * d.c[i];
      r.trim();
    }
  }

  /// Exact quotient; throws if the division leaves a remainder.
  friend Poly operator/(const Poly& a, const Poly& d) {
    Poly q, r;
    divmod(a, d, q, r);
    if (!r.is_zero()) throw std::domain_error("poly division not exact");
    return q;
  }

  bool divisible_by(const Poly& d) const {
    Poly q, r;
    divmod(*this, d, q, r);
    return r.is_zero();
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(K(1) / lead());
  }

  /// Lexicographic order on (degree, coefficients); used as a map key.
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (size_t i = a.c.size(); i-- > 0;) {
      if (a.c[i] < b.c[i]) return true;
      if (b.c[i] < a.c[i]) return false;
    }
    return false;
  }
};

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> q, r;
    Poly<K>::divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

template <class K>
Poly<K> poly_pow(const Poly<K>& p, int e) {
  Poly<K> r(K(1));
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

/// Univariate rational function over Rat, reduced with monic denominator.
/// Serves as the exact field Q(s1) for symbolic anti-diagonal computations.
class RatFn {
 public:
  Poly<Rat> num, den;

  RatFn() : den(Rat(1)) {}
  RatFn(int v) : num(Rat(v)), den(Rat(1)) {}
  RatFn(const Rat& v) : num(v), den(Rat(1)) {}
  RatFn(Poly<Rat> n, Poly<Rat> d) : num(std::move(n)), den(std::move(d)) {
    reduce();
  }
  static RatFn var() { return RatFn(Poly<Rat>::x(), Poly<Rat>(Rat(1))); }
  /// c * x^e, any integer e.
  static RatFn monomial(const Rat& c, int e) {
    if (e >= 0) return RatFn(Poly<Rat>::monomial(c, e), Poly<Rat>(Rat(1)));
    return RatFn(Poly<Rat>(c), Poly<Rat>::monomial(Rat(1), -e));
  }

  bool is_zero() const { return num.is_zero(); }

  void reduce() {
    if (den.is_zero()) throw std::domain_error("RatFn: zero denominator");
    if (num.is_zero()) {
      den = Poly<Rat>(Rat(1));
      return;
    }
    Poly<Rat> g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = num / g;
      den = den / g;
    }
    Rat l = den.lead();
    if (!(l == Rat(1))) {
      den = den.scaled(Rat(1) / l);
      num = num.scaled(Rat(1) / l);
    }
  }

  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    return RatFn(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFn operator-(const RatFn& a, const RatFn& b) {
    return RatFn(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFn operator*(const RatFn& a, const RatFn& b) {
    return RatFn(a.num * b.num, a.den * b.den);
  }
  friend RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw std::domain_error("RatFn division by zero");
    return RatFn(a.num * b.den, a.den * b.num);
  }
  RatFn operator-() const {
    RatFn r = *this;
    r.num = Poly<Rat>() - r.num;
    return r;
  }
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

  friend bool operator==(const RatFn& a, const RatFn& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator==(const RatFn& a, int v) { return a == RatFn(v); }
  friend bool operator<(const RatFn& a, const RatFn& b) {
    if (!(a.num == b.num)) return a.num < b.num;
    return a.den < b.den;
  }

  RatFn pow(long e) const {
    if (e == 0) return RatFn(1);
    RatFn base = e > 0 ? *this : RatFn(1) / *this;
    long k = e > 0 ? e : -e;
    RatFn r(1);
    for (long i = 0; i < k; ++i) r *= base;
    return r;
  }

  /// Evaluate at a rational point (denominator must not vanish there).
  Rat eval(const Rat& x0) const {
    Rat d = den.eval(x0);
    if (d == 0) throw std::domain_error("RatFn: pole at evaluation point");
    return num.eval(x0) / d;
  }

  std::string str(const std::string& varname = "x") const;
};

inline std::string poly_str(const Poly<Rat>& p, const std::string& varname) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    const Rat& a = p.c[d];
    if (a == 0) continue;
    if (!out.empty()) out += (a > 0) ? " + " : " - ";
    else if (a < 0) out += "-";
    Rat mag = abs(a);
    bool unit = (mag == 1) && d > 0;
    if (!unit) out += rat_str(mag);
    if (d > 0) {
      if (!unit) out += "*";
      out += varname;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

inline std::string RatFn::str(const std::string& varname) const {
  if (is_zero()) return "0";
  std::string n = poly_str(num, varname);
  if (den == Poly<Rat>(Rat(1))) return n;
  return "(" + n + ")/(" + poly_str(den, varname) + ")";
}

}  // namespace dnh
