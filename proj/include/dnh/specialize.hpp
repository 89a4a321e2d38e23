#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dnh/factored.hpp"
#include "dnh/poly.hpp"

namespace dnh {

struct PoleAtSpecialization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A random sample happened to kill a factor that is nonzero as a form;
/// callers re-draw and retry.
struct UnluckySample : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Accumulates a sum of fractions num_i / prod f_ij^e_ij whose denominators
/// are given as multisets of monic polynomial factors. Keeping denominators
/// factored makes the final cancellation a matter of trial division, with
/// no multivariate (or even univariate) gcd.
template <class K>
class FractionSum {
 public:
  void add_term(K scalar, const std::vector<std::pair<Poly<K>, int>>& facs) {
    Poly<K> tnum(std::move(scalar));
    std::map<Poly<K>, long> tden;
    for (const auto& [p, e] : facs) {
      if (e > 0)
        tnum *= poly_pow(p, e);
      else if (e < 0)
        tden[p] += -e;
    }
    // Raise both running and incoming terms to the union denominator.
    for (const auto& [f, e] : tden) {
      long have = den_.count(f) ? den_[f] : 0;
      if (e > have) {
        num_ *= poly_pow(f, static_cast<int>(e - have));
        den_[f] = e;
      }
    }
    for (const auto& [f, e] : den_) {
      auto it = tden.find(f);
      long te = it == tden.end() ? 0 : it->second;
      if (e > te) tnum *= poly_pow(f, static_cast<int>(e - te));
    }
    num_ += tnum;
  }

  void reduce() {
    for (auto it = den_.begin(); it != den_.end();) {
      while (it->second > 0 && !num_.is_zero() &&
             num_.divisible_by(it->first)) {
        num_ = num_ / it->first;
        --it->second;
      }
      if (it->second == 0)
        it = den_.erase(it);
      else
        ++it;
    }
  }

  /// Evaluate the reduced sum at x = x0, dividing out any common
  /// (x - x0) power first. Throws PoleAtSpecialization if a pole survives.
  K value_at(const K& x0) {
    reduce();
    if (num_.is_zero()) return K(0);
    Poly<K> lin;  // x - x0
    lin.c = {K(0) - x0, K(1)};
    long den_val = 0;
    K den_rest(1);
    for (const auto& [f, e] : den_) {
      Poly<K> g = f;
      while (!g.is_zero() && g.eval(x0) == K(0)) {
        g = g / lin;
        den_val += e;
      }
      K v = g.eval(x0);
      for (long k = 0; k < e; ++k) den_rest *= v;
    }
    Poly<K> n = num_;
    long num_val = 0;
    while (num_val < den_val && n.eval(x0) == K(0)) {
      n = n / lin;
      ++num_val;
    }
    if (num_val < den_val)
      throw PoleAtSpecialization("pole survives specialization");
    return n.eval(x0) / den_rest;
  }

  const Poly<K>& numerator() const { return num_; }
  const std::map<Poly<K>, long>& denominator() const { return den_; }

 private:
  Poly<K> num_;
  std::map<Poly<K>, long> den_;
};

/// Converts a product of linear forms into a univariate fraction in s3,
/// with s1, s2 evaluated in the field K.
template <class K>
void linear_term_to_fraction(const Factored& f, const K& s1, const K& s2,
                             K& scalar,
                             std::vector<std::pair<Poly<K>, int>>& facs) {
  if (f.kind() != FactorKind::linear)
    throw std::invalid_argument("expected linear-form factors");
  scalar = K(f.scalar());
  facs.clear();
  for (const auto& [key, e] : f.factors()) {
    K v = K(Rat(key[0])) * s1 + K(Rat(key[1])) * s2;
    if (key[2] == 0) {
      if (v == K(0))
        throw UnluckySample("sample killed a nonzero linear form");
      K p = K(1);
      long k = e > 0 ? e : -e;
      for (long i = 0; i < k; ++i) p = p * v;
      if (e > 0)
        scalar = scalar * p;
      else
        scalar = scalar / p;
      continue;
    }
    // c3*x + v = c3 * (x + v/c3), monic factor recorded.
    K c3{Rat(key[2])};
    K sc = K(1);
    long k = e > 0 ? e : -e;
    for (long i = 0; i < k; ++i) sc = sc * c3;
    if (e > 0)
      scalar = scalar * sc;
    else
      scalar = scalar / sc;
    Poly<K> mon;
    mon.c = {v / c3, K(1)};
    facs.emplace_back(std::move(mon), static_cast<int>(e));
  }
}

/// Converts a product of bracket factors into a univariate fraction in
/// u = t3^(1/2), with t1 = r^2, t2 = r^-2 (anti-diagonal restriction).
inline void bracket_term_to_fraction(
    const Factored& f, const Rat& r, Rat& scalar,
    std::vector<std::pair<Poly<Rat>, int>>& facs) {
  if (f.kind() != FactorKind::bracket)
    throw std::invalid_argument("expected bracket factors");
  scalar = f.scalar();
  facs.clear();
  Poly<Rat> x = Poly<Rat>::x();
  for (const auto& [key, e] : f.factors()) {
    if ((key[0] - key[1]) % 2 != 0 || key[2] % 2 != 0)
      throw std::domain_error("bracket evaluation needs integral weights");
    long p = (key[0] - key[1]) / 2;
    long m = key[2] / 2;
    Rat rp = rat_pow(r, p);
    if (m == 0) {
      Rat v = rp - Rat(1) / rp;  // r^p - r^-p
      if (v == 0) throw UnluckySample("bracket factor vanished at sample");
      scalar *= rat_pow(v, e);
      continue;
    }
    long q = m > 0 ? m : -m;
    // [t^mu] = u^{-q} * lead * (x^{2q} - c) with the sign of m deciding the
    // orientation.
    Rat lead, c;
    if (m > 0) {
      lead = rp;
      c = Rat(1) / (rp * rp);
    } else {
      lead = -Rat(1) / rp;
      c = rp * rp;
    }
    scalar *= rat_pow(lead, e);
    Poly<Rat> mon = Poly<Rat>::monomial(Rat(1), 2 * static_cast<int>(q)) -
                    Poly<Rat>(c);
    facs.emplace_back(std::move(mon), static_cast<int>(e));
    facs.emplace_back(x, static_cast<int>(-q * e));
  }
}

/// Exact sum of factored-rational terms, specialized at var = value.
/// Each term is converted to a univariate fraction over the residual field
/// K, the terms are summed exactly, the result reduced, and the value
/// taken; a genuine pole throws.
template <class K>
K sum_and_specialize(const std::vector<Factored>& terms, const K& s1,
                     const K& s2, const K& value) {
  FractionSum<K> acc;
  K scalar;
  std::vector<std::pair<Poly<K>, int>> facs;
  for (const Factored& t : terms) {
    if (t.is_zero()) continue;
    linear_term_to_fraction(t, s1, s2, scalar, facs);
    acc.add_term(std::move(scalar), facs);
  }
  return acc.value_at(value);
}

inline Rat sum_and_specialize_brackets(const std::vector<Factored>& terms,
                                       const Rat& r, const Rat& value) {
  FractionSum<Rat> acc;
  Rat scalar;
  std::vector<std::pair<Poly<Rat>, int>> facs;
  for (const Factored& t : terms) {
    if (t.is_zero()) continue;
    bracket_term_to_fraction(t, r, scalar, facs);
    acc.add_term(std::move(scalar), facs);
  }
  return acc.value_at(value);
}

/// Direct evaluation of a factored product with all three variables fixed;
/// used where no specialization limit is involved.
template <class K>
K evaluate_factored(const Factored& f, const K& s1, const K& s2,
                    const K& s3) {
  if (f.kind() != FactorKind::linear)
    throw std::invalid_argument("expected linear-form factors");
  if (f.is_zero()) return K(0);
  K out{f.scalar()};
  for (const auto& [key, e] : f.factors()) {
    K v = K(Rat(key[0])) * s1 + K(Rat(key[1])) * s2 + K(Rat(key[2])) * s3;
    if (v == K(0)) throw PoleAtSpecialization("zero factor in evaluation");
    long k = e > 0 ? e : -e;
    K p(1);
    for (long i = 0; i < k; ++i) p = p * v;
    if (e > 0) {
      K tmp = out * p;
      out = tmp;
    } else {
      K tmp = out / p;
      out = tmp;
    }
  }
  return out;
}

}  // namespace dnh
