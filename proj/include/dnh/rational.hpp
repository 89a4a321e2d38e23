#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace dnh {

/// Exact rational scalar. Backed by GMP; always stored reduced with a
/// positive denominator (mpq_class canonicalizes on arithmetic).
using Rat = mpq_class;

inline Rat rat_of(long n) { return Rat(n); }

inline Rat rat_of(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// r^e for any integer e; errors on 0^negative.
inline Rat rat_pow(const Rat& r, long e) {
  if (e == 0) return Rat(1);
  if (r == 0) {
    if (e < 0) throw std::domain_error("rat_pow: zero to negative power");
    return Rat(0);
  }
  Rat base = e > 0 ? r : Rat(1) / r;
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  Rat out(num, den);
  out.canonicalize();
  return out;
}

inline int rat_sign(const Rat& r) { return sgn(r); }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

inline Rat minus_one_pow(long e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); }

/// Small nonzero random rationals for sampling equivariant parameters.
/// Numerators up to 40, denominators up to 7; never zero.
inline Rat random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 40);
  std::uniform_int_distribution<int> den(1, 7);
  std::uniform_int_distribution<int> coin(0, 1);
  Rat r = rat_of(num(rng), den(rng));
  return coin(rng) ? r : -r;
}

}  // namespace dnh
