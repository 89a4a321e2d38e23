#pragma once

#include <string>
#include <vector>

#include "dnh/localization.hpp"
#include "dnh/series.hpp"
#include "dnh/specialize.hpp"

namespace dnh {

/// Total space of L1 + L2 over a genus-g curve, recorded by its Chern
/// numbers: the only data the invariants depend on.
struct LocalCurveGeometry {
  long g = 0;
  long k1 = 0;
  long k2 = 0;
};

/// Evaluation context for the equivariant parameters. Anti-diagonal
/// contexts restrict s2 = -s1 factor-by-factor before summing; the field K
/// is Rat for numeric sampling and RatFn (rational functions of s1) for the
/// exact symbolic runs.
template <class K>
struct CohCtx {
  K s1;
  K s2;
  bool antidiagonal = false;

  static CohCtx antidiag(K s1v) {
    return {s1v, K(0) - s1v, true};
  }
  static CohCtx full(K s1v, K s2v) { return {std::move(s1v), std::move(s2v), false}; }
};

inline CohCtx<RatFn> symbolic_antidiagonal_ctx() {
  return CohCtx<RatFn>::antidiag(RatFn::var());
}

/// The stable-pair residue integral over the double nested Hilbert scheme
/// attached to one reversed plane partition, on P^1 (g = 0): the
/// C^*-fixed-point sum of Euler classes of the dual obstruction theory,
/// specialized at s3 = 0.
template <class K>
K pt_integral(const Rpp& n, const P1Gauge& gauge, const CohCtx<K>& ctx) {
  std::vector<Factored> terms;
  for (const FixedPoint& fp : enumerate_fixed_points(n)) {
    VirtualRep v = evee_fixed_point(n, fp, gauge);
    Factored t = euler_class(v.negated());
    if (ctx.antidiagonal) t = restrict_antidiagonal(t);
    terms.push_back(std::move(t));
  }
  return sum_and_specialize<K>(terms, ctx.s1, ctx.s2, K(0));
}

template <class K>
struct UniversalTriple {
  Series<K> A, B, C;
};

/// prod over boxes of (1 - (-q)^h), truncated; the shape every closed B and
/// C series shares.
template <class K>
Series<K> hook_binomial_neg(const Partition& shape, long order) {
  Series<K> s = Series<K>::constant(K(1), order);
  for (int h : shape.hooks()) {
    Series<K> f = Series<K>::constant(K(1), order);
    if (h <= order) f.set_coeff(h, K(minus_one_pow(h + 1)));  // 1 - (-q)^h
    s *= f;
  }
  return s;
}

/// Closed anti-diagonal universal series: A constant, B and C hook
/// binomials with their sign and s1 normalizations.
template <class K>
UniversalTriple<K> universal_closed_antidiagonal(const Partition& shape,
                                                 long order, const K& s1) {
  long d = shape.size();
  K h_prod{shape.hook_product()};
  K s1_d = K(1);
  for (long i = 0; i < d; ++i) s1_d = s1_d * s1;
  UniversalTriple<K> t;
  K a_val = K(minus_one_pow(d)) * s1_d * s1_d * h_prod * h_prod;
  t.A = Series<K>::constant(a_val, order);
  Series<K> hooks = hook_binomial_neg<K>(shape, order);
  K b_lead = K(minus_one_pow(shape.n_stat())) / (s1_d * h_prod);
  K c_lead = K(minus_one_pow(shape.n_conj_stat() + d)) / (s1_d * h_prod);
  t.B = hooks.scaled(b_lead);
  t.C = hooks.scaled(c_lead);
  return t;
}

/// Degree-1 fully equivariant universal series: A = s1 s2,
/// B = (1+q)/s1, C = (1+q)/s2.
template <class K>
UniversalTriple<K> universal_closed_full_deg1(long order, const K& s1,
                                              const K& s2) {
  UniversalTriple<K> t;
  t.A = Series<K>::constant(s1 * s2, order);
  Series<K> one_plus_q = Series<K>::constant(K(1), order);
  if (order >= 1) one_plus_q.set_coeff(1, K(1));
  t.B = one_plus_q.scaled(K(1) / s1);
  t.C = one_plus_q.scaled(K(1) / s2);
  return t;
}

/// Leading term of the local-curve generating series (size-0 reversed plane
/// partition) under s2 = -s1, from its closed form.
template <class K>
K leading_term_closed(const Partition& shape, long g, long k1, long k2,
                      const K& s1) {
  long d = shape.size();
  long sign_exp = d * (g - 1 + k2) + shape.n_stat() * k1 + shape.n_conj_stat() * k2;
  K base = K(shape.hook_product());
  for (long i = 0; i < d; ++i) base = base * s1;
  long e = 2 * g - 2 - k1 - k2;
  K out{minus_one_pow(sign_exp)};
  K p(1);
  long k = e > 0 ? e : -e;
  for (long i = 0; i < k; ++i) p = p * base;
  if (e >= 0) {
    K r = out * p;
    return r;
  }
  K r = out / p;
  return r;
}

/// Same quantity localized: Euler class of minus the size-0 virtual normal
/// bundle, restricted to the anti-diagonal.
template <class K>
K leading_term_localized(const Partition& shape, long g, long k1, long k2,
                         const K& s1) {
  VirtualRep nv = nvir_size0(shape, g, k1, k2);
  Factored e = restrict_antidiagonal(euler_class(nv.negated()));
  return evaluate_factored<K>(e, s1, K(0), K(0));
}

namespace ref {
/// Serial reference implementation, kept for testing the parallel kernel.
template <class K>
Series<K> pt_local_series(const Partition& shape, const P1Gauge& gauge,
                          long order, const CohCtx<K>& ctx) {
  Series<K> s = Series<K>::zero(order);
  s.min_exp = 0;
  s.c.assign(order + 1, K(0));
  for (long n = 0; n <= order; ++n)
    for (const Rpp& r : enumerate_rpps(shape, n))
      s.c[n] = s.c[n] + pt_integral<K>(r, gauge, ctx);
  return s;
}
}  // namespace ref

/// Local-curve generating series for one Young diagram over P^1: sum over
/// reversed plane partitions of size <= order of pt_integral * q^size.
/// OpenMP-parallel over the fillings with a deterministic ordered
/// reduction.
template <class K>
Series<K> pt_local_series(const Partition& shape, const P1Gauge& gauge,
                          long order, const CohCtx<K>& ctx) {
  std::vector<Rpp> rpps;
  std::vector<long> sizes;
  for (long n = 0; n <= order; ++n)
    for (Rpp& r : enumerate_rpps(shape, n)) {
      sizes.push_back(n);
      rpps.push_back(std::move(r));
    }
  std::vector<K> vals(rpps.size(), K(0));
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(rpps.size()); ++i) {
    try {
      vals[i] = pt_integral<K>(rpps[i], gauge, ctx);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  Series<K> s;
  s.grid_den = 1;
  s.min_exp = 0;
  s.order = order;
  s.c.assign(order + 1, K(0));
  for (size_t i = 0; i < rpps.size(); ++i)
    s.c[sizes[i]] = s.c[sizes[i]] + vals[i];
  return s;
}

/// Square-root branch hint for the extraction: the leading coefficient of
/// C, obtained as a ratio of closed leading terms.
template <class K>
K extraction_hint(const Partition& shape, const K& s1) {
  return leading_term_closed(shape, 0, 0, 1, s1) /
         leading_term_closed(shape, 0, 0, 0, s1);
}

/// Fully equivariant size-0 leading term: the Euler class of minus the
/// virtual normal bundle, with both parameters kept independent.
template <class K>
K leading_term_full(const Partition& shape, long g, long k1, long k2,
                    const K& s1, const K& s2) {
  VirtualRep nv = nvir_size0(shape, g, k1, k2);
  return evaluate_factored<K>(euler_class(nv.negated()), s1, s2, K(0));
}

/// Branch hint for a fully equivariant extraction, from the leading-term
/// multiplicativity C(0) = L(0,0,1)/L(0,0,0).
template <class K>
K extraction_hint_full(const Partition& shape, const K& s1, const K& s2) {
  return leading_term_full(shape, 0, 0, 1, s1, s2) /
         leading_term_full(shape, 0, 0, 0, s1, s2);
}

/// Solve the universal series from the three basis geometries
/// (P^1,O,O), (P^1,O(-1),O(-1)), (P^1,O,O(-2)):
/// A = Z1^-1, C = sqrt(Z1/Z3), B = (Z1/Z2)/C.
template <class K>
UniversalTriple<K> universal_extract(const Partition& shape, long order,
                                     const CohCtx<K>& ctx, const K& sqrt_hint) {
  Series<K> z1 = pt_local_series(shape, P1Gauge(0, 0), order, ctx);
  Series<K> z2 = pt_local_series(shape, P1Gauge(-1, -1), order, ctx);
  Series<K> z3 = pt_local_series(shape, P1Gauge(0, -2), order, ctx);
  UniversalTriple<K> t;
  t.A = z1.inverse();
  t.C = (z1 * z3.inverse()).sqrt(sqrt_hint);
  t.B = z1 * z2.inverse() * t.C.inverse();
  return t;
}

struct CheckReport {
  bool pass = true;
  std::string detail;
};

/// Calabi-Yau sign law: with k1 + k2 = -2, every fixed point contributes
/// the constant sign (-1)^(k1(c+|shape|) + |shape| + |n|) once restricted,
/// and the integral is that sign times the number of fixed points.
CheckReport cy_sign_check(const Rpp& n, long k1, long k2);

std::vector<Rat> sample_rationals(uint64_t seed, int count);

}  // namespace dnh
