#include "dnh/ktheory.hpp"

#include <exception>

namespace dnh {

Rat ktheory_integral(const Rpp& n, const P1Gauge& gauge, const Rat& r) {
  std::vector<Factored> terms;
  for (const FixedPoint& fp : enumerate_fixed_points(n)) {
    VirtualRep v = evee_fixed_point(n, fp, gauge);
    terms.push_back(restrict_bracket_antidiagonal(khat_bracket(v.negated())));
  }
  return sum_and_specialize_brackets(terms, r, Rat(1));
}

namespace ref {
QSeries ktheory_series(const Partition& shape, const P1Gauge& gauge,
                       long order, const Rat& r) {
  QSeries s = QSeries::zero(order);
  s.min_exp = 0;
  s.c.assign(order + 1, Rat(0));
  for (long n = 0; n <= order; ++n)
    for (const Rpp& rp : enumerate_rpps(shape, n))
      s.c[n] += ktheory_integral(rp, gauge, r);
  return s;
}
}  // namespace ref

QSeries ktheory_series(const Partition& shape, const P1Gauge& gauge,
                       long order, const Rat& r) {
  std::vector<Rpp> rpps;
  std::vector<long> sizes;
  for (long n = 0; n <= order; ++n)
    for (Rpp& rp : enumerate_rpps(shape, n)) {
      sizes.push_back(n);
      rpps.push_back(std::move(rp));
    }
  std::vector<Rat> vals(rpps.size(), Rat(0));
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(rpps.size()); ++i) {
    try {
      vals[i] = ktheory_integral(rpps[i], gauge, r);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  QSeries s = QSeries::zero(order);
  s.min_exp = 0;
  s.c.assign(order + 1, Rat(0));
  for (size_t i = 0; i < rpps.size(); ++i) s.c[sizes[i]] += vals[i];
  return s;
}

Rat f_lambda_bracket(const Partition& shape, const Rat& r) {
  // t1^(m/2) - t1^(-m/2) at t1 = r^2.
  auto b = [&](long m) -> Rat {
    if (m < 0) m = -m;
    return rat_pow(r, m) - rat_pow(r, -m);
  };
  Rat f(1);
  auto boxes = shape.boxes();
  for (Box bx : boxes)
    if (bx.i != bx.j) f /= b(bx.j - bx.i);
  for (Box p : boxes)
    for (Box q : boxes) {
      long u = p.i - p.j + q.j - q.i;  // i - j + k - l
      if (u != 0) f *= b(u);
      if (1 + u != 0) f /= b(1 + u);
    }
  return f;
}

UniversalTriple<Rat> universal_closed_ktheory(const Partition& shape,
                                              long order, const Rat& r) {
  long d = shape.size();
  Rat f = f_lambda_bracket(shape, r);
  UniversalTriple<Rat> t;
  t.A = QSeries::constant(minus_one_pow(d) / (f * f), order);
  QSeries hooks = hook_binomial_neg<Rat>(shape, order);
  t.B = hooks.scaled(minus_one_pow(shape.n_stat()) * f);
  t.C = hooks.scaled(minus_one_pow(d + shape.n_conj_stat()) * f);
  return t;
}

}  // namespace dnh
