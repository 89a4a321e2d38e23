#include "dnh/gwpt.hpp"

#include <sstream>

namespace dnh {

QSeries euler_series(const Partition& shape, long g, long order) {
  QSeries s = QSeries::constant(Rat(1), order);
  for (int h : shape.hooks()) s *= one_minus_qh_pow<Rat>(h, 2 * g - 2, order);
  return s;
}

QSeries pt_euler_series(long d, const LocalCurveGeometry& geom, long order) {
  QSeries total = QSeries::zero(order);
  for (const Partition& shape : enumerate_partitions(static_cast<int>(d))) {
    long f = f_lambda_g(shape, geom.g, geom.k1, geom.k2);
    if (f > order) continue;
    QSeries term = euler_series(shape, geom.g, order - f).shifted(f);
    total += term;
  }
  return total;
}

ShiftedSeries pt_series_closed(long d, const LocalCurveGeometry& geom,
                               long order) {
  const long g = geom.g, k1 = geom.k1, k2 = geom.k2;
  ShiftedSeries out;
  out.s1_power = d * (2 * g - 2 - k1 - k2);
  out.q = QSeries::zero(order);
  for (const Partition& shape : enumerate_partitions(static_cast<int>(d))) {
    long f = f_lambda_g(shape, g, k1, k2);
    if (f > order) continue;
    // (-1)^(d k2 + f) * H^(2g-2-k1-k2) * q^f * prod (1-(-q)^h)^(k1+k2)
    Rat coeff = minus_one_pow(d * k2 + f) *
                rat_pow(shape.hook_product(), 2 * g - 2 - k1 - k2);
    QSeries hooks = hook_binomial_neg<Rat>(shape, order - f).pow(k1 + k2);
    out.q += hooks.scaled(coeff).shifted(f);
  }
  return out;
}

ShiftedSeries pt_series_universal(long d, const LocalCurveGeometry& geom,
                                  long order) {
  const long g = geom.g, k1 = geom.k1, k2 = geom.k2;
  ShiftedSeries out;
  out.s1_power = d * (2 * g - 2 - k1 - k2);
  out.q = QSeries::zero(order);
  RatFn x = RatFn::var();
  for (const Partition& shape : enumerate_partitions(static_cast<int>(d))) {
    long f = f_lambda_g(shape, g, k1, k2);
    long rel = order - f;
    if (rel < 0) continue;
    auto triple = universal_closed_antidiagonal<RatFn>(shape, rel, x);
    Series<RatFn> term =
        triple.A.pow(g - 1) * triple.B.pow(k1) * triple.C.pow(k2);
    term = term.shifted(f);
    // Every coefficient is a rational multiple of the same global monomial
    // s1^s1_power; peel it off.
    for (long i = 0; i < term.size(); ++i) {
      const RatFn& v = term.c[i];
      if (v.is_zero()) continue;
      RatFn mono = RatFn::monomial(Rat(1), static_cast<int>(out.s1_power));
      RatFn ratio = v / mono;
      if (ratio.den.degree() != 0 || ratio.num.degree() > 0)
        throw std::logic_error("universal assembly: non-monomial coefficient");
      Rat c = ratio.num.is_zero() ? Rat(0) : ratio.num.c[0];
      long e = term.min_exp + i;
      if (e <= order) {
        QSeries add = QSeries::monomial(c, e, order);
        out.q += add;
      }
    }
    out.q = out.q.truncated(std::min(out.q.order, term.order));
  }
  return out;
}

GwSeries gw_series(long d, const LocalCurveGeometry& geom, long window) {
  const long g = geom.g, k1 = geom.k1, k2 = geom.k2;
  const long k12 = k1 + k2;
  GwSeries out;
  out.s1_power = d * (2 * g - 2 - k1 - k2);
  out.i_power_mod4 = static_cast<int>(((-d * k12) % 4 + 4) % 4);
  Rat prefactor = minus_one_pow(d * (g - 1 - k2));
  auto shapes = enumerate_partitions(static_cast<int>(d));
  long val_min = 0;
  bool have_val = false;
  for (const Partition& shape : shapes) {
    long v = shape.total_content() * (k1 - k2) - k12 * shape.hook_sum();
    if (!have_val || v < val_min) val_min = v;
    have_val = true;
  }
  Series<Rat> total;
  bool first = true;
  for (const Partition& shape : shapes) {
    long val_units = shape.total_content() * (k1 - k2) - k12 * shape.hook_sum();
    // Relative precision so every term reaches val_min + 2*window in
    // absolute units; series products preserve relative precision.
    long term_order = (val_min - val_units) + 2 * window + 8;
    Series<Rat> term = Series<Rat>::constant(Rat(1), term_order, 2);
    // Q^(c_lambda (k1-k2)/2)
    term = term.shifted(shape.total_content() * (k1 - k2));
    for (int h : shape.hooks()) {
      Series<Rat> bracket = Series<Rat>::zero(term_order, 2);
      bracket.grow_front(-h);
      bracket.set_coeff(h, Rat(1));
      bracket.set_coeff(-h, Rat(-1));  // Q^(h/2) - Q^(-h/2)
      term *= bracket.pow(k12);
      term = term.scaled(rat_pow(Rat(h), 2 * g - 2 - k1 - k2));
    }
    if (first) {
      total = term;
      first = false;
    } else {
      total += term;
    }
  }
  out.s = total.scaled(prefactor);
  return out;
}

CheckReport gw_pt_check(long d, const LocalCurveGeometry& geom, long window) {
  CheckReport rep;
  const long g = geom.g, k1 = geom.k1, k2 = geom.k2;
  const long c = d * (2 - 2 * g + k1 + k2);

  GwSeries gw = gw_series(d, geom, window + 4);
  long total_i = ((c + gw.i_power_mod4) % 4 + 4) % 4;
  if (total_i % 2 != 0) {
    rep.pass = false;
    rep.detail = "odd residual power of i after assembling the prefactor";
    return rep;
  }
  // (-i)^c i^(gw) = (-1)^c (i^2)^(total/2) = (-1)^(c + total/2)
  Rat sign = minus_one_pow(c + total_i / 2);
  Series<Rat> lhs = gw.s.scaled(sign);

  long f_min = 0;
  bool have_f = false;
  for (const Partition& shape : enumerate_partitions(static_cast<int>(d))) {
    long f = f_lambda_g(shape, g, k1, k2);
    if (!have_f || f < f_min) f_min = f;
    have_f = true;
  }
  ShiftedSeries pt = pt_series_closed(d, geom, f_min + window + 6);
  if (pt.s1_power != gw.s1_power) {
    rep.pass = false;
    rep.detail = "global s1 powers disagree";
    return rep;
  }
  // RHS = Q^(-c/2) PT_d(X; -Q) on the doubled grid.
  Series<Rat> rhs = pt.q.substitute_neg().regrid(2).shifted(-c);

  // All half-integral exponents of the normalized LHS must vanish.
  Series<Rat> normalized = lhs.shifted(c);
  for (long i = 0; i < normalized.size(); ++i) {
    long e = normalized.min_exp + i;
    if (e % 2 != 0 && !(normalized.c[i] == Rat(0))) {
      rep.pass = false;
      std::ostringstream os;
      os << "surviving half-integer exponent " << e << "/2 in GW side";
      rep.detail = os.str();
      return rep;
    }
  }

  long v_lhs = lhs.valuation(), v_rhs = rhs.valuation();
  long lo = std::min(v_lhs, v_rhs);
  long hi = lo + 2 * window;
  if (lhs.order < hi || rhs.order < hi) {
    rep.pass = false;
    rep.detail = "internal: insufficient precision for requested window";
    return rep;
  }
  for (long e = lo; e <= hi; ++e) {
    if (!(lhs.coeff(e) == rhs.coeff(e))) {
      rep.pass = false;
      std::ostringstream os;
      os << "first mismatch at Q^(" << e << "/2): GW side "
         << rat_str(lhs.coeff(e)) << ", PT side " << rat_str(rhs.coeff(e));
      rep.detail = os.str();
      return rep;
    }
  }
  return rep;
}

CheckReport conifold_check(long dmax, long n_order) {
  CheckReport rep;
  LocalCurveGeometry resolved_conifold{0, -1, -1};
  // Left side: 1 + sum_d Q^d PT_d(X;-q), organized by Q-degree.
  std::vector<QSeries> lhs(dmax + 1, QSeries::zero(n_order));
  lhs[0] = QSeries::constant(Rat(1), n_order);
  for (long d = 1; d <= dmax; ++d) {
    ShiftedSeries pt = pt_series_closed(d, resolved_conifold, n_order);
    if (pt.s1_power != 0) {
      rep.pass = false;
      rep.detail = "conifold PT series has residual s1 dependence";
      return rep;
    }
    lhs[d] = pt.q.substitute_neg().truncated(n_order);

    // Intermediate identity: the same slice from the principal
    // specialization of the Schur functions of lambda and its conjugate.
    QSeries schur_form = QSeries::zero(n_order);
    for (const Partition& shape : enumerate_partitions(static_cast<int>(d))) {
      QSeries s_lam =
          rpp_count_series(shape, n_order).shifted(shape.n_stat());
      QSeries s_conj = rpp_count_series(shape.conjugate(), n_order)
                           .shifted(shape.n_conj_stat());
      QSeries piece = (s_lam * s_conj).shifted(d).scaled(minus_one_pow(d));
      schur_form += piece;
    }
    schur_form = schur_form.truncated(n_order);
    if (!lhs[d].equals_through(schur_form, n_order)) {
      rep.pass = false;
      rep.detail =
          "Schur specialization form disagrees at Q^" + std::to_string(d);
      return rep;
    }
  }
  // Right side: prod_{n>=1} (1 - Q q^n)^n.
  std::vector<QSeries> rhs(dmax + 1, QSeries::zero(n_order));
  rhs[0] = QSeries::constant(Rat(1), n_order);
  for (long n = 1; n <= n_order; ++n) {
    // (1 - Q q^n)^n = sum_j binom(n,j) (-1)^j Q^j q^(n j)
    std::vector<QSeries> next(dmax + 1, QSeries::zero(n_order));
    for (long dq = 0; dq <= dmax; ++dq) {
      Rat binom(1);
      for (long j = 0; j <= std::min(n, dmax - dq); ++j) {
        if (j > 0) binom = binom * Rat(n - j + 1) / Rat(j);
        if (n * j > n_order) break;
        QSeries piece = rhs[dq].shifted(n * j).truncated(n_order);
        next[dq + j] += piece.scaled(binom * minus_one_pow(j));
      }
    }
    rhs = std::move(next);
  }
  for (long dq = 0; dq <= dmax; ++dq) {
    if (!lhs[dq].equals_through(rhs[dq], n_order)) {
      long bad = -1;
      for (long e = 0; e <= n_order; ++e)
        if (!(lhs[dq].coeff(e) == rhs[dq].coeff(e))) {
          bad = e;
          break;
        }
      rep.pass = false;
      std::ostringstream os;
      os << "mismatch at Q^" << dq << " q^" << bad << ": left "
         << rat_str(lhs[dq].coeff(bad)) << ", right "
         << rat_str(rhs[dq].coeff(bad));
      rep.detail = os.str();
      return rep;
    }
  }
  return rep;
}

}  // namespace dnh
