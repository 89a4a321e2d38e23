#pragma once

#include <string>
#include <vector>

#include "dnh/invariants.hpp"

namespace dnh {

/// A Laurent q-series times a global monomial s1^s1_power; every assembled
/// PT or GW series under the anti-diagonal restriction has this shape.
struct ShiftedSeries {
  QSeries q;
  long s1_power = 0;
};

/// Euler-characteristic series of the double nested Hilbert schemes of a
/// genus-g curve: prod over boxes (1-q^h)^(2g-2).
QSeries euler_series(const Partition& shape, long g, long order);

/// sum over |lambda| = d of q^f * prod (1-q^h)^(2g-2): the Euler
/// characteristics of the stable-pair moduli spaces, indexed by chi = n.
QSeries pt_euler_series(long d, const LocalCurveGeometry& geom, long order);

/// Degree-d stable pair series under the anti-diagonal restriction: the
/// closed hook-product form.
ShiftedSeries pt_series_closed(long d, const LocalCurveGeometry& geom,
                               long window);

/// Same series assembled as the q-shifted product of the universal series;
/// must agree with pt_series_closed.
ShiftedSeries pt_series_universal(long d, const LocalCurveGeometry& geom,
                                  long window);

/// Partition function of local Gromov-Witten invariants under s2 = -s1,
/// expanded in Q^(1/2). Powers of i = sqrt(-1) are tracked mod 4 and never
/// instantiated.
struct GwSeries {
  Series<Rat> s;  // grid_den = 2 (exponents in (1/2)Z)
  long s1_power = 0;
  int i_power_mod4 = 0;
};

GwSeries gw_series(long d, const LocalCurveGeometry& geom, long window);

/// GW/PT correspondence after q = -e^{iu}: both sides compared
/// coefficientwise over a window of the stated width; all residual powers
/// of i must assemble to a real sign and all half-integral exponents must
/// cancel.
CheckReport gw_pt_check(long d, const LocalCurveGeometry& geom, long window);

/// Resolved conifold: 1 + sum_d Q^d PT_d(X;-q) against
/// prod_{n>=1} (1 - Q q^n)^n, through Q-degree dmax and q-order n_order.
/// Also recomputes each Q-slice from the principal-specialization product
/// over a partition and its conjugate.
CheckReport conifold_check(long dmax, long n_order);

}  // namespace dnh
