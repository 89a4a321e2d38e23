#pragma once

#include "dnh/invariants.hpp"

namespace dnh {

/// Nekrasov-Okounkov refined stable-pair integral for one reversed plane
/// partition under t1 t2 = 1, with t1 = r^2 sampled rational and
/// u = t3^(1/2) kept symbolic until the final evaluation at u = 1.
Rat ktheory_integral(const Rpp& n, const P1Gauge& gauge, const Rat& r);

/// Generating series of the refined integrals up to the given order.
QSeries ktheory_series(const Partition& shape, const P1Gauge& gauge,
                       long order, const Rat& r);

namespace ref {
QSeries ktheory_series(const Partition& shape, const P1Gauge& gauge,
                       long order, const Rat& r);
}

/// The hook-type bracket product F_lambda evaluated at t1 = r^2.
Rat f_lambda_bracket(const Partition& shape, const Rat& r);

/// Closed forms of the refined universal series under t1 t2 = 1.
UniversalTriple<Rat> universal_closed_ktheory(const Partition& shape,
                                              long order, const Rat& r);

}  // namespace dnh
