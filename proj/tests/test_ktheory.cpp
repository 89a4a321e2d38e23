#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dnh/ktheory.hpp"

using namespace dnh;

namespace {

Rat bracket1(const Rat& r) { return r - Rat(1) / r; }  // t1^(1/2)-t1^(-1/2)

}  // namespace

TEST_CASE("F_lambda closed products") {
  Rat r = rat_of(5, 3);
  CHECK(f_lambda_bracket(Partition({1}), r) == Rat(1) / bracket1(r));
  // F_(2) = 1 / (b1 b2)
  Rat b1 = bracket1(r), b2 = rat_pow(r, 2) - rat_pow(r, -2);
  CHECK(f_lambda_bracket(Partition({2}), r) == Rat(1) / (b1 * b2));
  // conjugation: F depends only on |j-i| patterns, symmetric under
  // transpose
  for (int d = 1; d <= 4; ++d)
    for (const auto& shape : enumerate_partitions(d))
      CHECK(f_lambda_bracket(shape, r) ==
            f_lambda_bracket(shape.conjugate(), r));
}

TEST_CASE("refined integral: single box, size zero") {
  Rat r = rat_of(3, 2);
  Rpp n0(Partition({1}), {{0}});
  // A_Khat^{g-1} at g=0: integral = -F^2 = -1/b1^2.
  Rat got = ktheory_integral(n0, P1Gauge(0, 0), r);
  CHECK(got == -Rat(1) / (bracket1(r) * bracket1(r)));
}

TEST_CASE("refined Calabi-Yau series reduces to the Euler count") {
  // k=(-1,-1): same signed count as the cohomological case: (1+q)^-2.
  Rat r = rat_of(4, 3);
  QSeries s = ktheory_series(Partition({1}), P1Gauge(-1, -1), 3, r);
  QSeries expect = QSeries::constant(Rat(1), 3);
  expect.set_coeff(1, Rat(1));
  expect = expect.pow(-2);
  CHECK(s.equals_through(expect, 3));
}

TEST_CASE("refined series match the closed universal products") {
  auto rs = sample_rationals(7177, 3);
  for (int d = 1; d <= 2; ++d)
    for (const auto& shape : enumerate_partitions(d))
      for (const Rat& rr : rs) {
        Rat r = abs(rr) == 1 ? rat_of(5, 2) : rr;
        auto closed = universal_closed_ktheory(shape, 4, r);
        // basis geometries: (0,0) -> A^-1, (-1,-1) -> (ABC)^-1,
        // (0,-2) -> (AC^2)^-1
        QSeries z1 = ktheory_series(shape, P1Gauge(0, 0), 4, r);
        QSeries z2 = ktheory_series(shape, P1Gauge(-1, -1), 4, r);
        QSeries z3 = ktheory_series(shape, P1Gauge(0, -2), 4, r);
        CHECK(z1.equals_through(closed.A.inverse(), 4));
        CHECK(z2.equals_through((closed.A * closed.B * closed.C).inverse(), 4));
        CHECK(z3.equals_through(
            (closed.A * closed.C * closed.C).inverse(), 4));
      }
}

TEST_CASE("parallel and serial refined series agree") {
  Rat r = rat_of(7, 4);
  QSeries a = ktheory_series(Partition({2}), P1Gauge(0, -2), 3, r);
  QSeries b = ref::ktheory_series(Partition({2}), P1Gauge(0, -2), 3, r);
  CHECK(a.equals_through(b, 3));
}

TEST_CASE("cohomological limit of the refined leading term") {
  // As t1 -> 1, A_Khat(:= -F^-2) approaches the cohomological leading
  // constant -s1^2 prod h^2 under s1 = t1^(1/2) - t1^(-1/2); the relative
  // error contracts like the square of the deformation parameter.
  for (int d = 1; d <= 2; ++d)
    for (const auto& shape : enumerate_partitions(d)) {
      auto rel_err = [&](const Rat& eps) -> Rat {
        Rat r = Rat(1) + eps;
        Rat s1 = r - Rat(1) / r;
        Rat refined = minus_one_pow(shape.size()) /
                      rat_pow(f_lambda_bracket(shape, r), 2);
        Rat classical = minus_one_pow(shape.size()) *
                        rat_pow(s1, 2 * shape.size()) *
                        rat_pow(shape.hook_product(), 2);
        return abs(refined / classical - 1);
      };
      Rat e1 = rel_err(rat_of(1, 10));
      Rat e2 = rel_err(rat_of(1, 100));
      CHECK(e1 < rat_of(1, 10));
      if (e1 == 0) {
        // single hook: the refined value IS the classical one exactly
        CHECK(e2 == 0);
      } else {
        CHECK(e2 * 50 < e1);  // roughly quadratic contraction
      }
    }
}

TEST_CASE("refined series conjugation symmetry") {
  // Swapping t1 and t2 under t1 t2 = 1 means r -> 1/r; the closed refined
  // triples must satisfy A_lam(r) = A_conj(1/r), B_lam(r) = C_conj(1/r).
  Rat r = rat_of(8, 5);
  for (int d = 1; d <= 4; ++d)
    for (const auto& shape : enumerate_partitions(d)) {
      Partition conj = shape.conjugate();
      auto lam = universal_closed_ktheory(shape, 5, r);
      auto bar = universal_closed_ktheory(conj, 5, Rat(1) / r);
      CHECK(lam.A.equals_through(bar.A, 5));
      CHECK(lam.B.equals_through(bar.C, 5));
      CHECK(lam.C.equals_through(bar.B, 5));
    }
}
