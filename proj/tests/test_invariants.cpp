#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dnh/gwpt.hpp"
#include "dnh/invariants.hpp"

using namespace dnh;

namespace {

const CohCtx<RatFn> kSym = symbolic_antidiagonal_ctx();

RatFn s1_monomial(const Rat& c, int e) { return RatFn::monomial(c, e); }

}  // namespace

TEST_CASE("pt integral, single box") {
  Partition box({1});

  // n = (1), Calabi-Yau: two fixed points, each contributing -1.
  Rpp n1(box, {{1}});
  CHECK(pt_integral<RatFn>(n1, P1Gauge(-1, -1), kSym) == RatFn(-2));

  // n = (2), trivial bundles: vanishing.
  Rpp n2(box, {{2}});
  CHECK(pt_integral<RatFn>(n2, P1Gauge(0, 0), kSym).is_zero());

  // n = (0), trivial bundles: -1/s1^2.
  Rpp n0(box, {{0}});
  CHECK(pt_integral<RatFn>(n0, P1Gauge(0, 0), kSym) ==
        s1_monomial(Rat(-1), -2));
}

TEST_CASE("pt integral symbolic and sampled agree") {
  auto samples = sample_rationals(42, 3);
  for (int d = 1; d <= 2; ++d)
    for (const auto& shape : enumerate_partitions(d))
      for (long sz = 0; sz <= 3; ++sz)
        for (const auto& n : enumerate_rpps(shape, sz))
          for (auto [k1, k2] :
               std::vector<std::pair<long, long>>{{0, 0}, {-1, -1}, {1, -1}}) {
            RatFn sym = pt_integral<RatFn>(n, P1Gauge(k1, k2), kSym);
            for (const Rat& s : samples) {
              Rat num = pt_integral<Rat>(n, P1Gauge(k1, k2),
                                         CohCtx<Rat>::antidiag(s));
              CHECK(sym.eval(s) == num);
            }
          }
}

TEST_CASE("trivial bundle vanishing for positive size") {
  for (int d = 1; d <= 3; ++d)
    for (const auto& shape : enumerate_partitions(d))
      for (long sz = 1; sz <= 4; ++sz)
        for (const auto& n : enumerate_rpps(shape, sz)) {
          Rat v = pt_integral<Rat>(n, P1Gauge(0, 0),
                                   CohCtx<Rat>::antidiag(rat_of(7, 3)));
          CHECK(v == 0);
        }
}

TEST_CASE("Calabi-Yau sign law") {
  CHECK(cy_sign_check(Rpp(Partition({1}), {{1}}), -1, -1).pass);
  CHECK(cy_sign_check(Rpp(Partition({2, 1}), {{0, 0}, {0}}), -1, -1).pass);
  CHECK(cy_sign_check(Rpp(Partition({2}), {{0, 1}}), 0, -2).pass);
  CHECK_FALSE(cy_sign_check(Rpp(Partition({1}), {{1}}), 0, 0).pass);

  for (int d = 1; d <= 3; ++d)
    for (const auto& shape : enumerate_partitions(d))
      for (long sz = 0; sz <= 4; ++sz)
        for (const auto& n : enumerate_rpps(shape, sz))
          for (auto [k1, k2] : std::vector<std::pair<long, long>>{
                   {-1, -1}, {0, -2}, {-2, 0}})
            CHECK(cy_sign_check(n, k1, k2).pass);
}

TEST_CASE("parity of the tangent-plus-omega rank") {
  // rank(T^vir + Omega) = k1 (c + |lambda|) + |lambda| + |n| mod 2 at CY
  // pairs, genus 0.
  for (int d = 1; d <= 3; ++d)
    for (const auto& shape : enumerate_partitions(d))
      for (long sz = 0; sz <= 4; ++sz)
        for (const auto& n : enumerate_rpps(shape, sz))
          for (auto [k1, k2] : std::vector<std::pair<long, long>>{
                   {-1, -1}, {0, -2}, {-2, 0}}) {
            long expect =
                k1 * (shape.total_content() + shape.size()) + shape.size() +
                n.total();
            for (const auto& fp : enumerate_fixed_points(n)) {
              long tv = tvir_fixed_point(n, fp).rank();
              long om = omega_rank_fixed_point(n, fp, 0, k1, k2);
              CHECK(((tv + om) - expect) % 2 == 0);
            }
          }
}

TEST_CASE("local series: single box") {
  // k = (-1,-1): (1+q)^-2; k = (0,0): constant -1/s1^2.
  Series<RatFn> cy =
      pt_local_series<RatFn>(Partition({1}), P1Gauge(-1, -1), 3, kSym);
  QSeries expect = QSeries::constant(Rat(1), 3);
  expect.set_coeff(1, Rat(1));
  expect = expect.pow(-2);
  for (long e = 0; e <= 3; ++e) CHECK(cy.coeff(e) == RatFn(expect.coeff(e)));

  Series<RatFn> triv =
      pt_local_series<RatFn>(Partition({1}), P1Gauge(0, 0), 3, kSym);
  CHECK(triv.coeff(0) == s1_monomial(Rat(-1), -2));
  for (long e = 1; e <= 3; ++e) CHECK(triv.coeff(e).is_zero());
}

TEST_CASE("local series matches the Calabi-Yau closed form") {
  for (int d = 1; d <= 2; ++d)
    for (const auto& shape : enumerate_partitions(d)) {
      long sign_exp = -(shape.total_content() + shape.size()) + shape.size();
      QSeries expect =
          hook_binomial_neg<Rat>(shape, 4).pow(-2).scaled(minus_one_pow(sign_exp));
      Series<RatFn> got =
          pt_local_series<RatFn>(shape, P1Gauge(-1, -1), 4, kSym);
      for (long e = 0; e <= 4; ++e)
        CHECK(got.coeff(e) == RatFn(expect.coeff(e)));
    }
}

TEST_CASE("parallel and serial local series agree") {
  Series<RatFn> a =
      pt_local_series<RatFn>(Partition({2}), P1Gauge(-1, -1), 4, kSym);
  Series<RatFn> b =
      ref::pt_local_series<RatFn>(Partition({2}), P1Gauge(-1, -1), 4, kSym);
  for (long e = 0; e <= 4; ++e) CHECK(a.coeff(e) == b.coeff(e));
}

TEST_CASE("leading term: both routes") {
  // lambda=(1), g=0, k=(0,0): -1/s1^2 on both paths.
  RatFn x = RatFn::var();
  CHECK(leading_term_closed<RatFn>(Partition({1}), 0, 0, 0, x) ==
        s1_monomial(Rat(-1), -2));
  CHECK(leading_term_localized<RatFn>(Partition({1}), 0, 0, 0, x) ==
        s1_monomial(Rat(-1), -2));

  // lambda=(1), g=1, k=(0,0): 1.
  CHECK(leading_term_closed<RatFn>(Partition({1}), 1, 0, 0, x) == RatFn(1));

  // lambda=(2,1), g=2, k=(1,0): sign +1, exponent 2g-2-k1-k2 = 1, so 3 s1^3.
  CHECK(leading_term_closed<RatFn>(Partition({2, 1}), 2, 1, 0, x) ==
        s1_monomial(Rat(3), 3));

  for (int d = 1; d <= 4; ++d)
    for (const auto& shape : enumerate_partitions(d))
      for (long g = 0; g <= 2; ++g)
        for (long k1 = -2; k1 <= 2; ++k1)
          for (long k2 = -2; k2 <= 2; ++k2)
            CHECK(leading_term_closed<RatFn>(shape, g, k1, k2, x) ==
                  leading_term_localized<RatFn>(shape, g, k1, k2, x));
}

TEST_CASE("leading term of the local series is the size-0 integral") {
  for (int d = 1; d <= 2; ++d)
    for (const auto& shape : enumerate_partitions(d))
      for (auto [k1, k2] :
           std::vector<std::pair<long, long>>{{0, 0}, {-1, -1}, {0, -2}}) {
        Series<RatFn> s = pt_local_series<RatFn>(shape, P1Gauge(k1, k2), 0, kSym);
        CHECK(s.coeff(0) ==
              leading_term_closed<RatFn>(shape, 0, k1, k2, RatFn::var()));
      }
}

TEST_CASE("closed universal series, single box") {
  RatFn x = RatFn::var();
  auto t = universal_closed_antidiagonal<RatFn>(Partition({1}), 3, x);
  CHECK(t.A.coeff(0) == s1_monomial(Rat(-1), 2));  // -s1^2
  CHECK(t.B.coeff(0) == s1_monomial(Rat(1), -1));
  CHECK(t.B.coeff(1) == s1_monomial(Rat(1), -1));  // (1+q)/s1
  CHECK(t.C.coeff(0) == s1_monomial(Rat(-1), -1));
  CHECK(t.C.coeff(1) == s1_monomial(Rat(-1), -1));  // -(1+q)/s1

  auto t21 = universal_closed_antidiagonal<RatFn>(Partition({2, 1}), 2, x);
  CHECK(t21.A.coeff(0) == s1_monomial(Rat(-9), 6));  // (-s1^2)^3 * 9
}

TEST_CASE("universal extraction reproduces the closed forms") {
  // Symbolic, |lambda| <= 2.
  for (int d = 1; d <= 2; ++d)
    for (const auto& shape : enumerate_partitions(d)) {
      RatFn hint = extraction_hint<RatFn>(shape, RatFn::var());
      auto ext = universal_extract<RatFn>(shape, 6, kSym, hint);
      auto closed = universal_closed_antidiagonal<RatFn>(shape, 6, RatFn::var());
      for (long e = 0; e <= 6; ++e) {
        CHECK(ext.A.coeff(e) == closed.A.coeff(e));
        CHECK(ext.B.coeff(e) == closed.B.coeff(e));
        CHECK(ext.C.coeff(e) == closed.C.coeff(e));
      }
    }
}

TEST_CASE("universal extraction at numeric samples, |lambda| = 3") {
  auto samples = sample_rationals(2024, 2);
  for (const auto& shape : enumerate_partitions(3))
    for (const Rat& s : samples) {
      CohCtx<Rat> ctx = CohCtx<Rat>::antidiag(s);
      Rat hint = extraction_hint<Rat>(shape, s);
      auto ext = universal_extract<Rat>(shape, 5, ctx, hint);
      auto closed = universal_closed_antidiagonal<Rat>(shape, 5, s);
      for (long e = 0; e <= 5; ++e) {
        CHECK(ext.A.coeff(e) == closed.A.coeff(e));
        CHECK(ext.B.coeff(e) == closed.B.coeff(e));
        CHECK(ext.C.coeff(e) == closed.C.coeff(e));
      }
    }
}

TEST_CASE("degree-1 full equivariant extraction") {
  std::mt19937_64 rng(99);
  int done = 0;
  while (done < 3) {
    Rat s1 = random_rational(rng), s2 = random_rational(rng);
    if (s1 + s2 == 0 || s1 == s2) continue;
    try {
      CohCtx<Rat> ctx = CohCtx<Rat>::full(s1, s2);
      auto ext =
          universal_extract<Rat>(Partition({1}), 6, ctx, Rat(1) / s2);
      auto closed = universal_closed_full_deg1<Rat>(6, s1, s2);
      for (long e = 0; e <= 6; ++e) {
        CHECK(ext.A.coeff(e) == closed.A.coeff(e));
        CHECK(ext.B.coeff(e) == closed.B.coeff(e));
        CHECK(ext.C.coeff(e) == closed.C.coeff(e));
      }
      ++done;
    } catch (const UnluckySample&) {
      continue;
    }
  }
}

TEST_CASE("extraction round trip on synthesized inputs") {
  // extract(closed-form-synthesized Z's) gives back the closed forms.
  Partition shape({2});
  RatFn x = RatFn::var();
  auto closed = universal_closed_antidiagonal<RatFn>(shape, 8, x);
  Series<RatFn> z1 = closed.A.inverse();
  Series<RatFn> z2 =
      (closed.A * closed.B * closed.C).inverse();
  Series<RatFn> z3 = (closed.A * closed.C * closed.C).inverse();
  Series<RatFn> a = z1.inverse();
  Series<RatFn> c = (z1 * z3.inverse()).sqrt(extraction_hint<RatFn>(shape, x));
  Series<RatFn> b = z1 * z2.inverse() * c.inverse();
  for (long e = 0; e <= 8; ++e) {
    CHECK(a.coeff(e) == closed.A.coeff(e));
    CHECK(b.coeff(e) == closed.B.coeff(e));
    CHECK(c.coeff(e) == closed.C.coeff(e));
  }
}

TEST_CASE("degree-1 full equivariant series equals the universal product") {
  // For the single box the fully equivariant triple is exact for every
  // geometry, so the localization series must match A^(g-1) B^k1 C^k2.
  std::mt19937_64 rng(777);
  int done = 0;
  while (done < 2) {
    Rat s1 = random_rational(rng), s2 = random_rational(rng);
    if (s1 + s2 == 0 || s1 == s2) continue;
    bool used = false;
    for (auto [k1, k2] :
         std::vector<std::pair<long, long>>{{2, 0}, {-1, -1}, {1, -3}}) {
      try {
        CohCtx<Rat> ctx = CohCtx<Rat>::full(s1, s2);
        QSeries got = pt_local_series<Rat>(Partition({1}), P1Gauge(k1, k2), 4,
                                           ctx);
        auto t = universal_closed_full_deg1<Rat>(4, s1, s2);
        QSeries expect = t.A.pow(-1) * t.B.pow(k1) * t.C.pow(k2);
        CHECK(got.equals_through(expect, 4));
        used = true;
      } catch (const UnluckySample&) {
        break;
      }
    }
    if (used) ++done;
  }
}

TEST_CASE("integral does not depend on the equivariant lift") {
  // Moving all the twisting of L1, L2 to the fiber over 0 changes every
  // fixed-point contribution but not the specialized sum.
  for (auto [k1, k2] :
       std::vector<std::pair<long, long>>{{0, 0}, {-1, -1}, {2, -1}}) {
    P1Gauge balanced(k1, k2);
    P1Gauge skew(k1, k2);
    skew.l1 = EquivLineBundleP1::divisor(k1, 0);
    skew.l2 = EquivLineBundleP1::divisor(k2, 0);
    for (int d = 1; d <= 2; ++d)
      for (const auto& shape : enumerate_partitions(d))
        for (long sz = 0; sz <= 3; ++sz)
          for (const auto& n : enumerate_rpps(shape, sz)) {
            Rat s = rat_of(9, 7);
            CohCtx<Rat> ctx = CohCtx<Rat>::antidiag(s);
            CHECK(pt_integral<Rat>(n, balanced, ctx) ==
                  pt_integral<Rat>(n, skew, ctx));
          }
  }
}

TEST_CASE("integrals are homogeneous of degree minus the virtual dimension") {
  // vd = d (2 - 2g + k1 + k2) at g = 0; scaling s1 scales the anti-diagonal
  // integral by the inverse power.
  Rat s = rat_of(5, 4);
  Rat c = rat_of(3, 2);
  for (auto [k1, k2] :
       std::vector<std::pair<long, long>>{{0, 0}, {-1, -1}, {1, 0}}) {
    for (int d = 1; d <= 2; ++d)
      for (const auto& shape : enumerate_partitions(d))
        for (long sz = 0; sz <= 2; ++sz)
          for (const auto& n : enumerate_rpps(shape, sz)) {
            long vd = d * (2 + k1 + k2);
            Rat at_s = pt_integral<Rat>(n, P1Gauge(k1, k2),
                                        CohCtx<Rat>::antidiag(s));
            Rat at_cs = pt_integral<Rat>(n, P1Gauge(k1, k2),
                                         CohCtx<Rat>::antidiag(c * s));
            CHECK(at_cs == at_s * rat_pow(c, -vd));
          }
  }
}

TEST_CASE("conjugation symmetry of the universal series") {
  // A_lambda(s1,s2) = A_conj(s2,s1) and B_lambda(s1,s2) = C_conj(s2,s1),
  // checked through the fully equivariant extraction at swapped samples.
  std::mt19937_64 rng(1312);
  std::vector<Partition> shapes = {Partition({2}), Partition({2, 1})};
  for (const auto& shape : shapes) {
    Partition conj = shape.conjugate();
    int done = 0;
    while (done < 2) {
      Rat s1 = random_rational(rng), s2 = random_rational(rng);
      if (s1 + s2 == 0 || s1 == s2) continue;
      try {
        auto lam = universal_extract<Rat>(
            shape, 5, CohCtx<Rat>::full(s1, s2),
            extraction_hint_full<Rat>(shape, s1, s2));
        auto bar = universal_extract<Rat>(
            conj, 5, CohCtx<Rat>::full(s2, s1),
            extraction_hint_full<Rat>(conj, s2, s1));
        CHECK(lam.A.equals_through(bar.A, 5));
        CHECK(lam.B.equals_through(bar.C, 5));
        CHECK(lam.C.equals_through(bar.B, 5));
        ++done;
      } catch (const UnluckySample&) {
        continue;
      }
    }
  }
}

TEST_CASE("full-mode extraction hint is consistent with the single box") {
  Rat s1 = rat_of(3, 2), s2 = rat_of(5, 7);
  CHECK(extraction_hint_full<Rat>(Partition({1}), s1, s2) == Rat(1) / s2);
}
