#pragma once

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "dnh/combinatorics.hpp"
#include "dnh/factored.hpp"

namespace dnh {

/// A character of T x C^* = (C^*)^3, stored in half-units: the weight
/// t1^a t2^b t3^c corresponds to {2a, 2b, 2c}. Everything produced by sheaf
/// cohomology on P^1 is integral (even entries); the half grid exists for
/// the square-root twists of the K-theoretic refinement.
using Weight = std::array<int, 3>;

inline Weight weight_of(int a, int b, int c) { return {2 * a, 2 * b, 2 * c}; }

/// Finitely supported integer-multiplicity map on characters: the class of
/// a virtual T x C^*-representation. Zero multiplicities are never stored.
class VirtualRep {
 public:
  VirtualRep() = default;

  const std::map<Weight, long>& weights() const { return w_; }
  bool empty() const { return w_.empty(); }
  long rank() const;
  long mult(const Weight& w) const {
    auto it = w_.find(w);
    return it == w_.end() ? 0 : it->second;
  }

  void add(const Weight& w, long m);
  VirtualRep& operator+=(const VirtualRep& o);
  VirtualRep& operator-=(const VirtualRep& o);
  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) {
    a += b;
    return a;
  }
  friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) {
    a -= b;
    return a;
  }
  VirtualRep negated() const;

  friend bool operator==(const VirtualRep&, const VirtualRep&) = default;

  /// The sub-representation with (t1,t2)-weight zero (pure t3 directions):
  /// the T-fixed part.
  VirtualRep t_fixed_part() const;
  VirtualRep t_moving_part() const;

  std::string str() const;

 private:
  std::map<Weight, long> w_;
};

/// dual negates every weight; twist adds a fixed character to every weight.
VirtualRep dual_rep(const VirtualRep& v);
VirtualRep twist_rep(const VirtualRep& v, const Weight& w);

/// A T x C^*-equivariant line bundle on P^1, recorded as a global character
/// twist times O(n0.{0} + ninf.{inf}). The C^* conventions are pinned by
/// T_{P^1,0} = t3^{-1}, T_{P^1,inf} = t3: the fiber of O(n0.0 + ninf.inf)
/// at 0 has t3-weight -n0, at infinity +ninf.
struct EquivLineBundleP1 {
  long n0 = 0;
  long ninf = 0;
  Weight twist{0, 0, 0};

  static EquivLineBundleP1 structure_sheaf() { return {}; }
  /// O(m) with all twisting at 0.
  static EquivLineBundleP1 o_m(long m) { return {m, 0, {0, 0, 0}}; }
  static EquivLineBundleP1 divisor(long at0, long atinf) {
    return {at0, atinf, {0, 0, 0}};
  }
  /// The canonical bundle with its intrinsic linearization.
  static EquivLineBundleP1 canonical() { return {-1, -1, {0, 0, 0}}; }

  long degree() const { return n0 + ninf; }
  Weight weight_at_zero() const {
    return {twist[0], twist[1], twist[2] - 2 * static_cast<int>(n0)};
  }
  Weight weight_at_infinity() const {
    return {twist[0], twist[1], twist[2] + 2 * static_cast<int>(ninf)};
  }

  EquivLineBundleP1 tensor(const EquivLineBundleP1& o) const {
    EquivLineBundleP1 r;
    r.n0 = n0 + o.n0;
    r.ninf = ninf + o.ninf;
    for (int k = 0; k < 3; ++k) r.twist[k] = twist[k] + o.twist[k];
    return r;
  }
  EquivLineBundleP1 inverse() const {
    return {-n0, -ninf, {-twist[0], -twist[1], -twist[2]}};
  }
  EquivLineBundleP1 power(long e) const {
    EquivLineBundleP1 r;
    r.n0 = n0 * e;
    r.ninf = ninf * e;
    for (int k = 0; k < 3; ++k)
      r.twist[k] = twist[k] * static_cast<int>(e);
    return r;
  }
  EquivLineBundleP1 twisted(int a, int b) const {  // tensor by t1^a t2^b
    EquivLineBundleP1 r = *this;
    r.twist[0] += 2 * a;
    r.twist[1] += 2 * b;
    return r;
  }
};

/// Euler characteristic RGamma(P^1, L) by two-fixed-point localization; the
/// geometric tails cancel into a finite Laurent polynomial in t3.
VirtualRep chi_p1(const EquivLineBundleP1& L);

/// chi(O_Z(Z)) for Z = n0.{0} + ninf.{inf} effective, as a difference of
/// line-bundle Euler characteristics.
VirtualRep chi_oz_z(long n0, long ninf);

/// Degrees of the two line bundles L1, L2 of a local-curve geometry over
/// P^1, together with the C^*-linearizations used at the fixed points. The
/// split is chosen so that deg L1 + deg L2 = -2 always lifts the Calabi-Yau
/// identity L1 (x) L2 = K equivariantly.
struct P1Gauge {
  long k1, k2;
  EquivLineBundleP1 l1, l2;

  explicit P1Gauge(long deg1, long deg2) : k1(deg1), k2(deg2) {
    auto floor_div = [](long a, long b) {
      long q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
      return q;
    };
    long f1 = floor_div(k1, 2), f2 = floor_div(k2, 2);
    l1 = EquivLineBundleP1::divisor(k1 - f1, f1);   // ceil at 0
    l2 = EquivLineBundleP1::divisor(f2, k2 - f2);   // ceil at infinity
  }
};

/// Virtual tangent space of the double nested Hilbert scheme at a fixed
/// point: chi(O_Z00(Z00)) plus the row and column difference terms, minus
/// the diagonal ones. Supported purely on the t3-axis.
VirtualRep tvir_fixed_point(const Rpp& n, const FixedPoint& fp);

/// Full T x C^*-character of the dual obstruction theory at a fixed point.
VirtualRep evee_fixed_point(const Rpp& n, const FixedPoint& fp,
                            const P1Gauge& gauge);

/// The t1 t2-weight space of the dual obstruction theory, assembled
/// independently from its closed expression; test oracle for
/// evee_fixed_point.
VirtualRep evee_t1t2_weight_space(const Rpp& n, const FixedPoint& fp,
                                  const P1Gauge& gauge);

/// Virtual normal bundle at the size-0 reversed plane partition over an
/// abstract genus-g curve, from the mu/nu weight lists. No t3 direction.
VirtualRep nvir_size0(const Partition& shape, long g, long k1, long k2);

/// rank(Omega) at a fixed point for the explicit representative of the
/// splitting N^vir = -T^(vir,dual) t1t2 + Omega - Omega^dual t1t2.
long omega_rank_fixed_point(const Rpp& n, const FixedPoint& fp, long g,
                            long k1, long k2);

/// prod (mu.s)^mult over the weights; errors on a zero weight.
Factored euler_class(const VirtualRep& v);

/// prod [t^mu]^mult with [t^mu] = t^(mu/2) - t^(-mu/2); integral weights
/// only; errors on a zero weight.
Factored khat_bracket(const VirtualRep& v);

/// Uniform random virtual representation (for property tests): nonzero
/// integral weights in [-range, range]^3, multiplicities in +-[1,3].
VirtualRep random_rep(std::mt19937_64& rng, int terms, int range);

}  // namespace dnh
