#include "dnh/invariants.hpp"

#include <sstream>

namespace dnh {

CheckReport cy_sign_check(const Rpp& n, long k1, long k2) {
  CheckReport rep;
  if (k1 + k2 != -2) {
    rep.pass = false;
    rep.detail = "not a Calabi-Yau pair: k1+k2 != -2";
    return rep;
  }
  const Partition& sh = n.shape();
  long sign_exp =
      k1 * (sh.total_content() + sh.size()) + sh.size() + n.total();
  Rat sign = minus_one_pow(sign_exp);
  P1Gauge gauge(k1, k2);
  auto fps = enumerate_fixed_points(n);
  Rat total(0);
  for (size_t i = 0; i < fps.size(); ++i) {
    VirtualRep v = evee_fixed_point(n, fps[i], gauge);
    Factored t;
    try {
      t = restrict_antidiagonal(euler_class(v.negated()));
    } catch (const AntidiagonalPole& e) {
      rep.pass = false;
      rep.detail = "fixed point " + std::to_string(i) + ": " + e.what();
      return rep;
    }
    // The restricted contribution collapses to a bare constant: every
    // weight pairs off with its Serre partner.
    if (!t.is_scalar() || !(t.scalar() == sign)) {
      rep.pass = false;
      std::ostringstream os;
      os << "fixed point " << i << " of " << n.str() << ": contribution "
         << t.str_linear() << " != expected sign " << rat_str(sign);
      rep.detail = os.str();
      return rep;
    }
    total += t.scalar();
  }
  if (!(total == sign * Rat(static_cast<long>(fps.size())))) {
    rep.pass = false;
    rep.detail = "total does not equal sign * fixed point count";
  }
  return rep;
}

std::vector<Rat> sample_rationals(uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Rat> out;
  while (static_cast<int>(out.size()) < count) {
    Rat r = random_rational(rng);
    bool fresh = true;
    for (const Rat& o : out)
      if (o == r || o == -r) fresh = false;
    if (fresh) out.push_back(r);
  }
  return out;
}

}  // namespace dnh
