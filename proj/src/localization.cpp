#include "dnh/localization.hpp"

#include <sstream>

namespace dnh {

long VirtualRep::rank() const {
  long r = 0;
  for (auto& [w, m] : w_) r += m;
  return r;
}

void VirtualRep::add(const Weight& w, long m) {
  if (m == 0) return;
  long& cur = w_[w];
  cur += m;
  if (cur == 0) w_.erase(w);
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
  for (auto& [w, m] : o.w_) add(w, m);
  return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& o) {
  for (auto& [w, m] : o.w_) add(w, -m);
  return *this;
}

VirtualRep VirtualRep::negated() const {
  VirtualRep r;
  for (auto& [w, m] : w_) r.w_[w] = -m;
  return r;
}

VirtualRep VirtualRep::t_fixed_part() const {
  VirtualRep r;
  for (auto& [w, m] : w_)
    if (w[0] == 0 && w[1] == 0) r.w_[w] = m;
  return r;
}

VirtualRep VirtualRep::t_moving_part() const {
  VirtualRep r;
  for (auto& [w, m] : w_)
    if (w[0] != 0 || w[1] != 0) r.w_[w] = m;
  return r;
}

std::string VirtualRep::str() const {
  if (w_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, m] : w_) {
    if (!first) os << " + ";
    first = false;
    os << m << "*t^(";
    for (int k = 0; k < 3; ++k) {
      if (k) os << ",";
      if (w[k] % 2 == 0)
        os << w[k] / 2;
      else
        os << w[k] << "/2";
    }
    os << ")";
  }
  return os.str();
}

VirtualRep dual_rep(const VirtualRep& v) {
  VirtualRep r;
  for (auto& [w, m] : v.weights()) r.add({-w[0], -w[1], -w[2]}, m);
  return r;
}

VirtualRep twist_rep(const VirtualRep& v, const Weight& t) {
  VirtualRep r;
  for (auto& [w, m] : v.weights())
    r.add({w[0] + t[0], w[1] + t[1], w[2] + t[2]}, m);
  return r;
}

VirtualRep chi_p1(const EquivLineBundleP1& L) {
  // chi(t^c O(a.0 + b.inf)) = t^c (t3^-a - t3^(b+1)) / (1 - t3): the
  // localization tails collapse to a finite sum between -a and b.
  VirtualRep r;
  long lo = -L.n0, hi = L.ninf;
  if (L.degree() >= -1) {
    for (long i = lo; i <= hi; ++i)
      r.add({L.twist[0], L.twist[1], L.twist[2] + 2 * static_cast<int>(i)}, 1);
  } else {
    for (long i = hi + 1; i <= lo - 1; ++i)
      r.add({L.twist[0], L.twist[1], L.twist[2] + 2 * static_cast<int>(i)}, -1);
  }
  return r;
}

VirtualRep chi_oz_z(long n0, long ninf) {
  if (n0 < 0 || ninf < 0)
    throw std::invalid_argument("chi_oz_z: divisor must be effective");
  VirtualRep r;
  for (long i = 1; i <= n0; ++i) r.add(weight_of(0, 0, -static_cast<int>(i)), 1);
  for (long i = 1; i <= ninf; ++i) r.add(weight_of(0, 0, static_cast<int>(i)), 1);
  return r;
}

VirtualRep tvir_fixed_point(const Rpp& n, const FixedPoint& fp) {
  if (!(fp.at_zero.shape() == n.shape()))
    throw std::invalid_argument("tvir: fixed point does not match shape");
  const auto& a = fp.at_zero;
  const auto& b = fp.at_infinity;
  for (Box box : n.shape().boxes())
    if (a.entry(box) + b.entry(box) != n.entry(box))
      throw std::invalid_argument("tvir: fixed point does not split n");
  VirtualRep r;
  const Partition& sh = n.shape();
  r += chi_oz_z(a.entry({0, 0}), b.entry({0, 0}));
  for (Box box : sh.boxes()) {
    if (box.i >= 1) {
      Box up{box.i - 1, box.j};
      r += chi_oz_z(a.entry(box) - a.entry(up), b.entry(box) - b.entry(up));
    }
    if (box.j >= 1) {
      Box left{box.i, box.j - 1};
      r += chi_oz_z(a.entry(box) - a.entry(left),
                    b.entry(box) - b.entry(left));
    }
    if (box.i >= 1 && box.j >= 1) {
      Box diag{box.i - 1, box.j - 1};
      r -= chi_oz_z(a.entry(box) - a.entry(diag),
                    b.entry(box) - b.entry(diag));
    }
  }
  return r;
}

namespace {

// O(Z_ij) at the fixed point, as an equivariant divisor bundle.
EquivLineBundleP1 divisor_bundle(const FixedPoint& fp, Box box) {
  return EquivLineBundleP1::divisor(fp.at_zero.entry(box),
                                    fp.at_infinity.entry(box));
}

}  // namespace

VirtualRep evee_fixed_point(const Rpp& n, const FixedPoint& fp,
                            const P1Gauge& gauge) {
  const Partition& sh = n.shape();
  if (!(fp.at_zero.shape() == sh) || !(fp.at_infinity.shape() == sh))
    throw std::invalid_argument("evee: fixed point does not match shape");
  for (Box box : sh.boxes())
    if (fp.at_zero.entry(box) + fp.at_infinity.entry(box) != n.entry(box))
      throw std::invalid_argument("evee: fixed point does not split n");
  const EquivLineBundleP1 l1 = gauge.l1, l2 = gauge.l2;
  const EquivLineBundleP1 kc = EquivLineBundleP1::canonical();
  VirtualRep r;
  auto boxes = sh.boxes();
  // First sum: chi(O(Z_ij) L1^-i L2^-j) t1^-i t2^-j.
  for (Box b : boxes) {
    EquivLineBundleP1 L = divisor_bundle(fp, b)
                              .tensor(l1.power(-b.i))
                              .tensor(l2.power(-b.j))
                              .twisted(-b.i, -b.j);
    r += chi_p1(L);
  }
  // Grothendieck-dual sum: -(chi(O(Z_ij) K_C L1^-1-i L2^-1-j) t1^-i
  // t2^-j)^dual (x) t1 t2. The t1 t2 of K_X sits in the explicit twist.
  for (Box b : boxes) {
    EquivLineBundleP1 L = divisor_bundle(fp, b)
                              .tensor(kc)
                              .tensor(l1.power(-1 - b.i))
                              .tensor(l2.power(-1 - b.j))
                              .twisted(-b.i, -b.j);
    r -= twist_rep(dual_rep(chi_p1(L)), weight_of(1, 1, 0));
  }
  // Double sum over ordered box pairs with the (O - L1 t1)(O - L2 t2)
  // expansion on the difference divisor.
  for (Box p : boxes) {
    for (Box q : boxes) {
      long d0 = fp.at_zero.entry(q) - fp.at_zero.entry(p);
      long dinf = fp.at_infinity.entry(q) - fp.at_infinity.entry(p);
      EquivLineBundleP1 delta = EquivLineBundleP1::divisor(d0, dinf);
      int e1 = p.i - q.i, e2 = p.j - q.j;
      auto piece = [&](int u, int v, long sign) {
        EquivLineBundleP1 L = delta.tensor(l1.power(e1 + u))
                                  .tensor(l2.power(e2 + v))
                                  .twisted(e1 + u, e2 + v);
        VirtualRep c = chi_p1(L);
        if (sign > 0)
          r += c;
        else
          r -= c;
      };
      piece(0, 0, -1);
      piece(1, 0, +1);
      piece(0, 1, +1);
      piece(1, 1, -1);
    }
  }
  return r;
}

VirtualRep evee_t1t2_weight_space(const Rpp& n, const FixedPoint& fp,
                                  const P1Gauge& gauge) {
  // K_X as a line bundle on the curve, no torus character.
  EquivLineBundleP1 kx = EquivLineBundleP1::canonical()
                             .tensor(gauge.l1.inverse())
                             .tensor(gauge.l2.inverse());
  const auto& a = fp.at_zero;
  const auto& b = fp.at_infinity;
  auto chi_kx_on = [&](long d0, long dinf) {
    // chi(K_X (x) O_D(D)) = chi(K_X(D)) - chi(K_X) for effective D.
    EquivLineBundleP1 twisted = kx.tensor(EquivLineBundleP1::divisor(d0, dinf));
    return chi_p1(twisted) - chi_p1(kx);
  };
  VirtualRep r;
  r -= dual_rep(chi_kx_on(a.entry({0, 0}), b.entry({0, 0})));
  for (Box box : n.shape().boxes()) {
    if (box.i >= 1) {
      Box up{box.i - 1, box.j};
      r -= dual_rep(chi_kx_on(a.entry(box) - a.entry(up),
                              b.entry(box) - b.entry(up)));
    }
    if (box.j >= 1) {
      Box left{box.i, box.j - 1};
      r -= dual_rep(chi_kx_on(a.entry(box) - a.entry(left),
                              b.entry(box) - b.entry(left)));
    }
    if (box.i >= 1 && box.j >= 1) {
      Box diag{box.i - 1, box.j - 1};
      r += dual_rep(chi_kx_on(a.entry(box) - a.entry(diag),
                              b.entry(box) - b.entry(diag)));
    }
  }
  return r;
}

VirtualRep nvir_size0(const Partition& shape, long g, long k1, long k2) {
  auto boxes = shape.boxes();
  std::vector<std::pair<long, long>> mu, nu;
  for (Box b : boxes)
    if (!(b.i == 0 && b.j == 0)) mu.emplace_back(-b.i, -b.j);
  for (Box p : boxes)
    for (Box q : boxes) {
      // mu: (i-l+1, j-k) unless (i,j) = (l-1,k) or (l,k+1)
      bool skip_mu = (p.i == q.i - 1 && p.j == q.j) ||
                     (p.i == q.i && p.j == q.j + 1);
      if (!skip_mu) mu.emplace_back(p.i - q.i + 1, p.j - q.j);
      // nu: (i-l, j-k) unless (i,j) = (l,k) or (l+1,k+1)
      bool skip_nu = (p.i == q.i && p.j == q.j) ||
                     (p.i == q.i + 1 && p.j == q.j + 1);
      if (!skip_nu) nu.emplace_back(p.i - q.i, p.j - q.j);
    }
  VirtualRep r;
  auto add_family = [&](const std::vector<std::pair<long, long>>& ws,
                        long global_sign) {
    for (auto [m1, m2] : ws) {
      long m_mu = m1 * k1 + m2 * k2;
      r.add(weight_of(static_cast<int>(m1), static_cast<int>(m2), 0),
            global_sign * (m_mu + 1 - g));
      r.add(weight_of(static_cast<int>(1 - m1), static_cast<int>(1 - m2), 0),
            -global_sign * (m_mu + g - 1 - k1 - k2));
    }
  };
  add_family(mu, +1);
  add_family(nu, -1);
  return r;
}

long omega_rank_fixed_point(const Rpp& n, const FixedPoint& /*fp*/, long g,
                            long k1, long k2) {
  const Partition& sh = n.shape();
  auto boxes = sh.boxes();
  long rank = 0;
  for (Box b : boxes) {
    if (b.i == 0 && b.j == 0) continue;
    rank += n.entry(b) - b.i * k1 - b.j * k2 + 1 - g;
  }
  for (Box p : boxes)
    for (Box q : boxes) {
      long diff = n.entry(q) - n.entry(p);
      bool skip_second = (p.i == q.i && p.j == q.j) ||
                         (p.i == q.i + 1 && p.j == q.j + 1);
      if (!skip_second)
        rank -= diff + (p.i - q.i) * k1 + (p.j - q.j) * k2 + 1 - g;
      bool skip_third = (p.i == q.i - 1 && p.j == q.j) ||
                        (p.i == q.i && p.j == q.j + 1);
      if (!skip_third)
        rank += diff + (p.i - q.i + 1) * k1 + (p.j - q.j) * k2 + 1 - g;
    }
  return rank;
}

Factored euler_class(const VirtualRep& v) {
  Factored f = Factored::one(FactorKind::linear);
  for (auto& [w, m] : v.weights()) {
    if (w[0] == 0 && w[1] == 0 && w[2] == 0)
      throw std::domain_error("euler_class: zero weight present");
    f.push({w[0], w[1], w[2]}, m);
    // Weights are stored doubled; mu.s picks up the compensating 1/2.
    f.scale(rat_pow(rat_of(1, 2), m));
  }
  return f;
}

Factored khat_bracket(const VirtualRep& v) {
  Factored f = Factored::one(FactorKind::bracket);
  for (auto& [w, m] : v.weights()) {
    if (w[0] == 0 && w[1] == 0 && w[2] == 0)
      throw std::domain_error("khat_bracket: zero weight present");
    f.push({w[0], w[1], w[2]}, m);
  }
  return f;
}

VirtualRep random_rep(std::mt19937_64& rng, int terms, int range) {
  std::uniform_int_distribution<int> comp(-range, range);
  std::uniform_int_distribution<int> mult(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  VirtualRep r;
  for (int t = 0; t < terms; ++t) {
    Weight w{0, 0, 0};
    do {
      w = weight_of(comp(rng), comp(rng), comp(rng));
    } while (w[0] == 0 && w[1] == 0 && w[2] == 0);
    r.add(w, coin(rng) ? mult(rng) : -mult(rng));
  }
  return r;
}

}  // namespace dnh
