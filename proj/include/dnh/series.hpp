#pragma once

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "dnh/poly.hpp"
#include "dnh/rational.hpp"

namespace dnh {

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Truncated Laurent series over an exact field K.
///
/// Exponents live on the grid (1/grid_den)*Z and are handled in integer
/// "units": the coefficient of q^(e/grid_den) sits at units e. A series
/// knows its coefficients for units in [min_exp, order]; the tail beyond
/// `order` is unknown, and arithmetic never claims more precision than the
/// operands support.
template <class K>
struct Series {
  int grid_den = 1;
  long min_exp = 0;  // units
  long order = -1;   // units; order < min_exp means "no known coefficients"
  std::vector<K> c;  // c[i] = coefficient at units min_exp + i

  Series() = default;

  static Series zero(long order_units, int grid = 1) {
    Series s;
    s.grid_den = grid;
    s.min_exp = order_units + 1;
    s.order = order_units;
    return s;
  }
  static Series constant(K v, long order_units, int grid = 1) {
    Series s;
    s.grid_den = grid;
    s.order = order_units;
    if (order_units < 0) {
      s.min_exp = order_units + 1;
      return s;
    }
    s.min_exp = 0;
    s.c.assign(order_units + 1, K(0));
    s.c[0] = std::move(v);
    return s;
  }
  /// c * q^(e units), truncated at order_units.
  static Series monomial(K v, long e, long order_units, int grid = 1) {
    Series s;
    s.grid_den = grid;
    s.min_exp = e;
    s.order = order_units;
    if (e <= order_units) {
      s.c.assign(order_units - e + 1, K(0));
      s.c[0] = std::move(v);
    } else {
      s.min_exp = order_units + 1;
    }
    return s;
  }

  long size() const { return static_cast<long>(c.size()); }

  K coeff(long e) const {  // units
    if (e < min_exp || e > order) return K(0);
    return c[e - min_exp];
  }

  bool is_zero() const {
    for (const auto& k : c)
      if (!(k == K(0))) return false;
    return true;
  }

  /// Lowest unit with a nonzero coefficient; throws on the zero series.
  long valuation() const {
    for (long i = 0; i < size(); ++i)
      if (!(c[i] == K(0))) return min_exp + i;
    throw SeriesError("valuation of (truncation of) zero series");
  }

  void set_coeff(long e, K v) {
    if (e > order) throw SeriesError("set_coeff beyond order");
    if (e < min_exp) {
      c.insert(c.begin(), min_exp - e, K(0));
      min_exp = e;
    }
    c[e - min_exp] = std::move(v);
  }

  Series& grow_front(long new_min) {
    if (new_min < min_exp) {
      c.insert(c.begin(), min_exp - new_min, K(0));
      min_exp = new_min;
    }
    return *this;
  }

  Series truncated(long new_order) const {
    Series r = *this;
    if (new_order < r.order) {
      r.order = new_order;
      if (r.min_exp > new_order) {
        r.c.clear();
        r.min_exp = new_order + 1;
      } else {
        r.c.resize(new_order - r.min_exp + 1);
      }
    }
    return r;
  }

  /// Re-express on a finer grid (new_den must be a multiple of grid_den).
  Series regrid(int new_den) const {
    if (new_den == grid_den) return *this;
    if (new_den % grid_den != 0)
      throw SeriesError("regrid: incompatible grids");
    int m = new_den / grid_den;
    Series r;
    r.grid_den = new_den;
    r.min_exp = min_exp * m;
    r.order = order * m + (m - 1);
    r.c.assign(r.order - r.min_exp + 1, K(0));
    for (long i = 0; i < size(); ++i) r.c[i * m] = c[i];
    return r;
  }

  Series shifted(long e) const {  // multiply by q^(e units)
    Series r = *this;
    r.min_exp += e;
    r.order += e;
    return r;
  }

  friend Series operator+(const Series& a, const Series& b) {
    auto [x, y] = align(a, b);
    Series r;
    r.grid_den = x.grid_den;
    r.order = std::min(x.order, y.order);
    r.min_exp = std::min(x.min_exp, y.min_exp);
    if (r.min_exp > r.order) r.min_exp = r.order + 1;
    r.c.assign(r.order - r.min_exp + 1, K(0));
    for (long e = r.min_exp; e <= r.order; ++e)
      r.c[e - r.min_exp] = x.coeff(e) + y.coeff(e);
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) {
    return a + b.scaled(K(-1));
  }
  friend Series operator*(const Series& a, const Series& b) {
    auto [x, y] = align(a, b);
    Series r;
    r.grid_den = x.grid_den;
    // q^ma(...+O(q^{oa+1})) * q^mb(...) is known through
    // min(oa+mb, ob+ma) units.
    r.order = std::min(x.order + y.min_exp, y.order + x.min_exp);
    r.min_exp = x.min_exp + y.min_exp;
    if (r.min_exp > r.order) {
      r.min_exp = r.order + 1;
      return r;
    }
    r.c.assign(r.order - r.min_exp + 1, K(0));
    for (long i = 0; i < x.size(); ++i) {
      if (x.c[i] == K(0)) continue;
      long ea = x.min_exp + i;
      for (long j = 0; j < y.size(); ++j) {
        long e = ea + y.min_exp + j;
        if (e > r.order) break;
        if (y.c[j] == K(0)) continue;
        r.c[e - r.min_exp] += x.c[i] * y.c[j];
      }
    }
    return r;
  }
  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  Series scaled(const K& k) const {
    Series r = *this;
    for (auto& x : r.c) x = x * k;
    return r;
  }

  /// Multiplicative inverse. Requires a nonzero (hence invertible) lowest
  /// coefficient within the known window.
  Series inverse() const {
    long m = valuation();
    long rel = order - m;  // relative precision is preserved
    std::vector<K> a(rel + 1);
    for (long i = 0; i <= rel; ++i) a[i] = coeff(m + i);
    std::vector<K> b(rel + 1, K(0));
    K inv0 = K(1) / a[0];
    b[0] = inv0;
    for (long n = 1; n <= rel; ++n) {
      K acc(0);
      for (long i = 1; i <= n; ++i) acc += a[i] * b[n - i];
      b[n] = K(0) - inv0 * acc;
    }
    Series r;
    r.grid_den = grid_den;
    r.min_exp = -m;
    r.order = -m + rel;
    r.c = std::move(b);
    return r;
  }

  Series pow(long k) const {
    if (k == 0) return constant(K(1), order, grid_den);
    Series base = k > 0 ? *this : inverse();
    long e = k > 0 ? k : -k;
    Series acc = base;
    for (long i = 1; i < e; ++i) acc *= base;
    return acc;
  }

  /// Square root with an explicit branch hint: the result's lowest
  /// coefficient. Requires hint^2 == lowest coefficient and an even lowest
  /// exponent on the grid.
  Series sqrt(const K& hint) const {
    long m = valuation();
    if (m % 2 != 0) throw SeriesError("series_sqrt: odd leading exponent");
    if (!(hint * hint == coeff(m)))
      throw SeriesError("series_sqrt: hint^2 does not match leading term");
    long rel = order - m;
    std::vector<K> a(rel + 1);
    for (long i = 0; i <= rel; ++i) a[i] = coeff(m + i);
    std::vector<K> b(rel + 1, K(0));
    b[0] = hint;
    K half_inv = K(1) / (hint + hint);
    for (long n = 1; n <= rel; ++n) {
      K acc = a[n];
      for (long i = 1; i < n; ++i) acc -= b[i] * b[n - i];
      b[n] = acc * half_inv;
    }
    Series r;
    r.grid_den = grid_den;
    r.min_exp = m / 2;
    r.order = m / 2 + rel;
    r.c = std::move(b);
    return r;
  }

  /// q -> -q. Only meaningful when every odd-denominator exponent is
  /// integral: on a doubled grid the substitution is rejected unless all
  /// genuinely half-integral coefficients vanish.
  Series substitute_neg() const {
    Series r = *this;
    for (long i = 0; i < size(); ++i) {
      long e = min_exp + i;
      if (e % grid_den != 0) {
        if (!(r.c[i] == K(0)))
          throw SeriesError("q -> -q with surviving fractional exponent");
        continue;
      }
      long actual = e / grid_den;
      if (actual % 2 != 0) r.c[i] = K(0) - r.c[i];
    }
    return r;
  }

  bool equals_through(const Series& o, long order_units) const {
    if (grid_den != o.grid_den) {
      auto [x, y] = align(*this, o);
      return x.equals_through(y, order_units * (x.grid_den / grid_den));
    }
    if (order < order_units || o.order < order_units) return false;
    long lo = std::min(min_exp, o.min_exp);
    for (long e = lo; e <= order_units; ++e)
      if (!(coeff(e) == o.coeff(e))) return false;
    return true;
  }

  static std::pair<Series, Series> align(const Series& a, const Series& b) {
    int g = std::lcm(a.grid_den, b.grid_den);
    return {a.regrid(g), b.regrid(g)};
  }

  std::string str(const std::string& var, int max_terms = 64,
                  const std::function<std::string(const K&)>& fmt = nullptr) const;
};

template <class K>
std::string Series<K>::str(const std::string& var, int max_terms,
                           const std::function<std::string(const K&)>& fmt) const {
  std::string out;
  int shown = 0;
  for (long i = 0; i < size() && shown < max_terms; ++i) {
    if (c[i] == K(0)) continue;
    std::string coeff_s;
    if (fmt) {
      coeff_s = fmt(c[i]);
    } else if constexpr (std::is_same_v<K, Rat>) {
      coeff_s = rat_str(c[i]);
    } else {
      coeff_s = "(?)";
    }
    long e = min_exp + i;
    std::string term = coeff_s;
    if (e != 0) {
      term += "*" + var;
      if (e != grid_den) {
        term += "^";
        if (e % grid_den == 0)
          term += std::to_string(e / grid_den);
        else
          term += "(" + std::to_string(e) + "/" + std::to_string(grid_den) + ")";
      }
    }
    if (!out.empty()) out += " + ";
    out += term;
    ++shown;
  }
  if (out.empty()) out = "0";
  out += " + O(" + var + "^";
  if ((order + 1) % grid_den == 0)
    out += std::to_string((order + 1) / grid_den);
  else
    out += "(" + std::to_string(order + 1) + "/" + std::to_string(grid_den) + ")";
  out += ")";
  return out;
}

/// (1 - q^(h units))^k truncated at order_units, on the given grid.
template <class K>
Series<K> one_minus_qh_pow(long h, long k, long order_units, int grid = 1) {
  Series<K> base = Series<K>::constant(K(1), order_units, grid);
  if (h <= order_units) base.set_coeff(h, K(-1));
  return base.pow(k);
}

using QSeries = Series<Rat>;

}  // namespace dnh
