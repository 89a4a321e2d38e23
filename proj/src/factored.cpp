#include "dnh/factored.hpp"

#include <numeric>

namespace dnh {

namespace {

// Returns the scalar extracted while normalizing the key in place.
Rat normalize_key(FormKey& f, FactorKind kind) {
  long g = 0;
  for (long x : f) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) throw std::domain_error("factored: zero factor");
  int sign = 1;
  for (long x : f) {
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  }
  if (kind == FactorKind::linear) {
    for (auto& x : f) x /= sign * g;
    return Rat(sign * g);
  }
  // Bracket keys keep their magnitude: [t^-mu] = -[t^mu] only.
  for (auto& x : f) x *= sign;
  return Rat(sign);
}

}  // namespace

void Factored::push(FormKey f, long exponent) {
  if (is_zero() || exponent == 0) return;
  Rat extracted = normalize_key(f, kind_);
  scalar_ *= rat_pow(extracted, exponent);
  long& e = factors_[f];
  e += exponent;
  if (e == 0) factors_.erase(f);
}

Factored operator*(const Factored& a, const Factored& b) {
  if (a.kind_ != b.kind_)
    throw std::invalid_argument("factored: mixed factor kinds");
  if (a.is_zero() || b.is_zero()) return Factored::zero(a.kind_);
  Factored r(a.kind_, a.scalar_ * b.scalar_);
  r.factors_ = a.factors_;
  for (auto& [f, e] : b.factors_) {
    long& cur = r.factors_[f];
    cur += e;
    if (cur == 0) r.factors_.erase(f);
  }
  return r;
}

Factored Factored::inverse() const {
  if (is_zero()) throw std::domain_error("factored: inverse of zero");
  Factored r(kind_, Rat(1) / scalar_);
  for (auto& [f, e] : factors_) r.factors_[f] = -e;
  return r;
}

Factored Factored::pow(long e) const {
  if (e == 0) return one(kind_);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("factored: zero to negative power");
    return *this;
  }
  Factored r(kind_, rat_pow(scalar_, e));
  for (auto& [f, ex] : factors_) r.factors_[f] = ex * e;
  return r;
}

Factored restrict_antidiagonal(const Factored& f) {
  if (f.kind() != FactorKind::linear)
    throw std::invalid_argument("restrict_antidiagonal: linear forms only");
  if (f.is_zero()) return f;
  const FormKey s1_plus_s2{1, 1, 0};
  long net = f.net_exponent(s1_plus_s2);
  if (net > 0) return Factored::zero(FactorKind::linear);
  if (net < 0)
    throw AntidiagonalPole(
        "restriction s2 = -s1 hits an uncancelled (s1+s2) denominator");
  Factored r(FactorKind::linear, f.scalar());
  for (auto& [key, e] : f.factors()) {
    FormKey g{key[0] - key[1], 0, key[2]};
    // Only multiples of (1,1,0) collapse, and those were excluded above.
    r.push(g, e);
  }
  return r;
}

Factored restrict_bracket_antidiagonal(const Factored& f) {
  if (f.kind() != FactorKind::bracket)
    throw std::invalid_argument(
        "restrict_bracket_antidiagonal: bracket factors only");
  if (f.is_zero()) return f;
  Factored r(FactorKind::bracket, f.scalar());
  long b_order = 0;
  Rat diag_scale(1);
  for (auto& [key, e] : f.factors()) {
    if (key[0] == key[1] && key[2] == 0) {
      // doubled key (2a,2a,0): the bracket of (t1 t2)^a.
      b_order += e;
      diag_scale *= rat_pow(rat_of(key[0], 2), e);
      continue;
    }
    r.push(key, e);
  }
  if (b_order > 0) return Factored::zero(FactorKind::bracket);
  if (b_order < 0)
    throw AntidiagonalPole(
        "restriction t1 t2 = 1 hits an uncancelled [t1 t2] denominator");
  r.scale(diag_scale);
  return r;
}

std::string Factored::str_linear() const {
  if (is_zero()) return "0";
  static const char* names[3] = {"s1", "s2", "s3"};
  std::string out = rat_str(scalar_);
  for (auto& [f, e] : factors_) {
    std::string form;
    for (int k = 0; k < 3; ++k) {
      if (f[k] == 0) continue;
      if (!form.empty()) form += f[k] > 0 ? "+" : "-";
      else if (f[k] < 0) form += "-";
      long m = f[k] < 0 ? -f[k] : f[k];
      if (m != 1) form += std::to_string(m) + "*";
      form += names[k];
    }
    out += " * (" + form + ")";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string Factored::str_bracket() const {
  if (is_zero()) return "0";
  static const char* names[3] = {"t1", "t2", "t3"};
  std::string out = rat_str(scalar_);
  for (auto& [f, e] : factors_) {
    std::string mono;
    for (int k = 0; k < 3; ++k) {
      if (f[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (f[k] != 2) {
        mono += "^(" + std::to_string(f[k]) + "/2)";
      }
    }
    out += " * [" + mono + "]";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace dnh
