#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "dnh/rational.hpp"

namespace dnh {

struct AntidiagonalPole : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coefficient vector of a linear form c1*s1 + c2*s2 + c3*s3, or the
/// (doubled) exponent vector of a bracket factor t^(mu/2) - t^(-mu/2).
/// Keys are kept sign-normalized: first nonzero component positive.
using FormKey = std::array<long, 3>;

enum class FactorKind { linear, bracket };

/// A nonzero scalar times a multiset of factors with integer exponents.
/// Linear-form factors are stored primitive (content extracted into the
/// scalar), so proportional forms merge; bracket factors are only
/// sign-normalized via [t^-mu] = -[t^mu]. The canonical zero has zero
/// scalar and no factors.
class Factored {
 public:
  Factored() : kind_(FactorKind::linear), scalar_(0) {}
  Factored(FactorKind kind, Rat scalar)
      : kind_(kind), scalar_(std::move(scalar)) {}

  static Factored zero(FactorKind kind) { return Factored(kind, Rat(0)); }
  static Factored one(FactorKind kind) { return Factored(kind, Rat(1)); }

  FactorKind kind() const { return kind_; }
  const Rat& scalar() const { return scalar_; }
  const std::map<FormKey, long>& factors() const { return factors_; }
  bool is_zero() const { return scalar_ == 0; }
  bool is_scalar() const { return factors_.empty(); }

  /// Multiply in a factor^exponent, normalizing the key. For linear forms
  /// the content and sign move into the scalar; for brackets only the sign.
  void push(FormKey f, long exponent);

  void scale(const Rat& r) {
    scalar_ *= r;
    if (scalar_ == 0) factors_.clear();
  }

  friend Factored operator*(const Factored& a, const Factored& b);
  Factored inverse() const;
  Factored pow(long e) const;

  long net_exponent(const FormKey& normalized_key) const {
    auto it = factors_.find(normalized_key);
    return it == factors_.end() ? 0 : it->second;
  }

  /// Total degree (sum of exponents); for a homogeneous evaluation this is
  /// the degree of the underlying rational function.
  long total_degree() const {
    long d = 0;
    for (auto& [f, e] : factors_) d += e;
    return d;
  }

  friend bool operator==(const Factored&, const Factored&) = default;

  std::string str_linear() const;   // in variables s1,s2,s3
  std::string str_bracket() const;  // in variables t1,t2,t3

 private:
  FactorKind kind_;
  Rat scalar_;
  std::map<FormKey, long> factors_;
};

/// Substitute s2 = -s1 into every factor. A net positive power of
/// (s1 + s2) makes the whole expression vanish; a net negative power is a
/// genuine pole and throws AntidiagonalPole. Mixed factors must have
/// cancelled beforehand, which the factor merging guarantees.
Factored restrict_antidiagonal(const Factored& f);

/// The bracket analogue of the anti-diagonal restriction t1 t2 = 1. A
/// factor [t^(a,a,0)] vanishes identically there; writing it as
/// a * [t1 t2] * (unit at t1 t2 = 1), the net [t1 t2]-order decides between
/// an exact zero, a pole, and the finite value a^e carried into the scalar.
/// All other factors restrict pointwise.
Factored restrict_bracket_antidiagonal(const Factored& f);

}  // namespace dnh
