#pragma once

#include <map>
#include <string>
#include <vector>

#include "dnh/combinatorics.hpp"

namespace dnh {

/// The diagonal-pairing Laurent polynomials g_lambda, h_lambda attached to
/// a Young diagram; exposed for tests.
std::map<long, long> g_lambda_poly(const Partition& shape);
std::map<long, long> h_lambda_poly(const Partition& shape);

/// g admits the decomposition A(t) + t A(1/t) iff it is palindromic about
/// t^(1/2); h admits B(t) - t B(1/t) iff anti-palindromic.
bool is_palindromic(const std::map<long, long>& p);      // c_m == c_{1-m}
bool is_antipalindromic(const std::map<long, long>& p);  // c_m == -c_{1-m}

/// The signed diagonal product over boxes and box pairs that evaluates to
/// sigma(lambda) * prod hooks; both sides returned for inspection.
struct HookProductIdentity {
  Rat lhs;
  Rat rhs;
  int sigma = 1;
};
HookProductIdentity hook_product_identity(const Partition& shape);

/// (-1)^(rho + |lambda|(k1+k2)) sigma^(k1+k2) == (-1)^(|lambda| k2 +
/// n(lambda) k1 + n(conj) k2).
bool sign_identity_holds(const Partition& shape, long k1, long k2);

struct AppendixReport {
  bool pass = true;
  long partitions_tested = 0;
  std::vector<std::string> failures;
};

/// Runs the three combinatorial lemmas over every shape of size <= size_max
/// and every (k1,k2) in [k_lo,k_hi]^2.
AppendixReport appendix_suite(int size_max, int k_lo, int k_hi);

}  // namespace dnh
