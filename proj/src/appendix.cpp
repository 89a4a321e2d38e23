#include "dnh/appendix.hpp"

#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dnh {

namespace {

int sgn_long(long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

void add_coeff(std::map<long, long>& p, long e, long v) {
  long& c = p[e];
  c += v;
  if (c == 0) p.erase(e);
}

}  // namespace

std::map<long, long> g_lambda_poly(const Partition& shape) {
  std::map<long, long> g;
  auto boxes = shape.boxes();
  for (Box b : boxes)
    if (b.i == b.j && b.i != 0) add_coeff(g, -b.i, 1);
  for (Box p : boxes)
    for (Box q : boxes) {
      // (i,j) = (l+a, k+a), a not 0 or 1: contributes sgn(a) t^a.
      if (p.i - q.i == p.j - q.j) {
        long a = p.i - q.i;
        if (a != 0 && a != 1) add_coeff(g, a, sgn_long(a));
      }
      // (i,j) = (l+a-1, k+a): a = j-k = i-l+1.
      if (p.i - q.i + 1 == p.j - q.j) {
        long a = p.j - q.j;
        if (a != 0 && a != 1) add_coeff(g, a, -sgn_long(a));
      }
    }
  return g;
}

std::map<long, long> h_lambda_poly(const Partition& shape) {
  std::map<long, long> h;
  auto boxes = shape.boxes();
  for (Box b : boxes)
    if (b.i == b.j && b.i != 0) add_coeff(h, -b.i, 1);
  for (Box p : boxes)
    for (Box q : boxes) {
      if (p.i - q.i == p.j - q.j) {
        long a = p.i - q.i;
        if (a != 0 && a != 1) add_coeff(h, a, -1);
      }
      if (p.i - q.i + 1 == p.j - q.j) {
        long a = p.j - q.j;
        if (a != 0 && a != 1) add_coeff(h, a, 1);
      }
    }
  return h;
}

bool is_palindromic(const std::map<long, long>& p) {
  for (auto& [e, c] : p) {
    auto it = p.find(1 - e);
    if (it == p.end() || it->second != c) return false;
  }
  return true;
}

bool is_antipalindromic(const std::map<long, long>& p) {
  for (auto& [e, c] : p) {
    auto it = p.find(1 - e);
    if (it == p.end() || it->second != -c) return false;
  }
  return true;
}

HookProductIdentity hook_product_identity(const Partition& shape) {
  HookProductIdentity out;
  auto boxes = shape.boxes();
  Rat lhs(1);
  int sigma = 1;
  for (Box b : boxes) {
    long v = b.j - b.i;
    if (v != 0) {
      lhs *= v;
      sigma *= sgn_long(v);
    }
  }
  for (Box p : boxes)
    for (Box q : boxes) {
      long u = p.i - p.j + q.j - q.i;  // i-j+k-l
      if (1 + u != 0) {
        lhs *= (1 + u);
        sigma *= sgn_long(1 + u);
      }
      if (u != 0) {
        lhs /= u;
        sigma *= sgn_long(u);
      }
    }
  out.lhs = lhs;
  out.sigma = sigma;
  out.rhs = Rat(sigma) * shape.hook_product();
  return out;
}

bool sign_identity_holds(const Partition& shape, long k1, long k2) {
  auto boxes = shape.boxes();
  long rho = 0;
  int sigma = hook_product_identity(shape).sigma;
  for (Box b : boxes) {
    if (b.i == b.j) continue;  // (i,j) = (a,a) excluded
    rho += b.i * k1 + b.j * k2;
  }
  for (Box p : boxes)
    for (Box q : boxes) {
      long u = p.i - p.j + q.j - q.i;
      if (1 + u != 0) rho += (p.i - q.i + 1) * k1 + (p.j - q.j) * k2;
      if (u != 0) rho += (p.i - q.i) * k1 + (p.j - q.j) * k2;
    }
  long lhs_exp = rho + shape.size() * (k1 + k2);
  Rat lhs = minus_one_pow(lhs_exp) * rat_pow(Rat(sigma), k1 + k2);
  Rat rhs = minus_one_pow(shape.size() * k2 + shape.n_stat() * k1 +
                          shape.n_conj_stat() * k2);
  return lhs == rhs;
}

AppendixReport appendix_suite(int size_max, int k_lo, int k_hi) {
  AppendixReport rep;
  std::vector<Partition> shapes;
  for (int d = 0; d <= size_max; ++d)
    for (Partition& p : enumerate_partitions(d)) shapes.push_back(std::move(p));
  rep.partitions_tested = static_cast<long>(shapes.size());
  std::vector<std::string> fails(shapes.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(shapes.size()); ++i) {
    const Partition& sh = shapes[i];
    std::ostringstream bad;
    if (!is_palindromic(g_lambda_poly(sh)))
      bad << "g_lambda not palindromic for " << sh.str() << "; ";
    if (!is_antipalindromic(h_lambda_poly(sh)))
      bad << "h_lambda not anti-palindromic for " << sh.str() << "; ";
    HookProductIdentity hp = hook_product_identity(sh);
    if (!(hp.lhs == hp.rhs))
      bad << "hook product identity fails for " << sh.str() << "; ";
    for (long k1 = k_lo; k1 <= k_hi; ++k1)
      for (long k2 = k_lo; k2 <= k_hi; ++k2)
        if (!sign_identity_holds(sh, k1, k2)) {
          bad << "sign identity fails for " << sh.str() << " at k=(" << k1
              << "," << k2 << "); ";
          k1 = k_hi + 1;
          break;
        }
    fails[i] = bad.str();
  }
  for (auto& f : fails)
    if (!f.empty()) {
      rep.pass = false;
      rep.failures.push_back(f);
    }
  return rep;
}

}  // namespace dnh
