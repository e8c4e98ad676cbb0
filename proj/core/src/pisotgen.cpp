#include "conjlat/pisotgen.hpp"

#include <cmath>
#include <stdexcept>

namespace conjlat {

namespace {

bool is_small_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace

double main_bound(int n) {
  if (n < 3 || !is_small_prime(n))
    throw std::domain_error("family bound needs a prime degree >= 3");
  Int d = factorial(static_cast<unsigned>(n));
  return t_threshold(n, d);
}

Int min_abs_a0(int n) {
  double bound = main_bound(n);
  Int a0 = static_cast<long>(std::floor(bound)) + 1;
  // bound is irrational, so strictness is automatic; guard anyway
  while (to_double(a0) <= bound) ++a0;
  return a0;
}

std::vector<IntPolynomial> generate_family(const FamilySpec& spec) {
  if (spec.sign_an1 * spec.sign_an1 != 1 || spec.sign_a0 * spec.sign_a0 != 1)
    throw std::domain_error("sign choices must be +1 or -1");
  std::vector<IntPolynomial> out;
  Int abs_a0 = min_abs_a0(spec.n);
  for (int i = 0; i < spec.count; ++i, ++abs_a0) {
    Int a0 = spec.sign_a0 * abs_a0;
    Int an1 = spec.sign_an1 * (abs_a0 + 2);
    std::vector<Int> coeffs(spec.n + 1, Int(0));
    coeffs[0] = a0;
    coeffs[spec.n - 1] = an1;
    coeffs[spec.n] = 1;
    IntPolynomial f(std::move(coeffs));
    if (!perron_criterion(f))
      throw inconsistency_error("family member fails the dominance check");
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace conjlat
