#pragma once

#include <vector>

#include "conjlat/certify.hpp"
#include "conjlat/polynomial.hpp"

namespace conjlat {

struct FamilySpec {
  int n = 3;         // prime degree >= 3
  int sign_an1 = 1;  // sign of a_{n-1}
  int sign_a0 = -1;  // sign of a_0
  int count = 1;
};

// 8(n-1)n! / (sqrt((n-2)^2 + 16(n-1)) - (n-2)): the |a_0| threshold above
// which x^n + a_{n-1}x^{n-1} + a_0 with |a_{n-1}| >= |a_0| + 2 yields a
// generically well-rounded, nearly orthogonal conjugate lattice.
double main_bound(int n);

// Smallest integer |a_0| strictly above main_bound(n).
Int min_abs_a0(int n);

// Deterministic family enumeration: |a_0| ascending from the threshold,
// |a_{n-1}| = |a_0| + 2 (minimal admissible), fixed sign pattern. Every
// member passes the dominant-coefficient criterion by construction, which
// is re-verified.
std::vector<IntPolynomial> generate_family(const FamilySpec& spec);

}  // namespace conjlat
