#pragma once

#include <vector>

#include "conjlat/polynomial.hpp"

namespace conjlat {

inline constexpr unsigned kDefaultPrecisionBits = 256;
inline constexpr unsigned kMaxPrecisionBits = 4096;

// Certified complex approximations of the roots of a squarefree polynomial.
// Real roots come first (descending), complex roots follow in conjugate
// pairs (positive imaginary part first). Every error disk is disjoint from
// the others.
struct RootSet {
  std::vector<Complex> roots;
  std::vector<Real> radii;
  std::vector<bool> is_real;
  int real_count = 0;
  int complex_pair_count = 0;
  unsigned precision_bits = 0;
};

// Aberth-Ehrlich simultaneous iteration with the a-posteriori radius bound
// n|f(z)|/|f'(z)|. Throws precision_error when certification fails at the
// requested precision and std::domain_error on repeated roots.
RootSet find_roots(const IntPolynomial& f, unsigned precision_bits);

// find_roots with automatic precision doubling up to kMaxPrecisionBits.
RootSet find_roots_auto(const IntPolynomial& f,
                        unsigned precision_bits = kDefaultPrecisionBits);

// True iff f has exactly one real root > 1 and every other root has
// certified modulus < 1. Throws precision_error when an error disk
// straddles the unit circle.
bool classify_pisot(const IntPolynomial& f, const RootSet& roots);

// classify_pisot with automatic precision doubling; tri::undetermined when
// even kMaxPrecisionBits cannot separate a root from the unit circle.
tri classify_pisot_auto(const IntPolynomial& f,
                        unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace conjlat
