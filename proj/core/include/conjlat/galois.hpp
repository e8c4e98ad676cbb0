#pragma once

#include <optional>
#include <vector>

#include "conjlat/roots.hpp"

namespace conjlat {

enum class GroupKind { Cyclic, Symmetric, Alternating, Unknown };

const char* to_string(GroupKind k);

// Classification of Gal(f) into the cases with a closed-form Gram matrix.
// For Cyclic the generating root permutation is recorded (cycle[i] is the
// image index of root i).
struct GaloisClass {
  GroupKind kind = GroupKind::Unknown;
  std::optional<std::vector<int>> cycle;
  Int splitting_degree = 0;
};

struct CycleTypeSample {
  long prime = 0;
  std::vector<int> degree_pattern;  // sorted multiset, sums to deg(f)
};

// Dedekind sampling: factor-degree patterns of f mod p over the given
// primes. Primes dividing disc(f) * lead(f) are skipped.
std::vector<CycleTypeSample> cycle_type_sample(const IntPolynomial& f,
                                               const std::vector<long>& primes);

// First `count` primes coprime to disc(f) * lead(f).
std::vector<long> sampling_primes(const IntPolynomial& f, int count = 25);

// Heuristic-but-verified classification; degree 2 and 3 are exact, prime
// degree >= 5 uses cycle-type generation criteria, everything else is
// Unknown. Downstream Gram construction re-verifies the class numerically.
GaloisClass classify_galois(const IntPolynomial& f,
                            const std::vector<CycleTypeSample>& samples,
                            const RootSet& roots);

// Recovers an n-cycle generating a verified cyclic Galois group of prime
// order, by Lagrange interpolation with rational-coefficient
// reconstruction. Throws inconsistency_error when no candidate verifies.
std::vector<int> cyclic_generator(const IntPolynomial& f, const RootSet& roots);

}  // namespace conjlat
