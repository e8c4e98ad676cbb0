#pragma once

#include <vector>

#include "conjlat/lattice.hpp"
#include "conjlat/matrixops.hpp"

namespace conjlat {

// Complete set of shortest nonzero vectors, one representative per +/-
// pair, in lattice (basis) coordinates, lexicographically sorted.
struct MinimalVectorSet {
  Int min_norm_sq = 0;
  std::vector<IntVector> vectors;
  int kissing = 0;  // 2 * vectors.size()
  bool numeric = false;
  Real min_norm_num;  // set when derived from a tier-Numeric Gram
};

struct LLLResult {
  IntMatrix transform;  // unimodular U, rows = new basis in old coordinates
  IntMatrix reduced;    // U * G * U^T
};

// LLL (delta = 0.99) on a positive definite integer Gram matrix with exact
// rational Gram-Schmidt.
LLLResult lll_reduce_gram(const IntMatrix& gram);

// LLL on a tier-Exact GramMatrix; throws on semidefinite input.
LLLResult lll_reduce(const GramMatrix& g);

// Fincke-Pohst enumeration below the given squared radius (inclusive) on a
// positive definite integer Gram matrix. Returns all nonzero solutions up
// to sign.
std::vector<IntVector> enumerate_below(const IntMatrix& gram,
                                       const Int& radius_sq);

// Exact shortest-vector set of a positive definite integer Gram matrix.
MinimalVectorSet shortest_vectors_exact(const IntMatrix& gram);

// Shortest vectors of a GramMatrix; tier Numeric is handled by scaled
// integer rounding with re-verification, and throws precision_error when
// the error bound cannot separate norm values.
MinimalVectorSet shortest_vectors(const GramMatrix& g);

}  // namespace conjlat
