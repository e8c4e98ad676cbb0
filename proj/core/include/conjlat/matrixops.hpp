#pragma once

#include <vector>

#include "conjlat/numeric.hpp"

namespace conjlat {

using IntMatrix = std::vector<std::vector<Int>>;
using IntVector = std::vector<Int>;

IntMatrix identity_matrix(int n);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
// Permutation matrix P with P * e_i = e_{perm[i]}.
IntMatrix permutation_matrix(const std::vector<int>& perm);

// Exact determinant by Bareiss fraction-free elimination.
Int bareiss_determinant(IntMatrix m);

// Rank of an integer matrix (fraction-free elimination over Q).
int integer_rank(IntMatrix m);

// All leading principal minors positive <=> positive definite.
bool is_positive_definite(const IntMatrix& g);
// Positive semidefinite check via characteristic-free pivoting on a
// symmetric matrix (rational LDL^T with pivot sign inspection).
bool is_positive_semidefinite(const IntMatrix& g);

Int dot(const IntVector& x, const IntMatrix& g, const IntVector& y);

}  // namespace conjlat
