#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "conjlat/galois.hpp"
#include "conjlat/matrixops.hpp"
#include "conjlat/roots.hpp"

namespace conjlat {

enum class GramTier { Exact, Numeric };

// Gram matrix of the conjugate lattice under the trace form; entries are
// <alpha_i, alpha_j> = Tr_K(alpha_i * conj(alpha_j)), either as exact
// integers (tier Exact) or as high-precision reals with an entrywise error
// bound (tier Numeric). For non-monic quadratics the entries carry the
// uniform scale factor a_2^2 (recorded in `scale`).
struct GramMatrix {
  GramTier tier = GramTier::Exact;
  int degree = 0;      // n = deg(f)
  int basis_size = 0;  // n, or n-1 in the rank-deficient case
  int rank = 0;
  Int splitting_degree = 0;  // d = [K:Q]
  Int scale = 1;

  IntMatrix entries;                        // tier Exact
  std::optional<IntMatrix> full_entries;    // n x n matrix before reduction
  std::vector<std::vector<Real>> num_entries;  // tier Numeric
  double error_bound = 0;
};

// d x n matrix of embedding values, row j = images of the roots under the
// j-th group element.
struct EmbeddingMatrix {
  std::vector<std::vector<Complex>> rows;
  std::vector<std::vector<int>> permutations;
};

struct RankResult {
  int rank = 0;
  bool certified = false;  // theorem-backed (prime degree) vs computed
};

// Rank n when a_{n-1} != 0, rank n-1 otherwise, certified for prime
// degree. Composite degrees fall back to integer-relation detection on the
// numeric roots and are flagged uncertified.
RankResult lattice_rank(const IntPolynomial& f, const RootSet* roots = nullptr);

// Closed-form integer Gram construction. Supported: quadratics (both
// signs of the discriminant), cyclic cubics, cyclic prime degree >= 5
// (delegates to gram_cyclic_circulant), and totally-real S_n / A_n.
GramMatrix gram_exact(const IntPolynomial& f, const GaloisClass& g,
                      const RootSet& roots);

// Gram matrix of the scaled quadratic lattice a_2 * L_f; exact integers
// for every irreducible quadratic, unscaled when a_2 = 1.
GramMatrix gram_quadratic(const Int& a2, const Int& a1, const Int& a0);

// Circulant Gram in cycle order for a verified cyclic generator; entries
// are numerically computed sums rounded to integers, guarded by the exact
// row-sum identity and a PSD check.
GramMatrix gram_cyclic_circulant(const IntPolynomial& f,
                                 const std::vector<int>& cycle,
                                 const RootSet& roots);

// Hermitian numeric Gram over all d embeddings realized as the group's
// root permutations; the ground-truth oracle for the exact paths.
std::pair<EmbeddingMatrix, GramMatrix> gram_numeric(const IntPolynomial& f,
                                                    const GaloisClass& g,
                                                    const RootSet& roots);

// (d/n) * a_{n-1}^2: the exact value of every row sum of a full
// (unreduced) Gram matrix (scale-invariant for scaled quadratics).
Int expected_row_sum(const IntPolynomial& f, const Int& splitting_degree);

// Verifies the row-sum identity; exact for tier Exact, within the
// propagated error bound for tier Numeric. Uses full_entries when the
// matrix was rank-reduced.
bool row_sums_ok(const GramMatrix& g, const IntPolynomial& f);

// Embedding permutations for a supported Galois class, deterministic order.
std::vector<std::vector<int>> class_permutations(int n, const GaloisClass& g);

}  // namespace conjlat
