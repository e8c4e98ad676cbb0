#include "doctest.h"

#include <random>

#include "conjlat/matrixops.hpp"

using namespace conjlat;

TEST_CASE("Bareiss determinant on frozen examples") {
  CHECK(bareiss_determinant({{Int(6), Int(-2)}, {Int(-2), Int(6)}}) == 32);
  IntMatrix cyc = {{Int(21), Int(-6), Int(-6)},
                   {Int(-6), Int(21), Int(-6)},
                   {Int(-6), Int(-6), Int(21)}};
  CHECK(bareiss_determinant(cyc) == 6561);
  IntMatrix diag(3, IntVector(3, Int(0)));
  for (int i = 0; i < 3; ++i) diag[i][i] = 1764;
  CHECK(bareiss_determinant(diag) == Int(1764) * 1764 * 1764);
}

TEST_CASE("determinant is invariant under unimodular transforms") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3;
    IntMatrix b(n, IntVector(n));
    do {
      for (auto& row : b)
        for (auto& v : row) v = coef(rng);
    } while (bareiss_determinant(b) == 0);
    IntMatrix g = mat_mul(b, transpose(b));
    // elementary unimodular row op on both sides
    IntMatrix u = identity_matrix(n);
    u[0][1] = coef(rng);
    u[2][0] = coef(rng);
    IntMatrix g2 = mat_mul(mat_mul(u, g), transpose(u));
    CHECK(bareiss_determinant(g2) == bareiss_determinant(g));
  }
}

TEST_CASE("integer rank") {
  CHECK(integer_rank({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 1);
  CHECK(integer_rank({{Int(1), Int(0)}, {Int(0), Int(1)}}) == 2);
  CHECK(integer_rank({{Int(0), Int(0)}, {Int(0), Int(0)}}) == 0);
  CHECK(integer_rank({{Int(1), Int(2), Int(3)}, {Int(4), Int(5), Int(6)},
                      {Int(5), Int(7), Int(9)}}) == 2);
}

TEST_CASE("definiteness tests") {
  CHECK(is_positive_definite({{Int(6), Int(-2)}, {Int(-2), Int(6)}}));
  CHECK_FALSE(is_positive_definite({{Int(1), Int(2)}, {Int(2), Int(1)}}));
  CHECK(is_positive_semidefinite({{Int(1), Int(1)}, {Int(1), Int(1)}}));
  CHECK_FALSE(is_positive_semidefinite({{Int(0), Int(1)}, {Int(1), Int(0)}}));
}

TEST_CASE("quadratic form evaluation") {
  IntMatrix g = {{Int(6), Int(-2)}, {Int(-2), Int(6)}};
  CHECK(dot({Int(1), Int(0)}, g, {Int(1), Int(0)}) == 6);
  CHECK(dot({Int(1), Int(1)}, g, {Int(1), Int(1)}) == 8);
  CHECK(dot({Int(1), Int(0)}, g, {Int(0), Int(1)}) == -2);
}

TEST_CASE("permutation matrices act by index relabeling") {
  auto p = permutation_matrix({1, 2, 0});
  // column i holds e_{perm[i]}
  CHECK(p[1][0] == 1);
  CHECK(p[2][1] == 1);
  CHECK(p[0][2] == 1);
  CHECK(bareiss_determinant(p) == 1);  // 3-cycle is even
}
