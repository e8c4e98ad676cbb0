#include "doctest.h"

#include <functional>
#include <random>

#include "conjlat/svp.hpp"

using namespace conjlat;

namespace {

// Independent brute-force oracle over a coefficient box.
Int brute_force_min(const IntMatrix& g, int box) {
  int n = static_cast<int>(g.size());
  std::vector<Int> x(n, Int(0));
  Int best = -1;
  std::function<void(int)> rec = [&](int level) {
    if (level == n) {
      Int norm = dot(x, g, x);
      if (norm > 0 && (best < 0 || norm < best)) best = norm;
      return;
    }
    for (int v = -box; v <= box; ++v) {
      x[level] = v;
      rec(level + 1);
    }
  };
  rec(0);
  return best;
}

}  // namespace

TEST_CASE("LLL reduces the frozen quadratic Gram") {
  IntMatrix g = {{Int(15), Int(10)}, {Int(10), Int(15)}};
  auto res = lll_reduce_gram(g);
  CHECK(bareiss_determinant(res.reduced) == 125);
  CHECK(abs(bareiss_determinant(res.transform)) == 1);
  CHECK(res.reduced == mat_mul(mat_mul(res.transform, g),
                               transpose(res.transform)));
  // reduced diagonal sorted small first and below the original
  CHECK(res.reduced[0][0] <= 10);
}

TEST_CASE("LLL rejects semidefinite input") {
  CHECK_THROWS_AS(lll_reduce_gram({{Int(1), Int(1)}, {Int(1), Int(1)}}),
                  std::domain_error);
}

TEST_CASE("shortest vectors of the worked quadratics") {
  auto a = shortest_vectors_exact({{Int(6), Int(-2)}, {Int(-2), Int(6)}});
  CHECK(a.min_norm_sq == 6);
  CHECK(a.kissing == 4);
  REQUIRE(a.vectors.size() == 2);
  CHECK(a.vectors[0] == IntVector{Int(0), Int(1)});
  CHECK(a.vectors[1] == IntVector{Int(1), Int(0)});

  auto b = shortest_vectors_exact({{Int(15), Int(10)}, {Int(10), Int(15)}});
  CHECK(b.min_norm_sq == 10);
  CHECK(b.kissing == 2);
  REQUIRE(b.vectors.size() == 1);
  CHECK(b.vectors[0] == IntVector{Int(1), Int(-1)});
}

TEST_CASE("enumeration agrees with brute force on random Grams") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 3;
    IntMatrix b(n, IntVector(n));
    do {
      for (auto& row : b)
        for (auto& v : row) v = coef(rng);
    } while (bareiss_determinant(b) == 0);
    IntMatrix g = mat_mul(b, transpose(b));
    auto mv = shortest_vectors_exact(g);
    // the box gives an upper bound on the minimum; the enumerated minimum
    // must not exceed it and must be achieved by every reported vector
    CHECK(mv.min_norm_sq <= brute_force_min(g, 6));
    for (const auto& v : mv.vectors) CHECK(dot(v, g, v) == mv.min_norm_sq);
  }
}

TEST_CASE("enumerate_below returns every vector in the ball") {
  IntMatrix g = {{Int(2), Int(0)}, {Int(0), Int(2)}};
  auto v = enumerate_below(g, 4);
  // up to sign: (1,0),(0,1),(1,1),(1,-1) at norms 2,2,4,4
  CHECK(v.size() == 4);
}

TEST_CASE("cubic worked example via the exact path") {
  IntMatrix g = {{Int(21), Int(-6), Int(-6)},
                 {Int(-6), Int(21), Int(-6)},
                 {Int(-6), Int(-6), Int(21)}};
  auto mv = shortest_vectors_exact(g);
  CHECK(mv.min_norm_sq == 21);
  CHECK(mv.kissing == 6);
}
