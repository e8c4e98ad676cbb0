#include "doctest.h"

#include "conjlat/lattice.hpp"

using namespace conjlat;

namespace {

GaloisClass make_class(GroupKind kind, Int d,
                       std::optional<std::vector<int>> cycle = {}) {
  GaloisClass g;
  g.kind = kind;
  g.splitting_degree = std::move(d);
  g.cycle = std::move(cycle);
  return g;
}

}  // namespace

TEST_CASE("quadratic Gram closed forms") {
  auto g = gram_quadratic(1, -2, -1);  // x^2-2x-1, D > 0
  CHECK(g.entries == IntMatrix{{Int(6), Int(-2)}, {Int(-2), Int(6)}});
  CHECK(row_sums_ok(g, IntPolynomial::parse("x^2-2x-1")));

  auto h = gram_quadratic(1, 1, 2);  // x^2+x+2, D < 0
  CHECK(h.entries == IntMatrix{{Int(4), Int(-3)}, {Int(-3), Int(4)}});
  CHECK(row_sums_ok(h, IntPolynomial::parse("x^2+x+2")));

  auto k = gram_quadratic(1, 5, 5);
  CHECK(k.entries == IntMatrix{{Int(15), Int(10)}, {Int(10), Int(15)}});

  // scaled non-monic lattice: 3x^2+x-1 -> lattice of x^2+x-3
  auto s = gram_quadratic(3, 1, -1);
  CHECK(s.scale == 3);
  CHECK(s.entries == IntMatrix{{Int(7), Int(-6)}, {Int(-6), Int(7)}});
  CHECK(row_sums_ok(s, IntPolynomial::parse("3x^2+x-1")));

  CHECK_THROWS_AS(gram_quadratic(1, 1, -2), std::domain_error);  // reducible
}

TEST_CASE("rank-deficient quadratic keeps the full matrix") {
  auto g = gram_quadratic(1, 0, -2);  // x^2-2, trace 0
  CHECK(g.basis_size == 1);
  CHECK(g.rank == 1);
  REQUIRE(g.full_entries.has_value());
  CHECK(row_sums_ok(g, IntPolynomial::parse("x^2-2")));
}

TEST_CASE("cyclic cubic Gram") {
  auto f = IntPolynomial::parse("x^3+3x^2-6x+1");
  auto roots = find_roots_auto(f);
  auto g = gram_exact(f, make_class(GroupKind::Cyclic, 3, {{1, 2, 0}}), roots);
  CHECK(g.tier == GramTier::Exact);
  CHECK(g.entries == IntMatrix{{Int(21), Int(-6), Int(-6)},
                               {Int(-6), Int(21), Int(-6)},
                               {Int(-6), Int(-6), Int(21)}});
  CHECK(row_sums_ok(g, f));
}

TEST_CASE("totally real S_n Gram via factorial closed form") {
  auto f = IntPolynomial::parse("x^5+x^4-7x^3-3x^2+3x+1");
  auto roots = find_roots_auto(f);
  auto g = gram_exact(f, make_class(GroupKind::Symmetric, 120), roots);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(g.entries[i][j] == (i == j ? Int(360) : Int(-84)));
  CHECK(row_sums_ok(g, f));  // 360 - 4*84 = 24 = (120/5) * 1
}

TEST_CASE("circulant Gram of the cyclic quintic") {
  auto f = IntPolynomial::parse("x^5+x^4-4x^3-3x^2+3x+1");
  auto roots = find_roots_auto(f);
  auto cycle = cyclic_generator(f, roots);
  auto g = gram_cyclic_circulant(f, cycle, roots);
  CHECK(g.tier == GramTier::Exact);
  Int row_sum = 0;
  for (const auto& v : g.entries[0]) row_sum += v;
  CHECK(row_sum == 1);  // a_4^2
  CHECK(row_sums_ok(g, f));
  // circulant structure
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(g.entries[i][j] == g.entries[0][(j - i + 5) % 5]);
}

TEST_CASE("numeric Gram agrees with the exact one") {
  auto f = IntPolynomial::parse("x^3+3x^2-6x+1");
  auto roots = find_roots_auto(f);
  auto cls = make_class(GroupKind::Cyclic, 3, {{1, 2, 0}});
  auto exact = gram_exact(f, cls, roots);
  auto [emb, num] = gram_numeric(f, cls, roots);
  CHECK(emb.rows.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double e = to_double(exact.entries[i][j]);
      double v = to_double(num.num_entries[i][j]);
      CHECK(std::abs(e - v) < 1e-8 * std::max(1.0, std::abs(e)));
    }
  CHECK(row_sums_ok(num, f));
  CHECK(num.rank == 3);
}

TEST_CASE("rank: prime degree is theorem-backed") {
  auto r = lattice_rank(IntPolynomial::parse("x^3+3x^2-6x+1"));
  CHECK(r.rank == 3);
  CHECK(r.certified);
  auto r2 = lattice_rank(IntPolynomial::parse("x^3-3x+1"));
  CHECK(r2.rank == 2);
  CHECK(r2.certified);
}

TEST_CASE("rank: composite degree detects root relations") {
  auto f = IntPolynomial::parse("x^4+1");
  auto roots = find_roots_auto(f);
  auto r = lattice_rank(f, &roots);
  CHECK(r.rank == 2);  // zeta_8: conjugates pair up to sign
  CHECK_FALSE(r.certified);
}

TEST_CASE("deficient cubic reduces but keeps full row sums") {
  auto f = IntPolynomial::parse("x^3-3x+1");  // disc 81, cyclic, a_2 = 0
  auto roots = find_roots_auto(f);
  auto g = gram_exact(f, make_class(GroupKind::Cyclic, 3, {{1, 2, 0}}), roots);
  CHECK(g.basis_size == 2);
  REQUIRE(g.full_entries.has_value());
  CHECK(row_sums_ok(g, f));
  CHECK(is_positive_definite(g.entries));
}
