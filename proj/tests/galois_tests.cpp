#include "doctest.h"

#include "conjlat/galois.hpp"

using namespace conjlat;

namespace {

GaloisClass classify(const char* poly) {
  auto f = IntPolynomial::parse(poly);
  auto roots = find_roots_auto(f);
  return classify_galois(f, cycle_type_sample(f, sampling_primes(f)), roots);
}

}  // namespace

TEST_CASE("degree 2 and 3 classification is exact") {
  CHECK(classify("x^2-2x-1").kind == GroupKind::Cyclic);
  CHECK(classify("x^2-2x-1").splitting_degree == 2);

  auto cyc = classify("x^3+3x^2-6x+1");  // disc 729 = 27^2
  CHECK(cyc.kind == GroupKind::Cyclic);
  CHECK(cyc.splitting_degree == 3);
  REQUIRE(cyc.cycle.has_value());

  auto s3 = classify("x^3+32x^2-28");  // disc positive, not a square
  CHECK(s3.kind == GroupKind::Symmetric);
  CHECK(s3.splitting_degree == 6);

  CHECK(classify("x^3+49x^2+47").kind == GroupKind::Symmetric);
}

TEST_CASE("prime degree 5 classification") {
  CHECK(classify("x^5+x^4-7x^3-3x^2+3x+1").kind == GroupKind::Symmetric);
  CHECK(classify("x^5+20x+16").kind == GroupKind::Alternating);
  CHECK(classify("x^5+20x+16").splitting_degree == 60);
  auto cyc = classify("x^5+x^4-4x^3-3x^2+3x+1");
  CHECK(cyc.kind == GroupKind::Cyclic);
  CHECK(cyc.splitting_degree == 5);
  REQUIRE(cyc.cycle.has_value());
}

TEST_CASE("composite degree is Unknown") {
  CHECK(classify("x^4+1").kind == GroupKind::Unknown);
}

TEST_CASE("cycle-type samples are factor patterns") {
  auto f = IntPolynomial::parse("x^3+3x^2-6x+1");
  auto samples = cycle_type_sample(f, sampling_primes(f, 10));
  CHECK(!samples.empty());
  for (const auto& s : samples) {
    int sum = 0;
    for (int d : s.degree_pattern) sum += d;
    CHECK(sum == 3);
    // cyclic cubic: every pattern is {3} or {1,1,1}
    CHECK((s.degree_pattern == std::vector<int>{3} ||
           s.degree_pattern == std::vector<int>{1, 1, 1}));
  }
}

TEST_CASE("recovered cyclic generator is a verified n-cycle") {
  auto f = IntPolynomial::parse("x^5+x^4-4x^3-3x^2+3x+1");
  auto roots = find_roots_auto(f);
  auto cycle = cyclic_generator(f, roots);
  REQUIRE(cycle.size() == 5);
  // single orbit of length 5
  std::vector<bool> seen(5, false);
  int j = 0;
  for (int k = 0; k < 5; ++k) {
    CHECK(!seen[j]);
    seen[j] = true;
    j = cycle[j];
  }
  CHECK(j == 0);
}
