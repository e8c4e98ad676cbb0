#include "doctest.h"

#include <cmath>

#include "conjlat/pisotgen.hpp"

using namespace conjlat;

TEST_CASE("family bound values") {
  double b3 = main_bound(3);
  CHECK(b3 > 20.23);
  CHECK(b3 < 20.24);
  CHECK(std::abs(b3 - 96.0 / (std::sqrt(33.0) - 1.0)) < 1e-9);
  double b5 = main_bound(5);
  CHECK(std::abs(b5 - 3840.0 / (std::sqrt(73.0) - 3.0)) < 1e-6);
  CHECK(b5 > 692.0);
  CHECK(b5 < 693.0);
  CHECK_THROWS_AS(main_bound(4), std::domain_error);
  CHECK_THROWS_AS(main_bound(2), std::domain_error);
}

TEST_CASE("bound equals the d = n! threshold") {
  CHECK(main_bound(3) == t_threshold(3, 6));
  CHECK(main_bound(5) == t_threshold(5, 120));
}

TEST_CASE("smallest admissible members") {
  CHECK(min_abs_a0(3) == 21);
  CHECK(min_abs_a0(5) == 693);

  FamilySpec s3{3, +1, -1, 1};
  auto fam = generate_family(s3);
  REQUIRE(fam.size() == 1);
  CHECK(fam[0] == IntPolynomial::parse("x^3+23x^2-21"));

  FamilySpec s5{5, +1, +1, 1};
  auto fam5 = generate_family(s5);
  REQUIRE(fam5.size() == 1);
  CHECK(fam5[0] == IntPolynomial::parse("x^5+695x^4+693"));
}

TEST_CASE("every member is dominance-certified and admissible") {
  FamilySpec spec{3, -1, +1, 30};
  auto fam = generate_family(spec);
  REQUIRE(fam.size() == 30);
  Int prev_a0 = 0;
  for (const auto& f : fam) {
    CHECK(perron_criterion(f));
    Int a0 = abs(f.coeff(0));
    Int a2 = abs(f.coeff(2));
    CHECK(a2 == a0 + 2);
    CHECK(to_double(a0) > main_bound(3));
    CHECK(a0 > prev_a0);  // strictly increasing enumeration
    prev_a0 = a0;
    CHECK(f.coeff(1) == 0);
    CHECK(f.coeff(2) < 0);
    CHECK(f.coeff(0) > 0);
  }
}

TEST_CASE("the published admissible example clears the bound") {
  CHECK(24.0 > main_bound(3));
  CHECK(perron_criterion(IntPolynomial::parse("x^3+42x^2-24")));
}
