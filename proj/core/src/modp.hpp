#pragma once

// Internal helpers: univariate polynomial arithmetic over a small prime
// field, used for degree-pattern sampling (Dedekind cycle types) and the
// mod-p irreducibility checks.

#include <optional>
#include <vector>

#include "conjlat/polynomial.hpp"

namespace conjlat::modp {

using Poly = std::vector<long>;  // ascending, reduced mod p, no leading zeros

Poly reduce(const IntPolynomial& f, long p);
Poly trim(Poly a);
Poly mul(const Poly& a, const Poly& b, long p);
Poly mod(Poly a, const Poly& m, long p);
Poly gcd(Poly a, Poly b, long p);
Poly derivative(const Poly& a, long p);
Poly powmod_x(long e_base, const Poly& m, long p);  // x^(p) mod m, via e_base=p
Poly powmod(Poly base, long exp, const Poly& m, long p);

// Multiset of irreducible-factor degrees of f mod p (distinct-degree
// factorization). Returns nullopt when f mod p drops degree or is not
// squarefree, i.e. when p is inadmissible for Dedekind sampling.
std::optional<std::vector<int>> degree_pattern(const IntPolynomial& f, long p);

}  // namespace conjlat::modp
