#pragma once

#include <string>
#include <vector>

#include "conjlat/numeric.hpp"

namespace conjlat {

// Dense integer polynomial, coefficients in ascending power order.
// Canonical form: no trailing zero coefficients, leading coefficient != 0.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> ascending_coeffs);

  // Accepts either "x^3+3x^2-6x+1" or the ascending coefficient list
  // "[1,-6,3,1]".
  static IntPolynomial parse(const std::string& text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Int& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of x^k (0 for k beyond the degree).
  const Int& coeff(int k) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int eval(const Int& x) const;
  Complex eval(const Complex& z) const;
  IntPolynomial derivative() const;

  std::string to_string() const;           // "x^3+3x^2-6x+1"
  std::string coeff_list_string() const;   // "[1,-6,3,1]"

  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Int> coeffs_;
  static const Int zero_;
};

struct SymmetricInvariants {
  Int A;        // sum of squared roots
  Int B;        // sum of pairwise root products
  Int traceE1;  // sum of roots = -a_{n-1}
};

// Exact discriminant via the resultant of f and f'. degree >= 2 required.
Int discriminant(const IntPolynomial& f);

// Newton-identity power sums for monic f. Non-monic input is rejected.
SymmetricInvariants invariants(const IntPolynomial& f);

// Strict dominant-coefficient inequality |a_{n-1}| > 1 + sum |a_k|, k < n-1.
// True implies f is an irreducible Pisot polynomial. Monic input required.
bool perron_criterion(const IntPolynomial& f);

// Exact for degree <= 3; for higher degrees combines the Perron criterion,
// rational-root search and mod-p degree-pattern exclusion, and may return
// tri::undetermined.
tri is_irreducible(const IntPolynomial& f);

// Sylvester-matrix resultant of two integer polynomials.
Int resultant(const IntPolynomial& f, const IntPolynomial& g);

}  // namespace conjlat
