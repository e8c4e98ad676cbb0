#pragma once

#include <optional>
#include <string>
#include <utility>

#include "conjlat/lattice.hpp"
#include "conjlat/polynomial.hpp"

namespace conjlat {

struct ClosedFormDet {
  Int radicand = 0;   // exact integer whose square root is the determinant
  Real value;         // sqrt(radicand)
  std::string name;   // formula identifier
};

struct DeterminantReport {
  Int det_gram = 0;  // exact Gram determinant (tier E)
  Real det_lattice;  // sqrt(det_gram)
  std::optional<ClosedFormDet> closed_form;
  std::optional<Real> circulant_full;     // |prod_{j=0..n-1} g(zeta^j)|
  std::optional<Real> circulant_partial;  // |prod_{j=1..n-1} g(zeta^j)|
  bool closed_form_agrees = true;
  bool circulant_agrees = true;
};

// Fraction-free Bareiss determinant of a tier-Exact Gram.
Int det_gram_exact(const GramMatrix& g);

// ((n-2)!)^n (n-1)(A+2B)((n-1)A-2B)^{n-1}, returned as sqrt + exact
// radicand; a negative radicand signals misclassification.
ClosedFormDet det_symmetric(int n, const Int& A, const Int& B);

// Variant ((n-2)!)^n (n-1)(A+B)((n-1)A-B)^{n-1}.
ClosedFormDet det_alternating(int n, const Int& A, const Int& B);

// Circulant determinant through evaluations of g(x) = sum_k conj_k x^k at
// the n-th roots of unity, where conj_k is the root reached from root 0 by
// k applications of the cycle. Returns (full product over j=0..n-1,
// partial product over j=1..n-1), both as magnitudes.
std::pair<Real, Real> det_circulant(const IntPolynomial& f,
                                    const std::vector<int>& cycle,
                                    const RootSet& roots);

// Composes the applicable formulas for the given class and cross-checks
// them against the exact Gram determinant.
DeterminantReport determinant_report(const GramMatrix& g,
                                     const IntPolynomial& f,
                                     const GaloisClass& cls,
                                     const RootSet* roots = nullptr);

}  // namespace conjlat
