#include "conjlat/detform.hpp"

#include <cmath>

namespace conjlat {

namespace {

Real int_to_real(const Int& v) {
  Real r;
  mpfr_set_z(r.backend().data(), v.backend().data(), MPFR_RNDN);
  return r;
}

ClosedFormDet closed_form(int n, const Int& A, const Int& off_b,
                          const char* name) {
  // common shape: ((n-2)!)^n (n-1)(A + k B)((n-1)A - k B)^{n-1} with the
  // off-diagonal multiplier k folded into off_b = k*B
  Int fac = pow_int(factorial(n - 2), static_cast<unsigned>(n));
  ClosedFormDet out;
  out.name = name;
  out.radicand = fac * (n - 1) * (A + off_b) *
                 pow_int((n - 1) * A - off_b, static_cast<unsigned>(n - 1));
  if (out.radicand < 0)
    throw inconsistency_error(
        "negative determinant radicand: class/formula mismatch");
  out.value = sqrt(int_to_real(out.radicand));
  return out;
}

}  // namespace

Int det_gram_exact(const GramMatrix& g) {
  if (g.tier != GramTier::Exact)
    throw unsupported_error("exact determinant requires a tier-Exact Gram");
  return bareiss_determinant(g.entries);
}

ClosedFormDet det_symmetric(int n, const Int& A, const Int& B) {
  return closed_form(n, A, 2 * B, "symmetric");
}

ClosedFormDet det_alternating(int n, const Int& A, const Int& B) {
  return closed_form(n, A, B, "alternating");
}

std::pair<Real, Real> det_circulant(const IntPolynomial& f,
                                    const std::vector<int>& cycle,
                                    const RootSet& roots) {
  int n = f.degree();
  precision_guard guard(roots.precision_bits);

  // coefficients of g: the orbit of root 0 under the cycle
  std::vector<Complex> orbit(n);
  int idx = 0;
  for (int k = 0; k < n; ++k) {
    orbit[k] = roots.roots[idx];
    idx = cycle[idx];
  }

  Real pi;
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  Real two_pi = 2 * pi;
  Real full(1), partial(1);
  for (int j = 0; j < n; ++j) {
    Real angle = two_pi * j / n;
    Complex zeta(cos(angle), sin(angle));
    Complex acc = orbit[n - 1];
    for (int k = n - 2; k >= 0; --k) acc = acc * zeta + orbit[k];
    Real mag = acc.abs();
    full *= mag;
    if (j > 0) partial *= mag;
  }
  return {full, partial};
}

DeterminantReport determinant_report(const GramMatrix& g,
                                     const IntPolynomial& f,
                                     const GaloisClass& cls,
                                     const RootSet* roots) {
  DeterminantReport rep;
  rep.det_gram = det_gram_exact(g);
  rep.det_lattice = sqrt(int_to_real(rep.det_gram));

  bool full_rank = g.basis_size == g.degree;
  int n = g.degree;
  if (full_rank && g.scale == 1 && n >= 3 && f.is_monic()) {
    auto inv = invariants(f);
    if (cls.kind == GroupKind::Symmetric) {
      rep.closed_form = det_symmetric(n, inv.A, inv.B);
      rep.closed_form_agrees = rep.closed_form->radicand == rep.det_gram;
    } else if (cls.kind == GroupKind::Alternating) {
      rep.closed_form = det_alternating(n, inv.A, inv.B);
      rep.closed_form_agrees = rep.closed_form->radicand == rep.det_gram;
    }
  }
  if (full_rank && cls.kind == GroupKind::Cyclic && cls.cycle && roots &&
      n >= 3) {
    auto [full, partial] = det_circulant(f, *cls.cycle, *roots);
    rep.circulant_full = full;
    rep.circulant_partial = partial;
    double fp = to_double(full);
    double dg = to_double(rep.det_gram);
    rep.circulant_agrees = std::abs(fp * fp - dg) <= 1e-6 * std::max(dg, 1.0);
  }
  return rep;
}

}  // namespace conjlat
