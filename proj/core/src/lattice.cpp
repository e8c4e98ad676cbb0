#include "conjlat/lattice.hpp"

#include <algorithm>

#include "conjlat/svp.hpp"

namespace conjlat {

namespace {

constexpr long kSplittingDegreeCap = 5040;

Real to_real(const Int& v) {
  Real r;
  mpfr_set_z(r.backend().data(), v.backend().data(), MPFR_RNDN);
  return r;
}

int permutation_parity(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  int parity = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity;
}

void reduce_if_deficient(GramMatrix& g, const IntPolynomial& f) {
  int n = f.degree();
  if (f.coeff(n - 1) != 0) {
    g.basis_size = n;
    return;
  }
  g.full_entries = g.entries;
  IntMatrix reduced(n - 1, IntVector(n - 1));
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) reduced[i][j] = g.entries[i][j];
  g.entries = std::move(reduced);
  g.basis_size = n - 1;
}

}  // namespace

Int expected_row_sum(const IntPolynomial& f, const Int& splitting_degree) {
  // Scale-free: a_2 * L_f for a non-monic quadratic is the conjugate
  // lattice of x^2 + a_1 x + a_0 a_2, whose x-coefficient is still a_1.
  int n = f.degree();
  Int a = f.coeff(n - 1);
  return splitting_degree / n * a * a;
}

std::vector<std::vector<int>> class_permutations(int n, const GaloisClass& g) {
  std::vector<std::vector<int>> perms;
  switch (g.kind) {
    case GroupKind::Cyclic: {
      if (!g.cycle)
        throw unsupported_error("cyclic class without a generator cycle");
      std::vector<int> current(n);
      for (int i = 0; i < n; ++i) current[i] = i;
      for (int t = 0; t < n; ++t) {
        perms.push_back(current);
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) next[i] = (*g.cycle)[current[i]];
        current = std::move(next);
      }
      break;
    }
    case GroupKind::Symmetric:
    case GroupKind::Alternating: {
      if (factorial(n) > kSplittingDegreeCap)
        throw unsupported_error("splitting degree exceeds the 5040 cap");
      std::vector<int> p(n);
      for (int i = 0; i < n; ++i) p[i] = i;
      bool even_only = g.kind == GroupKind::Alternating;
      do {
        if (!even_only || permutation_parity(p) == 0) perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      break;
    }
    default:
      throw unsupported_error("no embedding realization for Unknown class");
  }
  return perms;
}

GramMatrix gram_quadratic(const Int& a2, const Int& a1, const Int& a0) {
  if (a2 == 0) throw std::domain_error("not a quadratic");
  Int disc = a1 * a1 - 4 * a2 * a0;
  if (is_perfect_square(disc))
    throw std::domain_error("reducible quadratic has no conjugate lattice");
  GramMatrix g;
  g.tier = GramTier::Exact;
  g.degree = 2;
  g.splitting_degree = 2;
  g.scale = abs(a2);
  Int diag, off;
  if (disc > 0) {
    diag = a1 * a1 - 2 * a0 * a2;
    off = 2 * a0 * a2;
  } else {
    diag = 2 * a0 * a2;
    off = a1 * a1 - 2 * a0 * a2;
  }
  g.entries = {{diag, off}, {off, diag}};
  if (a1 == 0) {
    g.full_entries = g.entries;
    g.entries = {{diag}};
    g.basis_size = 1;
  } else {
    g.basis_size = 2;
  }
  g.rank = g.basis_size;
  if (!is_positive_definite(g.entries))
    throw inconsistency_error("quadratic Gram is not positive definite");
  return g;
}

GramMatrix gram_exact(const IntPolynomial& f, const GaloisClass& g,
                      const RootSet& roots) {
  if (!f.is_monic())
    throw unsupported_error("exact Gram requires a monic polynomial");
  int n = f.degree();
  if (n == 2) return gram_quadratic(1, f.coeff(1), f.coeff(0));

  switch (g.kind) {
    case GroupKind::Cyclic: {
      if (n == 3) {
        auto inv = invariants(f);
        GramMatrix out;
        out.tier = GramTier::Exact;
        out.degree = 3;
        out.splitting_degree = 3;
        out.entries = {{inv.A, inv.B, inv.B},
                       {inv.B, inv.A, inv.B},
                       {inv.B, inv.B, inv.A}};
        reduce_if_deficient(out, f);
        out.rank = out.basis_size;
        if (!is_positive_definite(out.entries))
          throw inconsistency_error("cyclic cubic Gram not positive definite");
        return out;
      }
      if (!g.cycle)
        throw unsupported_error("cyclic class without a generator cycle");
      return gram_cyclic_circulant(f, *g.cycle, roots);
    }
    case GroupKind::Symmetric:
    case GroupKind::Alternating: {
      if (roots.real_count != n)
        throw unsupported_error(
            "exactness unsupported: S_n/A_n closed form needs totally real "
            "roots");
      auto inv = invariants(f);
      Int diag = factorial(n - 1) * inv.A;
      Int off = factorial(n - 2) * inv.B;
      if (g.kind == GroupKind::Symmetric) off *= 2;
      GramMatrix out;
      out.tier = GramTier::Exact;
      out.degree = n;
      out.splitting_degree =
          g.kind == GroupKind::Symmetric ? factorial(n) : factorial(n) / 2;
      out.entries.assign(n, IntVector(n, off));
      for (int i = 0; i < n; ++i) out.entries[i][i] = diag;
      reduce_if_deficient(out, f);
      out.rank = out.basis_size;
      if (!is_positive_definite(out.entries))
        throw inconsistency_error("S_n/A_n Gram not positive definite");
      return out;
    }
    default:
      throw unsupported_error("no exact Gram formula for Unknown class");
  }
}

GramMatrix gram_cyclic_circulant(const IntPolynomial& f,
                                 const std::vector<int>& cycle,
                                 const RootSet& roots) {
  int n = f.degree();
  precision_guard guard(roots.precision_bits + 64);

  // Roots in cycle order: beta_{k+1} = sigma(beta_k).
  std::vector<int> orbit{0};
  while (static_cast<int>(orbit.size()) < n) {
    int next = cycle[orbit.back()];
    if (next == 0) break;
    orbit.push_back(next);
  }
  if (static_cast<int>(orbit.size()) != n)
    throw inconsistency_error("generator is not an n-cycle");

  std::vector<Real> beta(n);
  for (int k = 0; k < n; ++k) beta[k] = roots.roots[orbit[k]].re;

  std::vector<Int> c(n);
  Real tol("1e-6");
  for (int t = 0; t < n; ++t) {
    Real sum = 0;
    for (int m = 0; m < n; ++m) sum += beta[m] * beta[(m + t) % n];
    Real rounded = round(sum);
    if (abs(sum - rounded) >= tol)
      throw precision_error("circulant entry failed integer rounding");
    mpfr_get_z(c[t].backend().data(), rounded.backend().data(), MPFR_RNDN);
  }
  Int row_sum = 0;
  for (const auto& v : c) row_sum += v;
  Int a = f.coeff(n - 1);
  if (row_sum != a * a)
    throw inconsistency_error("circulant row sum != a_{n-1}^2");

  GramMatrix out;
  out.tier = GramTier::Exact;
  out.degree = n;
  out.splitting_degree = n;
  out.entries.assign(n, IntVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.entries[i][j] = c[(j - i + n) % n];
  if (!is_positive_semidefinite(out.entries))
    throw inconsistency_error("circulant Gram not PSD: misclassification");
  reduce_if_deficient(out, f);
  out.rank = out.basis_size;
  if (!is_positive_definite(out.entries))
    throw inconsistency_error("circulant Gram not positive definite");
  return out;
}

std::pair<EmbeddingMatrix, GramMatrix> gram_numeric(const IntPolynomial& f,
                                                    const GaloisClass& g,
                                                    const RootSet& roots) {
  int n = f.degree();
  precision_guard guard(roots.precision_bits + 64);
  EmbeddingMatrix emb;
  emb.permutations = class_permutations(n, g);
  long d = static_cast<long>(emb.permutations.size());
  if (d > kSplittingDegreeCap)
    throw unsupported_error("splitting degree exceeds the 5040 cap");

  emb.rows.reserve(d);
  for (const auto& p : emb.permutations) {
    std::vector<Complex> row(n);
    for (int i = 0; i < n; ++i) row[i] = roots.roots[p[i]];
    emb.rows.push_back(std::move(row));
  }

  GramMatrix out;
  out.tier = GramTier::Numeric;
  out.degree = n;
  out.basis_size = n;
  out.splitting_degree = d;
  out.num_entries.assign(n, std::vector<Real>(n, Real(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Complex sum;
      for (long r = 0; r < d; ++r)
        sum += emb.rows[r][i].conj() * emb.rows[r][j];
      out.num_entries[i][j] = sum.re;
      out.num_entries[j][i] = sum.re;
    }

  Real max_abs = 0, max_rad = 0;
  for (int i = 0; i < n; ++i) {
    Real a = roots.roots[i].abs();
    if (a > max_abs) max_abs = a;
    if (roots.radii[i] > max_rad) max_rad = roots.radii[i];
  }
  out.error_bound =
      to_double(Real(d) * (2 * max_abs * max_rad + max_rad * max_rad)) +
      1e-30;

  // Numeric rank via thresholded elimination.
  {
    auto m = out.num_entries;
    Real thr = Real(std::max(out.error_bound * n, 1e-40));
    int rank = 0;
    int rows = n;
    for (int col = 0; col < n && rank < rows; ++col) {
      int pivot = -1;
      Real best = thr;
      for (int r = rank; r < rows; ++r)
        if (abs(m[r][col]) > best) {
          best = abs(m[r][col]);
          pivot = r;
        }
      if (pivot < 0) continue;
      std::swap(m[rank], m[pivot]);
      for (int r = rank + 1; r < rows; ++r) {
        Real factor = m[r][col] / m[rank][col];
        for (int j2 = col; j2 < n; ++j2) m[r][j2] -= factor * m[rank][j2];
      }
      ++rank;
    }
    out.rank = rank;
  }
  return {std::move(emb), out};
}

RankResult lattice_rank(const IntPolynomial& f, const RootSet* roots) {
  int n = f.degree();
  if (n < 1) throw std::domain_error("degree must be >= 1");
  bool prime = n >= 2;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) prime = false;
  if (prime) return {f.coeff(n - 1) != 0 ? n : n - 1, true};

  // Composite degree: no theorem. Detect integer relations among the
  // numeric roots with LLL and report the computed rank.
  if (!roots)
    throw unsupported_error(
        "composite degree rank needs certified roots (no theorem backing)");
  precision_guard guard(roots->precision_bits + 64);
  unsigned bits = roots->precision_bits;
  Real scale = pow(Real(2), static_cast<int>(bits / 2));
  std::vector<Int> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    Real xr = round(roots->roots[i].re * scale);
    Real yr = round(roots->roots[i].im * scale);
    mpfr_get_z(xs[i].backend().data(), xr.backend().data(), MPFR_RNDN);
    mpfr_get_z(ys[i].backend().data(), yr.backend().data(), MPFR_RNDN);
  }
  IntMatrix gram(n, IntVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram[i][j] = Int(i == j) + xs[i] * xs[j] + ys[i] * ys[j];
  auto lll = lll_reduce_gram(gram);
  Real ver_tol = pow(Real(2), -static_cast<int>(bits / 4));
  int relations = 0;
  for (int i = 0; i < n; ++i) {
    Complex sum;
    for (int j = 0; j < n; ++j) {
      Real cj = to_real(lll.transform[i][j]);
      sum.re += cj * roots->roots[j].re;
      sum.im += cj * roots->roots[j].im;
    }
    bool nonzero = false;
    for (int j = 0; j < n; ++j)
      if (lll.transform[i][j] != 0) nonzero = true;
    if (nonzero && sum.abs() < ver_tol) ++relations;
  }
  return {n - relations, false};
}

bool row_sums_ok(const GramMatrix& g, const IntPolynomial& f) {
  const Int expected = expected_row_sum(f, g.splitting_degree);
  if (g.tier == GramTier::Exact) {
    const IntMatrix& m = g.full_entries ? *g.full_entries : g.entries;
    for (const auto& row : m) {
      Int s = 0;
      for (const auto& v : row) s += v;
      if (s != expected) return false;
    }
    return true;
  }
  Real tol = Real(g.error_bound) * g.degree + Real("1e-20");
  Real exp_r = to_real(expected);
  for (const auto& row : g.num_entries) {
    Real s = 0;
    for (const auto& v : row) s += v;
    if (abs(s - exp_r) > tol) return false;
  }
  return true;
}

}  // namespace conjlat
