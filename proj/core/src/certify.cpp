#include "conjlat/certify.hpp"

#include <algorithm>
#include <cmath>

namespace conjlat {

namespace {

// sin^2 of the angle between each basis vector and the span of its
// predecessors, compared against 3/4 in exact rational arithmetic.
bool ordering_weakly_nearly_orthogonal(const IntMatrix& basis_gram) {
  int m = static_cast<int>(basis_gram.size());
  std::vector<std::vector<Rat>> mu(m, std::vector<Rat>(m, Rat(0)));
  std::vector<Rat> norms(m, Rat(0));
  std::vector<std::vector<Rat>> r(m, std::vector<Rat>(m, Rat(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      Rat v = Rat(basis_gram[i][j]);
      for (int k = 0; k < j; ++k) v -= mu[j][k] * r[i][k];
      r[i][j] = v;
      if (j < i) {
        if (norms[j] == 0) return false;
        mu[i][j] = v / norms[j];
      } else {
        norms[i] = v;
        if (v <= 0) return false;
      }
    }
    if (i >= 1) {
      // ||b_i*||^2 / ||b_i||^2 >= 3/4
      if (4 * norms[i] < 3 * Rat(basis_gram[i][i])) return false;
    }
  }
  return true;
}

bool basis_nearly_orthogonal(const IntMatrix& gram,
                             const std::vector<IntVector>& basis) {
  int m = static_cast<int>(basis.size());
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  do {
    IntMatrix bg(m, IntVector(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        bg[i][j] = dot(basis[order[i]], gram, basis[order[j]]);
    if (!ordering_weakly_nearly_orthogonal(bg)) return false;
  } while (std::next_permutation(order.begin(), order.end()));
  return true;
}

}  // namespace

LatticeCertificate certify(const GramMatrix& g, const MinimalVectorSet& mv) {
  LatticeCertificate cert;
  cert.rank = g.rank;
  cert.min_norm_sq = mv.min_norm_sq;
  cert.kissing = mv.kissing;

  int m = g.basis_size;
  IntMatrix span(mv.vectors.begin(), mv.vectors.end());
  int span_rank = integer_rank(span);
  cert.is_wr = {span_rank == g.rank ? tri::yes : tri::no, "enumeration"};
  cert.is_gwr = {
      (cert.is_wr.value == tri::yes && mv.kissing == 2 * g.rank) ? tri::yes
                                                                 : tri::no,
      "enumeration"};

  if (g.tier == GramTier::Exact) {
    cert.determinant = bareiss_determinant(g.entries);
  } else {
    cert.notes.push_back("tier-N Gram: determinant omitted from certificate");
  }

  // Minimal bases: subsets of minimal vectors with |det| = 1 in lattice
  // coordinates.
  std::vector<std::vector<IntVector>> minimal_bases;
  int count = static_cast<int>(mv.vectors.size());
  if (cert.is_wr.value == tri::yes && count >= m) {
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    long combos = 1;
    for (int i = 0; i < m; ++i) combos = combos * (count - i) / (i + 1);
    if (combos <= 20000) {
      // enumerate m-combinations of indices
      std::vector<int> sel(m);
      for (int i = 0; i < m; ++i) sel[i] = i;
      while (true) {
        IntMatrix mat(m);
        for (int i = 0; i < m; ++i) mat[i] = mv.vectors[sel[i]];
        if (abs(bareiss_determinant(mat)) == 1) {
          std::vector<IntVector> basis(m);
          for (int i = 0; i < m; ++i) basis[i] = mv.vectors[sel[i]];
          minimal_bases.push_back(std::move(basis));
          if (minimal_bases.size() >= 50) break;
        }
        int i = m - 1;
        while (i >= 0 && sel[i] == count - m + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < m; ++j) sel[j] = sel[j - 1] + 1;
      }
      cert.has_minimal_basis = {
          minimal_bases.empty() ? tri::no : tri::yes, "enumeration"};
    } else {
      cert.has_minimal_basis = {tri::undetermined, "enumeration"};
      cert.notes.push_back("minimal-basis search skipped: too many subsets");
    }
  } else {
    cert.has_minimal_basis = {tri::no, "enumeration"};
  }

  if (g.tier != GramTier::Exact) {
    cert.is_nearly_orthogonal = {tri::undetermined, "enumeration"};
    return cert;
  }
  if (m > 6) {
    cert.is_nearly_orthogonal = {tri::undetermined, "enumeration"};
    cert.notes.push_back("near-orthogonality skipped: rank > 6");
    return cert;
  }
  bool found = false;
  for (const auto& basis : minimal_bases)
    if (basis_nearly_orthogonal(g.entries, basis)) {
      found = true;
      break;
    }
  if (!found) {
    auto lll = lll_reduce_gram(g.entries);
    std::vector<IntVector> lll_basis(lll.transform.begin(),
                                     lll.transform.end());
    found = basis_nearly_orthogonal(g.entries, lll_basis);
  }
  cert.is_nearly_orthogonal = {found ? tri::yes : tri::no,
                               "enumeration (minimal/LLL bases)"};
  if (!found)
    cert.notes.push_back(
        "near-orthogonality tested over minimal and LLL bases only");
  return cert;
}

PlanarWR planar_wr(const Int& a2, const Int& a1, const Int& a0) {
  if (a2 == 0 || a1 == 0)
    throw std::domain_error("planar criterion needs a_2 != 0 and a_1 != 0");
  Int disc = a1 * a1 - 4 * a2 * a0;
  if (is_perfect_square(disc))
    throw std::domain_error("planar criterion needs an irreducible quadratic");
  // The conjugate vectors are minimal iff the angle between them lies in
  // [pi/3, 2pi/3], i.e. |cos| <= 1/2 with cos = (a1^2 - |D|)/(a1^2 + |D|).
  // That is |D|/3 <= a1^2 <= 3|D|. For D > 0 this collapses to the one-sided
  // a1^2 >= 2 max{3 a0 a2, -a0 a2}; for D < 0 the upper bound is active too.
  Int adisc = abs(disc);
  PlanarWR out;
  out.is_wr = 3 * a1 * a1 >= adisc && a1 * a1 <= 3 * adisc;
  if (out.is_wr) {
    out.minimal_vectors = "{+/-alpha_1, +/-alpha_2}";
    out.automorphisms = "Z/2 x Z/2 (Galois action x sign change)";
  } else {
    out.minimal_vectors = "rank-1 span (beta or gamma direction)";
  }
  return out;
}

CubicWR cubic_wr(const IntPolynomial& f) {
  if (f.degree() != 3 || !f.is_monic())
    throw std::domain_error("cubic criterion needs a monic cubic");
  CubicWR out;
  Int a2 = f.coeff(2);
  if (a2 == 0) {
    out.note = "hypothesis unusable: a_2 = 0";
    return out;
  }
  auto inv = invariants(f);
  if (inv.A >= 3 * a2 * a2) {
    out.note = "sufficient hypothesis A < 3 a_2^2 fails: inconclusive";
    return out;
  }
  if (2 * inv.B < inv.A) out.wr_by_criterion = tri::yes;
  if (3 * abs(inv.B) < inv.A) out.roots_are_minimal = tri::yes;
  if (out.wr_by_criterion != tri::yes)
    out.note = "B >= A/2: criterion does not fire (one-directional)";
  return out;
}

bool divisibility_check(const LatticeCertificate& cert, const IntPolynomial& f,
                        const GaloisClass& g, std::string* note) {
  int n = f.degree();
  Int a = f.coeff(n - 1);
  Int threshold = g.splitting_degree * a * a;
  if (cert.min_norm_sq < threshold) {
    bool ok = cert.kissing % n == 0;
    if (note) *note = ok ? "kissing divisible by n" : "divisibility violated";
    return ok;
  }
  if (note) *note = "hypothesis |L_f| < sqrt(d)|a_{n-1}| not met: vacuous";
  return true;
}

bool verify_galois_isometry(const GramMatrix& g, const GaloisClass& cls) {
  int n = g.degree;
  std::vector<std::vector<int>> generators;
  switch (cls.kind) {
    case GroupKind::Cyclic:
      if (!cls.cycle) throw unsupported_error("cyclic class without cycle");
      generators.push_back(*cls.cycle);
      break;
    case GroupKind::Symmetric:
      for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> p(n);
        for (int j = 0; j < n; ++j) p[j] = j;
        std::swap(p[i], p[i + 1]);
        generators.push_back(std::move(p));
      }
      break;
    case GroupKind::Alternating:
      for (int i = 2; i < n; ++i) {
        std::vector<int> p(n);
        for (int j = 0; j < n; ++j) p[j] = j;
        p[0] = 1;
        p[1] = i;
        p[i] = 0;
        generators.push_back(std::move(p));
      }
      break;
    default:
      throw unsupported_error("no Galois generators for Unknown class");
  }
  if (g.tier != GramTier::Exact)
    throw unsupported_error("isometry check requires a tier-Exact Gram");

  int m = g.basis_size;
  for (const auto& perm : generators) {
    IntMatrix action(m, IntVector(m, 0));  // column i = image of e_i
    for (int i = 0; i < m; ++i) {
      int img = perm[i];
      if (img < m) {
        action[img][i] = 1;
      } else {
        // alpha_n = -sum of the basis conjugates
        for (int r = 0; r < m; ++r) action[r][i] = -1;
      }
    }
    IntMatrix lhs = mat_mul(mat_mul(transpose(action), g.entries), action);
    if (lhs != g.entries)
      throw inconsistency_error(
          "Galois action is not an isometry: Gram construction bug");
  }
  return true;
}

double coherence_bound(int n) {
  if (n < 3) throw std::domain_error("coherence bound needs n >= 3");
  double s = std::sqrt(static_cast<double>(n - 2) * (n - 2) + 16.0 * (n - 1));
  return (s - (n - 2)) / (8.0 * (n - 1));
}

double t_threshold(int n, const Int& d) {
  if (n < 3) throw std::domain_error("threshold needs n >= 3");
  double s = std::sqrt(static_cast<double>(n - 2) * (n - 2) + 16.0 * (n - 1));
  return 8.0 * to_double(d) * (n - 1) / (s - (n - 2));
}

}  // namespace conjlat
