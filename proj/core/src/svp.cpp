#include "conjlat/svp.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace conjlat {

namespace {

struct GSO {
  std::vector<std::vector<Rat>> mu;  // mu[i][j], j < i
  std::vector<Rat> norms;            // ||b_i*||^2
};

GSO gram_schmidt(const IntMatrix& g) {
  int n = static_cast<int>(g.size());
  GSO s;
  s.mu.assign(n, std::vector<Rat>(n, Rat(0)));
  s.norms.assign(n, Rat(0));
  std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      Rat v = Rat(g[i][j]);
      for (int k = 0; k < j; ++k) v -= s.mu[j][k] * r[i][k];
      r[i][j] = v;
      if (j < i) {
        if (s.norms[j] == 0)
          throw std::domain_error("degenerate lattice: semidefinite Gram");
        s.mu[i][j] = v / s.norms[j];
      } else {
        s.norms[i] = v;
        if (v <= 0)
          throw std::domain_error("degenerate lattice: semidefinite Gram");
      }
    }
  }
  return s;
}

Int round_rat(const Rat& r) {
  // nearest integer, ties toward even via floor(r + 1/2)
  Rat shifted = r + Rat(1, 2);
  Int q = numerator(shifted) / denominator(shifted);
  if (shifted < 0 && Rat(q) != shifted) q -= 1;
  return q;
}

}  // namespace

LLLResult lll_reduce_gram(const IntMatrix& gram) {
  int n = static_cast<int>(gram.size());
  IntMatrix u = identity_matrix(n);
  IntMatrix g = gram;
  if (n <= 1) return {u, g};

  const Rat delta(99, 100);
  auto apply_row_op = [&](int target, int source, const Int& q) {
    // b_target -= q * b_source
    for (int j = 0; j < n; ++j) u[target][j] -= q * u[source][j];
    for (int j = 0; j < n; ++j) g[target][j] -= q * g[source][j];
    for (int j = 0; j < n; ++j) g[j][target] -= q * g[j][source];
  };
  auto swap_rows = [&](int a, int b) {
    std::swap(u[a], u[b]);
    std::swap(g[a], g[b]);
    for (int j = 0; j < n; ++j) std::swap(g[j][a], g[j][b]);
  };

  GSO s = gram_schmidt(g);
  int k = 1;
  while (k < n) {
    for (int j = k - 1; j >= 0; --j) {
      Int q = round_rat(s.mu[k][j]);
      if (q != 0) {
        apply_row_op(k, j, q);
        s = gram_schmidt(g);
      }
    }
    Rat lhs = s.norms[k];
    Rat rhs = (delta - s.mu[k][k - 1] * s.mu[k][k - 1]) * s.norms[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      swap_rows(k, k - 1);
      s = gram_schmidt(g);
      k = std::max(k - 1, 1);
    }
  }
  return {u, g};
}

LLLResult lll_reduce(const GramMatrix& g) {
  if (g.tier != GramTier::Exact)
    throw unsupported_error("LLL requires a tier-Exact Gram matrix");
  return lll_reduce_gram(g.entries);
}

std::vector<IntVector> enumerate_below(const IntMatrix& gram,
                                       const Int& radius_sq) {
  int n = static_cast<int>(gram.size());
  GSO s = gram_schmidt(gram);
  std::vector<IntVector> found;
  IntVector x(n, 0);
  std::vector<Rat> centers(n, Rat(0));
  std::vector<Rat> partial(n + 1, Rat(0));  // accumulated norm above level i

  // Recursive depth-first over levels n-1 .. 0.
  auto rec = [&](auto&& self, int level) -> void {
    if (level < 0) {
      bool nonzero = false;
      for (const auto& v : x)
        if (v != 0) nonzero = true;
      if (nonzero) found.push_back(x);
      return;
    }
    Rat center(0);
    for (int j = level + 1; j < n; ++j)
      center -= s.mu[j][level] * Rat(x[j]);
    Rat budget = Rat(radius_sq) - partial[level + 1];
    if (budget < 0) return;
    double span =
        std::sqrt(to_double(budget) / to_double(s.norms[level]) + 1e-12);
    double c = to_double(center);
    long lo = static_cast<long>(std::floor(c - span)) - 1;
    long hi = static_cast<long>(std::ceil(c + span)) + 1;
    for (long v = lo; v <= hi; ++v) {
      Rat diff = Rat(v) - center;
      Rat contrib = diff * diff * s.norms[level];
      if (contrib > budget) continue;
      x[level] = v;
      partial[level] = partial[level + 1] + contrib;
      self(self, level - 1);
    }
    x[level] = 0;
  };
  rec(rec, n - 1);

  // Canonicalize signs and deduplicate.
  std::set<IntVector> unique;
  for (auto& v : found) {
    int first = -1;
    for (int i = 0; i < n; ++i)
      if (v[i] != 0) {
        first = i;
        break;
      }
    if (first < 0) continue;
    if (v[first] < 0)
      for (auto& c : v) c = -c;
    unique.insert(v);
  }
  return {unique.begin(), unique.end()};
}

MinimalVectorSet shortest_vectors_exact(const IntMatrix& gram) {
  int n = static_cast<int>(gram.size());
  if (n > 12) throw unsupported_error("dimension cap for exact SVP is 12");
  if (!is_positive_definite(gram))
    throw std::domain_error("shortest vectors require a definite Gram");

  auto lll = lll_reduce_gram(gram);
  Int radius = lll.reduced[0][0];
  for (int i = 1; i < n; ++i) radius = std::min(radius, lll.reduced[i][i]);

  auto candidates = enumerate_below(lll.reduced, radius);
  Int best = radius;
  for (const auto& x : candidates)
    best = std::min(best, dot(x, lll.reduced, x));

  std::set<IntVector> vecs;
  for (const auto& x : candidates) {
    if (dot(x, lll.reduced, x) != best) continue;
    IntVector v(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[j] += x[i] * lll.transform[i][j];
    int first = -1;
    for (int i = 0; i < n; ++i)
      if (v[i] != 0) {
        first = i;
        break;
      }
    if (v[first] < 0)
      for (auto& c : v) c = -c;
    vecs.insert(std::move(v));
  }
  MinimalVectorSet out;
  out.min_norm_sq = best;
  out.vectors = {vecs.begin(), vecs.end()};
  out.kissing = 2 * static_cast<int>(out.vectors.size());
  return out;
}

MinimalVectorSet shortest_vectors(const GramMatrix& g) {
  if (g.tier == GramTier::Exact) return shortest_vectors_exact(g.entries);

  // Tier Numeric: scale to integers, enumerate with slack, re-verify.
  int n = g.basis_size;
  const int shift = 48;
  Real scale = pow(Real(2), shift);
  IntMatrix rounded(n, IntVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Real r = round(g.num_entries[i][j] * scale);
      mpfr_get_z(rounded[i][j].backend().data(), r.backend().data(),
                 MPFR_RNDN);
    }
  Real err = Real(g.error_bound);
  Int slack;
  {
    Real s = ceil(2 * n * err * scale) + n;
    mpfr_get_z(slack.backend().data(), s.backend().data(), MPFR_RNDN);
  }
  if (!is_positive_definite(rounded))
    throw precision_error("numeric Gram too coarse: rounded form indefinite");

  auto lll = lll_reduce_gram(rounded);
  Int radius = lll.reduced[0][0];
  for (int i = 1; i < n; ++i) radius = std::min(radius, lll.reduced[i][i]);
  radius += slack;
  auto candidates = enumerate_below(lll.reduced, radius);

  auto true_norm = [&](const IntVector& x) {
    IntVector v(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[j] += x[i] * lll.transform[i][j];
    Real s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Real c;
        mpfr_set_z(c.backend().data(), Int(v[i] * v[j]).backend().data(),
                   MPFR_RNDN);
        s += c * g.num_entries[i][j];
      }
    return std::pair{v, s};
  };

  Real best;
  bool have = false;
  std::vector<std::pair<IntVector, Real>> evaluated;
  Real coeff_bound = 0;
  for (const auto& x : candidates) {
    auto [v, norm] = true_norm(x);
    Real cb = 0;
    for (const auto& c : v) {
      Real rc;
      mpfr_set_z(rc.backend().data(), Int(c * c).backend().data(), MPFR_RNDN);
      cb += rc;
    }
    if (cb > coeff_bound) coeff_bound = cb;
    evaluated.emplace_back(v, norm);
    if (!have || norm < best) {
      best = norm;
      have = true;
    }
  }
  if (!have) throw precision_error("numeric enumeration found no vectors");
  // A candidate is minimal when its true norm is within the propagated
  // uncertainty band of the smallest one; anything in the ambiguous ring
  // just above the band means the bound is too coarse to decide.
  Real band = err * coeff_bound;
  for (const auto& [v, norm] : evaluated)
    if (norm > best + band && norm <= best + 3 * band)
      throw precision_error("norm values not separated by the error bound");
  MinimalVectorSet out;
  out.numeric = true;
  out.min_norm_num = best;
  std::set<IntVector> vecs;
  for (auto& [v, norm] : evaluated) {
    if (norm <= best + band) {
      IntVector c = v;
      int first = -1;
      for (int i = 0; i < n; ++i)
        if (c[i] != 0) {
          first = i;
          break;
        }
      if (first < 0) continue;
      if (c[first] < 0)
        for (auto& e : c) e = -e;
      vecs.insert(std::move(c));
    }
  }
  out.vectors = {vecs.begin(), vecs.end()};
  out.kissing = 2 * static_cast<int>(out.vectors.size());
  Real rounded_best = round(best);
  if (abs(best - rounded_best) < band + Real("1e-9")) {
    mpfr_get_z(out.min_norm_sq.backend().data(), rounded_best.backend().data(),
               MPFR_RNDN);
  }
  return out;
}

}  // namespace conjlat
