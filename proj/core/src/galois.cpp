#include "conjlat/galois.hpp"

#include <algorithm>
#include <numeric>

#include "modp.hpp"

namespace conjlat {

const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::Cyclic: return "Cyclic";
    case GroupKind::Symmetric: return "Symmetric";
    case GroupKind::Alternating: return "Alternating";
    default: return "Unknown";
  }
}

namespace {

bool is_prime_long(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

bool is_prime_degree(int n) {
  return is_prime_long(n);
}

// Does some power of an element with this cycle type yield a transposition
// (single 2, other parts of odd lcm) or a 3-cycle (single 3, other parts
// with lcm coprime to 3)?
bool yields_transposition(const std::vector<int>& pattern) {
  int twos = 0;
  long rest_lcm = 1;
  for (int part : pattern) {
    if (part == 2) {
      ++twos;
    } else {
      rest_lcm = std::lcm(rest_lcm, static_cast<long>(part));
    }
  }
  return twos == 1 && rest_lcm % 2 == 1;
}

bool yields_three_cycle(const std::vector<int>& pattern) {
  int threes = 0;
  long rest_lcm = 1;
  for (int part : pattern) {
    if (part == 3) {
      ++threes;
    } else {
      rest_lcm = std::lcm(rest_lcm, static_cast<long>(part));
    }
  }
  return threes == 1 && rest_lcm % 3 != 0;
}

}  // namespace

std::vector<long> sampling_primes(const IntPolynomial& f, int count) {
  Int bad = discriminant(f) * f.leading();
  std::vector<long> primes;
  for (long p = 2; static_cast<int>(primes.size()) < count && p < 100000; ++p) {
    if (!is_prime_long(p)) continue;
    if (bad % p == 0) continue;
    primes.push_back(p);
  }
  return primes;
}

std::vector<CycleTypeSample> cycle_type_sample(
    const IntPolynomial& f, const std::vector<long>& primes) {
  std::vector<CycleTypeSample> out;
  for (long p : primes) {
    auto pattern = modp::degree_pattern(f, p);
    if (!pattern) continue;  // p divides disc or lead: skipped
    out.push_back(CycleTypeSample{p, std::move(*pattern)});
  }
  return out;
}

GaloisClass classify_galois(const IntPolynomial& f,
                            const std::vector<CycleTypeSample>& samples,
                            const RootSet& roots) {
  int n = f.degree();
  if (is_irreducible(f) == tri::no)
    throw std::domain_error("classify_galois requires an irreducible input");

  GaloisClass g;
  if (n == 2) {
    g.kind = GroupKind::Cyclic;
    g.cycle = std::vector<int>{1, 0};
    g.splitting_degree = 2;
    return g;
  }
  Int disc = discriminant(f);
  bool square_disc = is_perfect_square(disc);
  if (n == 3) {
    if (square_disc) {
      g.kind = GroupKind::Cyclic;
      g.cycle = std::vector<int>{1, 2, 0};
      g.splitting_degree = 3;
    } else {
      g.kind = GroupKind::Symmetric;
      g.splitting_degree = 6;
    }
    return g;
  }
  if (!is_prime_degree(n)) return g;  // Unknown for composite degrees

  bool has_n_cycle = false, has_transposition = false, has_three_cycle = false;
  bool all_cyclic_shaped = !samples.empty();
  for (const auto& s : samples) {
    if (static_cast<int>(s.degree_pattern.size()) == 1) has_n_cycle = true;
    if (yields_transposition(s.degree_pattern)) has_transposition = true;
    if (yields_three_cycle(s.degree_pattern)) has_three_cycle = true;
    bool all_ones =
        std::all_of(s.degree_pattern.begin(), s.degree_pattern.end(),
                    [](int d) { return d == 1; });
    if (!(s.degree_pattern.size() == 1 || all_ones)) all_cyclic_shaped = false;
  }

  if (square_disc) {
    if (all_cyclic_shaped) {
      try {
        g.cycle = cyclic_generator(f, roots);
        g.kind = GroupKind::Cyclic;
        g.splitting_degree = n;
        return g;
      } catch (const inconsistency_error&) {
        // fall through
      }
    }
    // Prime degree makes the group primitive; a 3-cycle then forces A_n.
    if (has_three_cycle) {
      g.kind = GroupKind::Alternating;
      g.splitting_degree = factorial(n) / 2;
    }
    return g;
  }
  // Odd permutation present; transposition + primitivity forces S_n.
  if (has_transposition || (has_n_cycle && has_three_cycle)) {
    g.kind = GroupKind::Symmetric;
    g.splitting_degree = factorial(n);
  }
  return g;
}

namespace {

Real to_real(const Int& v) {
  Real r;
  mpfr_set_z(r.backend().data(), v.backend().data(), MPFR_RNDN);
  return r;
}

// Best rational approximation with denominator at most `qmax`, by
// continued fractions.
Rat rational_reconstruct(const Real& x, const Int& qmax) {
  Real v = x;
  Int p0 = 1, q0 = 0, p1, q1;
  {
    Real fl = floor(v);
    Int a;
    mpfr_get_z(a.backend().data(), fl.backend().data(), MPFR_RNDN);
    p1 = a;
    q1 = 1;
    v -= fl;
  }
  for (int iter = 0; iter < 256; ++iter) {
    if (v == 0) break;
    v = 1 / v;
    Real fl = floor(v);
    Int a;
    mpfr_get_z(a.backend().data(), fl.backend().data(), MPFR_RNDN);
    Int p2 = a * p1 + p0;
    Int q2 = a * q1 + q0;
    if (q2 > qmax) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    v -= fl;
  }
  return Rat(p1, q1);
}

Real eval_rat_poly(const std::vector<Rat>& coeffs, const Real& x) {
  Real r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    Real c = to_real(numerator(*it)) / to_real(denominator(*it));
    r = r * x + c;
  }
  return r;
}

}  // namespace

std::vector<int> cyclic_generator(const IntPolynomial& f, const RootSet& rs) {
  int n = f.degree();
  if (!is_prime_degree(n) || n < 3)
    throw std::domain_error("cyclic_generator requires prime degree >= 3");
  Int disc = discriminant(f);
  if (!is_perfect_square(disc))
    throw inconsistency_error("discriminant is not a square: group not cyclic");
  if (n == 3) return {1, 2, 0};

  // Odd prime cyclic groups force totally real roots.
  for (bool real_root : rs.is_real)
    if (!real_root)
      throw inconsistency_error("complex roots: group cannot be cyclic");

  unsigned bits = rs.precision_bits;
  precision_guard guard(bits + 64);
  std::vector<Real> alpha(n);
  for (int i = 0; i < n; ++i) alpha[i] = rs.roots[i].re;

  // Barycentric weights for Lagrange interpolation through the roots.
  std::vector<Real> weight(n, Real(1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i) weight[i] /= alpha[i] - alpha[j];

  Real accept_tol = pow(Real(2), -static_cast<int>(bits / 4));
  Int qmax = abs(disc);

  // Doubled-precision roots for the re-verification pass.
  RootSet hi = find_roots(f, std::min(2 * bits, kMaxPrecisionBits));

  std::vector<int> tail(n - 2);
  std::iota(tail.begin(), tail.end(), 2);
  std::sort(tail.begin(), tail.end());
  do {
    std::vector<int> orbit{0, 1};
    orbit.insert(orbit.end(), tail.begin(), tail.end());
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) perm[orbit[k]] = orbit[(k + 1) % n];

    // Coefficients of the interpolant g with g(alpha_i) = alpha_{perm(i)}.
    std::vector<Real> coeffs(n, Real(0));
    for (int i = 0; i < n; ++i) {
      // expand weight[i] * alpha_{perm(i)} * prod_{j != i} (x - alpha_j)
      std::vector<Real> asc{Real(1)};
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        std::vector<Real> next(asc.size() + 1, Real(0));
        for (size_t k = 0; k < asc.size(); ++k) {
          next[k + 1] += asc[k];
          next[k] -= alpha[j] * asc[k];
        }
        asc = std::move(next);
      }
      Real scale = weight[i] * alpha[perm[i]];
      for (size_t k = 0; k < asc.size(); ++k) coeffs[k] += scale * asc[k];
    }

    std::vector<Rat> rat_coeffs(n);
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      Rat r = rational_reconstruct(coeffs[k], qmax);
      Real approx = to_real(numerator(r)) / to_real(denominator(r));
      if (abs(coeffs[k] - approx) > accept_tol) ok = false;
      rat_coeffs[k] = r;
    }
    if (!ok) continue;

    // Re-verify g(alpha_i) = alpha_{perm(i)} at doubled precision.
    Real verify_tol = pow(Real(2), -static_cast<int>(bits / 2));
    bool verified = true;
    for (int i = 0; i < n && verified; ++i) {
      Real lhs = eval_rat_poly(rat_coeffs, hi.roots[i].re);
      if (abs(lhs - hi.roots[perm[i]].re) > verify_tol) verified = false;
    }
    if (verified) return perm;
  } while (std::next_permutation(tail.begin(), tail.end()));

  throw inconsistency_error("no interpolating n-cycle verified: not cyclic");
}

}  // namespace conjlat
