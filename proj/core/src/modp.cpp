#include "modp.hpp"

#include <algorithm>

namespace conjlat::modp {

namespace {
long mulmod(long a, long b, long p) {
  return static_cast<long>(static_cast<__int128>(a) * b % p);
}

long invmod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return t < 0 ? t + p : t;
}

Poly make_monic(Poly a, long p) {
  if (a.empty()) return a;
  long inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}
}  // namespace

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly reduce(const IntPolynomial& f, long p) {
  Poly r;
  r.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    Int m = c % p;
    if (m < 0) m += p;
    r.push_back(m.convert_to<long>());
  }
  return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + static_cast<__int128>(a[i]) * b[j]) % p;
  }
  return trim(std::move(r));
}

Poly mod(Poly a, const Poly& m, long p) {
  long lead_inv = invmod(m.back(), p);
  while (a.size() >= m.size()) {
    long f = mulmod(a.back(), lead_inv, p);
    size_t shift = a.size() - m.size();
    if (f != 0)
      for (size_t i = 0; i < m.size(); ++i) {
        a[shift + i] = (a[shift + i] - mulmod(f, m[i], p)) % p;
        if (a[shift + i] < 0) a[shift + i] += p;
      }
    a.pop_back();
    a = trim(std::move(a));
    if (a.size() < m.size()) break;
  }
  return a;
}

Poly gcd(Poly a, Poly b, long p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

Poly derivative(const Poly& a, long p) {
  Poly r;
  for (size_t i = 1; i < a.size(); ++i)
    r.push_back(static_cast<long>(static_cast<__int128>(a[i]) * i % p));
  return trim(std::move(r));
}

Poly powmod(Poly base, long exp, const Poly& m, long p) {
  Poly result{1};
  base = mod(std::move(base), m, p);
  while (exp > 0) {
    if (exp & 1) result = mod(mul(result, base, p), m, p);
    base = mod(mul(base, base, p), m, p);
    exp >>= 1;
  }
  return result;
}

Poly powmod_x(long e_base, const Poly& m, long p) {
  return powmod(Poly{0, 1}, e_base, m, p);
}

std::optional<std::vector<int>> degree_pattern(const IntPolynomial& f, long p) {
  Poly fp = reduce(f, p);
  if (static_cast<int>(fp.size()) - 1 != f.degree()) return std::nullopt;
  Poly d = derivative(fp, p);
  if (d.empty()) return std::nullopt;
  if (gcd(fp, d, p).size() > 1) return std::nullopt;  // not squarefree mod p

  std::vector<int> pattern;
  Poly work = make_monic(fp, p);
  Poly frob{0, 1};  // x^(p^k) mod work, updated per round
  int k = 0;
  while (static_cast<int>(work.size()) - 1 > 0) {
    ++k;
    if (2 * k > static_cast<int>(work.size()) - 1) {
      pattern.push_back(static_cast<int>(work.size()) - 1);
      break;
    }
    frob = powmod(std::move(frob), p, work, p);
    Poly diff = frob;
    // frob - x
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] - 1 + p) % p;
    diff = trim(std::move(diff));
    Poly g = gcd(work, diff, p);
    int gdeg = static_cast<int>(g.size()) - 1;
    if (gdeg > 0) {
      for (int t = 0; t < gdeg / k; ++t) pattern.push_back(k);
      // work /= g via long division (exact)
      Poly quotient;
      Poly rem = work;
      long lead_inv = invmod(g.back(), p);
      quotient.resize(rem.size() - g.size() + 1, 0);
      for (int i = static_cast<int>(quotient.size()) - 1; i >= 0; --i) {
        long c = i + static_cast<int>(g.size()) - 1 <
                         static_cast<int>(rem.size())
                     ? rem[i + g.size() - 1]
                     : 0;
        c = mulmod(c, lead_inv, p);
        quotient[i] = c;
        if (c != 0)
          for (size_t j = 0; j < g.size(); ++j) {
            rem[i + j] = (rem[i + j] - mulmod(c, g[j], p)) % p;
            if (rem[i + j] < 0) rem[i + j] += p;
          }
      }
      work = trim(std::move(quotient));
      if (work.empty()) break;
      work = make_monic(std::move(work), p);
      frob = mod(std::move(frob), work, p);
    }
  }
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

}  // namespace conjlat::modp
