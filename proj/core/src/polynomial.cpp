#include "conjlat/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "conjlat/matrixops.hpp"
#include "modp.hpp"

namespace conjlat {

const Int IntPolynomial::zero_ = 0;

IntPolynomial::IntPolynomial(std::vector<Int> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero_;
  return coeffs_[k];
}

Int IntPolynomial::eval(const Int& x) const {
  Int r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

namespace {
Real to_real(const Int& v) {
  Real r;
  mpfr_set_z(r.backend().data(), v.backend().data(), MPFR_RNDN);
  return r;
}
}  // namespace

Complex IntPolynomial::eval(const Complex& z) const {
  Complex r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r = r * z;
    r.re += to_real(*it);
  }
  return r;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<Int> d;
  for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Int(i));
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty polynomial");

  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unterminated list");
    std::vector<Int> coeffs;
    std::string body = s.substr(1, s.size() - 2);
    size_t pos = 0;
    while (pos <= body.size()) {
      size_t comma = body.find(',', pos);
      std::string item = body.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (item.empty()) throw std::invalid_argument("empty coefficient");
      coeffs.emplace_back(item);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return IntPolynomial(std::move(coeffs));
  }

  std::vector<Int> coeffs;
  auto add_term = [&](const Int& c, int power) {
    if (power >= static_cast<int>(coeffs.size())) coeffs.resize(power + 1, 0);
    coeffs[power] += c;
  };

  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
    }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      digits.push_back(s[i++]);
    if (i < s.size() && s[i] == '*') ++i;
    Int c = digits.empty() ? Int(1) : Int(digits);
    int power = 0;
    if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string pd;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          pd.push_back(s[i++]);
        if (pd.empty()) throw std::invalid_argument("missing exponent");
        power = std::stoi(pd);
      }
    } else if (digits.empty()) {
      throw std::invalid_argument("unexpected character in polynomial: " +
                                  s.substr(i, 1));
    }
    add_term(sign * c, power);
  }
  return IntPolynomial(std::move(coeffs));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    bool first = out.empty();
    Int a = abs(c);
    if (c < 0)
      out += '-';
    else if (!first)
      out += '+';
    if (k == 0 || a != 1) out += a.str();
    if (k >= 1) {
      out += 'x';
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

std::string IntPolynomial::coeff_list_string() const {
  std::string out = "[";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].str();
  }
  return out + "]";
}

Int resultant(const IntPolynomial& f, const IntPolynomial& g) {
  int m = f.degree(), k = g.degree();
  if (m < 0 || k < 0) return 0;
  int n = m + k;
  if (n == 0) return 1;
  IntMatrix syl(n, IntVector(n, 0));
  for (int row = 0; row < k; ++row)
    for (int j = 0; j <= m; ++j) syl[row][row + j] = f.coeff(m - j);
  for (int row = 0; row < m; ++row)
    for (int j = 0; j <= k; ++j) syl[k + row][row + j] = g.coeff(k - j);
  return bareiss_determinant(std::move(syl));
}

Int discriminant(const IntPolynomial& f) {
  int n = f.degree();
  if (n < 2) throw std::domain_error("discriminant requires degree >= 2");
  Int res = resultant(f, f.derivative());
  Int sign = ((Int(n) * (n - 1) / 2) % 2 == 0) ? 1 : -1;
  return sign * res / f.leading();
}

SymmetricInvariants invariants(const IntPolynomial& f) {
  if (!f.is_monic())
    throw unsupported_error("invariants require a monic polynomial");
  int n = f.degree();
  Int e1 = -f.coeff(n - 1);
  Int e2 = f.coeff(n - 2);
  return SymmetricInvariants{e1 * e1 - 2 * e2, e2, e1};
}

bool perron_criterion(const IntPolynomial& f) {
  if (!f.is_monic())
    throw unsupported_error("Perron criterion requires a monic polynomial");
  int n = f.degree();
  if (n < 2) throw std::domain_error("Perron criterion requires degree >= 2");
  Int tail = 1;
  for (int k = 0; k <= n - 2; ++k) tail += abs(f.coeff(k));
  return abs(f.coeff(n - 1)) > tail;
}

namespace {

std::vector<Int> divisors_of(Int v) {
  v = abs(v);
  std::vector<Int> primes;
  for (Int p = 2; p * p <= v && p < 1000000; ++p)
    while (v % p == 0) {
      primes.push_back(p);
      v /= p;
    }
  if (v > 1) primes.push_back(v);  // large leftover treated as prime
  std::set<Int> divs{1};
  for (const auto& p : primes) {
    std::set<Int> next = divs;
    for (const auto& d : divs) next.insert(d * p);
    divs = std::move(next);
  }
  return {divs.begin(), divs.end()};
}

bool has_rational_root(const IntPolynomial& f) {
  int n = f.degree();
  if (f.coeff(0) == 0) return true;  // root 0
  auto ps = divisors_of(f.coeff(0));
  auto qs = divisors_of(f.leading());
  for (const auto& q : qs)
    for (const auto& p : ps)
      for (int sign : {1, -1}) {
        // q^n * f(sign*p/q)
        Int acc = 0;
        Int pk = 1;
        std::vector<Int> qpow(n + 1, 1);
        for (int k = 1; k <= n; ++k) qpow[k] = qpow[k - 1] * q;
        for (int k = 0; k <= n; ++k) {
          acc += f.coeff(k) * pk * qpow[n - k];
          pk *= sign * p;
        }
        if (acc == 0) return true;
      }
  return false;
}

}  // namespace

tri is_irreducible(const IntPolynomial& f) {
  int n = f.degree();
  if (n < 1) return tri::no;
  if (n == 1) return tri::yes;
  if (n == 2) return is_perfect_square(discriminant(f)) ? tri::no : tri::yes;
  if (n == 3) return has_rational_root(f) ? tri::no : tri::yes;

  if (has_rational_root(f)) return tri::no;
  if (f.is_monic() && perron_criterion(f)) return tri::yes;

  // Mod-p degree-pattern exclusion: any proper factorization over Q would
  // induce a matching split of every sampled pattern.
  static const long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  std::set<int> feasible;  // degrees of a possible proper factor
  for (int d = 1; d < n; ++d) feasible.insert(d);
  int sampled = 0;
  for (long p : primes) {
    auto pattern = modp::degree_pattern(f, p);
    if (!pattern) continue;
    ++sampled;
    if (static_cast<int>(pattern->size()) == 1) return tri::yes;
    // subset sums of the pattern
    std::set<int> sums{0};
    for (int part : *pattern) {
      std::set<int> next = sums;
      for (int s : sums) next.insert(s + part);
      sums = std::move(next);
    }
    std::set<int> keep;
    for (int d : feasible)
      if (sums.count(d)) keep.insert(d);
    feasible = std::move(keep);
    if (feasible.empty()) return tri::yes;
    if (sampled >= 12) break;
  }
  return tri::undetermined;
}

}  // namespace conjlat
