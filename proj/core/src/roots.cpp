#include "conjlat/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace conjlat {

namespace {

Real to_real(const Int& v) {
  Real r;
  mpfr_set_z(r.backend().data(), v.backend().data(), MPFR_RNDN);
  return r;
}

std::vector<std::complex<double>> double_warm_start(const IntPolynomial& f) {
  int n = f.degree();
  std::vector<std::complex<double>> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = to_double(f.coeff(k));
  auto eval = [&](std::complex<double> z, std::complex<double>& d) {
    std::complex<double> v = c[n];
    d = 0.0;
    for (int k = n - 1; k >= 0; --k) {
      d = d * z + v;
      v = v * z + c[k];
    }
    return v;
  };
  double radius = 0;
  for (int k = 0; k < n; ++k)
    radius = std::max(radius, std::abs(c[k] / c[n]));
  radius = 1.0 + radius;
  std::vector<std::complex<double>> z(n);
  for (int i = 0; i < n; ++i) {
    double angle = 2.0 * M_PI * i / n + 0.4;
    z[i] = std::polar(radius * (0.5 + 0.5 * (i + 1.0) / n), angle);
  }
  for (int iter = 0; iter < 400; ++iter) {
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> d;
      std::complex<double> v = eval(z[i], d);
      std::complex<double> newton =
          (d == std::complex<double>(0.0)) ? v : v / d;
      std::complex<double> sum = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      std::complex<double> denom = 1.0 - newton * sum;
      std::complex<double> w = (denom == std::complex<double>(0.0))
                                   ? newton
                                   : newton / denom;
      z[i] -= w;
      worst = std::max(worst, std::abs(w));
    }
    if (worst < 1e-13) break;
  }
  return z;
}

struct EvalPair {
  Complex value;
  Complex deriv;
};

EvalPair eval_with_derivative(const std::vector<Real>& c, const Complex& z) {
  int n = static_cast<int>(c.size()) - 1;
  Complex v{c[n], Real(0)};
  Complex d;
  for (int k = n - 1; k >= 0; --k) {
    d = d * z + v;
    v = v * z;
    v.re += c[k];
  }
  return {v, d};
}

}  // namespace

RootSet find_roots(const IntPolynomial& f, unsigned precision_bits) {
  int n = f.degree();
  if (n < 1) throw std::domain_error("find_roots requires degree >= 1");
  if (precision_bits < 64)
    throw std::domain_error("precision must be at least 64 bits");
  if (n >= 2 && discriminant(f) == 0)
    throw std::domain_error("repeated root: polynomial is not squarefree");

  unsigned working_bits = precision_bits + 64;
  precision_guard guard(working_bits);

  std::vector<Real> coeffs(n + 1);
  for (int k = 0; k <= n; ++k) coeffs[k] = to_real(f.coeff(k));

  auto warm = double_warm_start(f);
  std::vector<Complex> z(n);
  for (int i = 0; i < n; ++i)
    z[i] = Complex(Real(warm[i].real()), Real(warm[i].imag()));

  Real target = pow(Real(2), -static_cast<int>(precision_bits - 4));
  bool converged = false;
  for (int iter = 0; iter < 200 && !converged; ++iter) {
    Real worst = 0;
    for (int i = 0; i < n; ++i) {
      auto [v, d] = eval_with_derivative(coeffs, z[i]);
      Complex newton = (d.norm() == 0) ? v : v / d;
      Complex sum;
      for (int j = 0; j < n; ++j)
        if (j != i) {
          Complex diff = z[i] - z[j];
          sum += Complex(Real(1), Real(0)) / diff;
        }
      Complex denom = Complex(Real(1), Real(0)) - newton * sum;
      Complex w = (denom.norm() == 0) ? newton : newton / denom;
      z[i] -= w;
      Real scale = z[i].abs();
      if (scale < 1) scale = 1;
      Real rel = w.abs() / scale;
      if (rel > worst) worst = rel;
    }
    if (worst < target) converged = true;
  }
  if (!converged)
    throw precision_error("root iteration did not converge at " +
                          std::to_string(precision_bits) + " bits");

  RootSet rs;
  rs.precision_bits = precision_bits;
  rs.roots = z;
  rs.radii.resize(n);
  rs.is_real.assign(n, false);

  Real cap = pow(Real(2), -static_cast<int>(precision_bits / 2));
  for (int i = 0; i < n; ++i) {
    auto [v, d] = eval_with_derivative(coeffs, rs.roots[i]);
    if (d.norm() == 0)
      throw precision_error("derivative vanished at an approximate root");
    rs.radii[i] = Real(n) * v.abs() / d.abs();
    if (rs.radii[i] >= cap)
      throw precision_error("root radius not certified at " +
                            std::to_string(precision_bits) + " bits");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((rs.roots[i] - rs.roots[j]).abs() <= rs.radii[i] + rs.radii[j])
        throw precision_error("root error disks overlap");

  // Real tagging: a disk meeting the real axis must contain the root it
  // shares with its conjugate mirror, which forces realness.
  for (int i = 0; i < n; ++i) {
    if (abs(rs.roots[i].im) <= rs.radii[i]) {
      rs.is_real[i] = true;
      rs.roots[i].im = 0;
      ++rs.real_count;
    }
  }
  // Conjugate pairing of the remaining roots.
  std::vector<int> partner(n, -1);
  for (int i = 0; i < n; ++i) {
    if (rs.is_real[i] || partner[i] >= 0) continue;
    for (int j = i + 1; j < n; ++j) {
      if (rs.is_real[j] || partner[j] >= 0) continue;
      if ((rs.roots[i].conj() - rs.roots[j]).abs() <=
          rs.radii[i] + rs.radii[j]) {
        partner[i] = j;
        partner[j] = i;
        rs.roots[j] = rs.roots[i].conj();
        break;
      }
    }
    if (partner[i] < 0)
      throw precision_error("complex roots do not pair into conjugates");
    ++rs.complex_pair_count;
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) -> bool {
    if (rs.is_real[a] != rs.is_real[b]) return rs.is_real[a];
    if (rs.roots[a].re != rs.roots[b].re)
      return bool(rs.roots[a].re > rs.roots[b].re);
    return bool(rs.roots[a].im > rs.roots[b].im);
  });
  RootSet sorted = rs;
  for (int i = 0; i < n; ++i) {
    sorted.roots[i] = rs.roots[order[i]];
    sorted.radii[i] = rs.radii[order[i]];
    sorted.is_real[i] = rs.is_real[order[i]];
  }
  return sorted;
}

RootSet find_roots_auto(const IntPolynomial& f, unsigned precision_bits) {
  unsigned bits = precision_bits;
  while (true) {
    try {
      return find_roots(f, bits);
    } catch (const precision_error&) {
      if (bits >= kMaxPrecisionBits) throw;
      bits *= 2;
    }
  }
}

bool classify_pisot(const IntPolynomial& f, const RootSet& rs) {
  if (!f.is_monic())
    throw unsupported_error("Pisot classification requires a monic polynomial");
  precision_guard guard(rs.precision_bits + 64);
  int n = static_cast<int>(rs.roots.size());
  int dominant = -1;
  for (int i = 0; i < n; ++i) {
    Real lo = rs.roots[i].abs() - rs.radii[i];
    Real hi = rs.roots[i].abs() + rs.radii[i];
    if (lo <= 1 && hi >= 1)
      throw precision_error("root modulus not separated from the unit circle");
    if (hi < 1) continue;
    // Modulus certified > 1. The dominant root must be real and unique;
    // its sign is not constrained (f(-x) of a Pisot polynomial counts too,
    // matching how the generated families are used downstream).
    if (!rs.is_real[i]) return false;
    if (dominant >= 0) return false;
    dominant = i;
  }
  return dominant >= 0;
}

tri classify_pisot_auto(const IntPolynomial& f, unsigned precision_bits) {
  unsigned bits = precision_bits;
  while (true) {
    try {
      RootSet rs = find_roots(f, bits);
      return classify_pisot(f, rs) ? tri::yes : tri::no;
    } catch (const precision_error&) {
      if (bits >= kMaxPrecisionBits) return tri::undetermined;
      bits *= 2;
    }
  }
}

}  // namespace conjlat
