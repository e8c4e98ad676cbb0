#include "conjlat/numeric.hpp"

namespace conjlat {

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

Int isqrt(const Int& v, bool& exact) {
  if (v < 0) {
    exact = false;
    return 0;
  }
  Int r = sqrt(v);
  exact = (r * r == v);
  return r;
}

bool is_perfect_square(const Int& v) {
  bool exact = false;
  isqrt(v, exact);
  return exact;
}

Int pow_int(const Int& base, unsigned exp) {
  Int r = 1, b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

double to_double(const Int& v) { return v.convert_to<double>(); }
double to_double(const Rat& v) { return v.convert_to<double>(); }
double to_double(const Real& v) { return v.convert_to<double>(); }

}  // namespace conjlat
