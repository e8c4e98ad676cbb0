#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>
#include <string>

namespace conjlat {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

// Error taxonomy shared by all modules.
struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct inconsistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class tri { no, yes, undetermined };

inline const char* to_string(tri t) {
  switch (t) {
    case tri::no: return "false";
    case tri::yes: return "true";
    default: return "undetermined";
  }
}

// Sets the working mpfr precision (in bits), restoring the previous value
// on scope exit.
class precision_guard {
 public:
  explicit precision_guard(unsigned bits)
      : saved_(Real::default_precision()) {
    Real::default_precision(digits10_for_bits(bits));
  }
  ~precision_guard() { Real::default_precision(saved_); }
  precision_guard(const precision_guard&) = delete;
  precision_guard& operator=(const precision_guard&) = delete;

  static unsigned digits10_for_bits(unsigned bits) {
    return static_cast<unsigned>(bits * 0.3010299957) + 4;
  }

 private:
  unsigned saved_;
};

// Complex number over Real; kept minimal, only what root finding and the
// embedding products need.
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const Real& r) : re(r), im(0) {}

  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Complex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Complex operator/(const Complex& o) const {
    Real d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  Complex operator*(const Real& s) const { return {re * s, im * s}; }
  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  Complex conj() const { return {re, -im}; }
  Real norm() const { return re * re + im * im; }
  Real abs() const { return sqrt(norm()); }
};

Int factorial(unsigned n);

// Integer square root; exact flag reports whether the input is a perfect
// square. Negative input -> exact=false, root 0.
Int isqrt(const Int& v, bool& exact);
bool is_perfect_square(const Int& v);

Int pow_int(const Int& base, unsigned exp);

double to_double(const Int& v);
double to_double(const Rat& v);
double to_double(const Real& v);

}  // namespace conjlat
