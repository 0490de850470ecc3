#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>

namespace symdom {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& x) { return x.convert_to<double>(); }
inline long double to_long_double(const Rat& x) { return x.convert_to<long double>(); }

// Renders "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& x);

// Accepts "p/q", plain integers, and finite decimals ("4.5" -> 9/2).
std::optional<Rat> parse_rational(const std::string& s);

// Rising factorial x(x+1)...(x+m-1); empty product for m <= 0.
Rat rising(const Rat& x, int m);

bool is_integer(const Rat& x);
bool is_nonneg_integer(const Rat& x);

// Gaussian rational a + bi, the coefficient field of the exact polynomial
// algebra on matrix Jordan triples.
struct GRat {
  Rat re, im;

  GRat() = default;
  GRat(Rat r) : re(std::move(r)) {}  // NOLINT: implicit by design
  GRat(long r) : re(r) {}            // NOLINT
  GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GRat conj() const { return GRat(re, -im); }
  Rat norm2() const { return re * re + im * im; }

  GRat& operator+=(const GRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GRat& operator-=(const GRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GRat operator+(GRat a, const GRat& b) { return a += b; }
  friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
  friend GRat operator-(const GRat& a) { return GRat(-a.re, -a.im); }
  friend GRat operator*(const GRat& a, const GRat& b) {
    return GRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  GRat& operator*=(const GRat& o) { return *this = *this * o; }
  friend GRat operator/(const GRat& a, const GRat& b);
  friend bool operator==(const GRat& a, const GRat& b) = default;
};

// Renders "a+bi" with rational a, b; pure real/imaginary parts collapse.
std::string grat_to_string(const GRat& z);

}  // namespace symdom
