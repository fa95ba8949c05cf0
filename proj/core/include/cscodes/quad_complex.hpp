#pragma once

// Exact elements of an imaginary quadratic field Q(i*sqrt(D)).
//
// A value is re + im_coeff * sqrt(D) * i with rational re, im_coeff and a
// square-free positive integer D. Purely rational values carry D = 0 and are
// compatible with every field; two values with different nonzero radicands
// cannot be combined.

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cscodes/rational.hpp"

namespace cscodes {

class RadicandMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class QuadComplex {
 public:
  QuadComplex() = default;
  QuadComplex(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  QuadComplex(long re) : re_(re) {}                  // NOLINT(google-explicit-constructor)
  /// re + im_coeff * sqrt(radicand) * i. The radicand may be any nonnegative
  /// rational; it is normalized to a square-free integer and the rational
  /// square factor is absorbed into im_coeff.
  QuadComplex(Rational re, Rational im_coeff, const Rational& radicand);

  /// Parses expressions such as "31/666 + 1/666*sqrt(4699)*i", "i*sqrt(3)/3",
  /// "(4-i)/5" or "sqrt(-3)". Any input that would need a real radical throws
  /// std::invalid_argument.
  static QuadComplex parse(std::string_view text);
  static QuadComplex i() { return QuadComplex(0, 1, 1); }

  const Rational& real() const { return re_; }
  const Rational& imag_coeff() const { return im_; }
  /// Square-free radicand, 0 for rational values.
  const mpz_class& radicand() const { return radicand_; }
  bool is_real() const { return im_.is_zero(); }

  /// |x|^2, always rational.
  Rational norm() const;
  QuadComplex conj() const;
  QuadComplex pow(int exponent) const;

  QuadComplex& operator+=(const QuadComplex& rhs);
  QuadComplex& operator-=(const QuadComplex& rhs);
  QuadComplex& operator*=(const QuadComplex& rhs);
  QuadComplex& operator/=(const QuadComplex& rhs);
  friend QuadComplex operator+(QuadComplex a, const QuadComplex& b) { return a += b; }
  friend QuadComplex operator-(QuadComplex a, const QuadComplex& b) { return a -= b; }
  friend QuadComplex operator*(QuadComplex a, const QuadComplex& b) { return a *= b; }
  friend QuadComplex operator/(QuadComplex a, const QuadComplex& b) { return a /= b; }
  QuadComplex operator-() const;

  friend bool operator==(const QuadComplex& a, const QuadComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_ && a.radicand_ == b.radicand_;
  }
  /// Total order: real part, then imaginary coefficient, then radicand.
  friend std::strong_ordering operator<=>(const QuadComplex& a, const QuadComplex& b);

  /// Canonical text form, e.g. "31/666 + 1/666*sqrt(4699)*i" or "-16/111".
  std::string to_string() const;

 private:
  static mpz_class common_radicand(const QuadComplex& a, const QuadComplex& b);
  void canonicalize();

  Rational re_;
  Rational im_;
  mpz_class radicand_{0};
};

std::ostream& operator<<(std::ostream& os, const QuadComplex& x);

inline QuadComplex qc_mul(const QuadComplex& x, const QuadComplex& y) { return x * y; }
inline QuadComplex qc_conj(const QuadComplex& x) { return x.conj(); }
inline QuadComplex conj(const QuadComplex& x) { return x.conj(); }

}  // namespace cscodes
