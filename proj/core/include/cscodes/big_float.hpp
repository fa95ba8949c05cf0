#pragma once

// Correctly rounded conversion of exact field elements to floating point,
// through MPFR at a caller-chosen working precision.

#include <complex>
#include <string>

#include <gmp.h>
#include <mpfr.h>

#include "cscodes/quad_complex.hpp"
#include "cscodes/rational.hpp"

namespace cscodes {

class BigFloat {
 public:
  explicit BigFloat(int precision_bits);
  BigFloat(const Rational& value, int precision_bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(BigFloat other) noexcept;
  ~BigFloat();

  int precision() const { return static_cast<int>(mpfr_get_prec(value_)); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with the given number of significant digits.
  std::string to_string(int significant_digits) const;

  BigFloat sqrt() const;
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr raw() { return value_; }

  friend void swap(BigFloat& a, BigFloat& b) noexcept { mpfr_swap(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

struct BigComplex {
  BigFloat re;
  BigFloat im;
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

/// Componentwise relative error at most 2^(1 - precision_bits); precision_bits >= 53.
BigComplex qc_to_float(const QuadComplex& x, int precision_bits);

inline constexpr int kDefaultAssemblyPrecisionBits = 128;

/// Double rounding of qc_to_float(x, kDefaultAssemblyPrecisionBits).
std::complex<double> to_complex_double(const QuadComplex& x);

/// Decimal rendering of an exact rational with the given significant digits.
std::string decimal_string(const Rational& x, int significant_digits);

}  // namespace cscodes
