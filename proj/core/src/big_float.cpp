#include "cscodes/big_float.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cscodes {

BigFloat::BigFloat(int precision_bits) {
  if (precision_bits < MPFR_PREC_MIN) throw std::invalid_argument("precision too small");
  mpfr_init2(value_, precision_bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& value, int precision_bits) : BigFloat(precision_bits) {
  mpfr_set_q(value_, value.gmp().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(BigFloat other) noexcept {
  swap(*this, other);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int significant_digits) const {
  if (mpfr_zero_p(value_) != 0) return "0";
  std::vector<char> buf(static_cast<std::size_t>(significant_digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant_digits - 1, value_);
  return std::string(buf.data());
}

BigFloat BigFloat::sqrt() const {
  BigFloat out(precision());
  mpfr_sqrt(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(std::max(a.precision(), b.precision()));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigComplex qc_to_float(const QuadComplex& x, int precision_bits) {
  if (precision_bits < 53) throw std::invalid_argument("precision_bits must be at least 53");
  // Guard bits keep the two roundings in im*sqrt(D) inside one final ulp.
  const int work = precision_bits + 16;
  BigFloat re(x.real(), precision_bits);
  BigFloat im(precision_bits);
  if (!x.is_real()) {
    BigFloat root = BigFloat(Rational(x.radicand()), work).sqrt();
    BigFloat prod = BigFloat(x.imag_coeff(), work) * root;
    mpfr_set(im.raw(), prod.get(), MPFR_RNDN);
  }
  return BigComplex{std::move(re), std::move(im)};
}

std::complex<double> to_complex_double(const QuadComplex& x) {
  return qc_to_float(x, kDefaultAssemblyPrecisionBits).to_complex();
}

std::string decimal_string(const Rational& x, int significant_digits) {
  const int bits = static_cast<int>(std::ceil(significant_digits * 3.33)) + 16;
  return BigFloat(x, bits).to_string(significant_digits);
}

}  // namespace cscodes
