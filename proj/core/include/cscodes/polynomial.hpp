#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cscodes/rational.hpp"

namespace cscodes {

/// Univariate polynomial with rational coefficients in the monomial basis,
/// ascending degree. The zero polynomial has no coefficients.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  RealPolynomial(std::initializer_list<Rational> coeffs);
  explicit RealPolynomial(std::vector<Rational> coeffs);

  static RealPolynomial constant(const Rational& c) { return RealPolynomial({c}); }
  static RealPolynomial monomial(int degree, const Rational& c = 1);
  /// The linear factor (x - root).
  static RealPolynomial linear_factor(const Rational& root) { return RealPolynomial({-root, 1}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  Rational coefficient(int k) const;

  Rational operator()(const Rational& x) const;

  RealPolynomial& operator+=(const RealPolynomial& rhs);
  RealPolynomial& operator-=(const RealPolynomial& rhs);
  RealPolynomial& operator*=(const Rational& scalar);
  friend RealPolynomial operator+(RealPolynomial a, const RealPolynomial& b) { return a += b; }
  friend RealPolynomial operator-(RealPolynomial a, const RealPolynomial& b) { return a -= b; }
  friend RealPolynomial operator*(RealPolynomial a, const Rational& s) { return a *= s; }
  friend RealPolynomial operator*(const Rational& s, RealPolynomial a) { return a *= s; }
  friend RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b);

  friend bool operator==(const RealPolynomial& a, const RealPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace cscodes
