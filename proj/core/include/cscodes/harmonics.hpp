#pragma once

// Harmonic analysis on the complex unit sphere in C^d and the real sphere
// S^{d-1}: dimensions of the harmonic spaces Harm_d(k,l), the Jacobi
// polynomials g_{k,l}^d, and normalized Gegenbauer polynomials.
//
// Everything here is computed exactly; no floating intermediates.

#include <stdexcept>
#include <vector>

#include "cscodes/field.hpp"
#include "cscodes/polynomial.hpp"
#include "cscodes/quad_complex.hpp"
#include "cscodes/rational.hpp"

namespace cscodes {

/// g_{k,l}^d(x) = sum_r coeffs[r] * x^(k-r) * conj(x)^(l-r), r = 0..min(k,l).
struct JacobiSpec {
  int d = 2;
  int k = 0;
  int l = 0;
  std::vector<Rational> coeffs;

  /// g_{k,l}^d(1), equal to dim Harm_d(k,l).
  Rational at_one() const;
};

/// G_k^d normalized so that G_k^d(1) = 1.
struct GegenbauerSpec {
  int d = 2;
  int k = 0;
  RealPolynomial poly;
};

/// m_{k,l}^d = C(d+k-1,d-1) C(d+l-1,d-1) - C(d+k-2,d-1) C(d+l-2,d-1).
Rational dim_harm(int d, int k, int l);

JacobiSpec jacobi(int d, int k, int l);

template <ScalarField Field>
Field jacobi_eval(const JacobiSpec& spec, const Field& x) {
  using Ops = FieldOps<Field>;
  const Field xbar = Ops::conj(x);
  Field acc = Ops::from_rational(Rational(0));
  for (int r = 0; r < static_cast<int>(spec.coeffs.size()); ++r) {
    acc = acc + Ops::from_rational(spec.coeffs[static_cast<std::size_t>(r)]) * power(x, spec.k - r) *
                    power(xbar, spec.l - r);
  }
  return acc;
}

/// Checks x g_{k,l}(x) == a_{k,l} g_{k+1,l}(x) + b_{k,l} g_{k,l-1}(x) exactly,
/// with a_{k,l} = (k+1)/(d+k+l) and b_{k,l} = (d+l-2)/(d+k+l-2).
bool jacobi_recurrence_check(int d, int k, int l, const QuadComplex& x);

GegenbauerSpec gegenbauer(int d, int k);

/// Coefficients f_0..f_n with F = sum_k f_k G_k^d, by exact triangular solve.
std::vector<Rational> gegenbauer_expand(const RealPolynomial& F, int d);

/// Inverse of gegenbauer_expand.
RealPolynomial gegenbauer_reconstruct(const std::vector<Rational>& coeffs, int d);

}  // namespace cscodes
