#pragma once

// Minimal adaptor so polynomial kernels can run both exactly (QuadComplex)
// and in double precision (std::complex<double>).

#include <complex>

#include "cscodes/quad_complex.hpp"
#include "cscodes/rational.hpp"

namespace cscodes {

template <class Field>
struct FieldOps;

template <>
struct FieldOps<QuadComplex> {
  static QuadComplex from_rational(const Rational& r) { return QuadComplex(r); }
  static QuadComplex conj(const QuadComplex& x) { return x.conj(); }
  static QuadComplex one() { return QuadComplex(1); }
};

template <>
struct FieldOps<std::complex<double>> {
  static std::complex<double> from_rational(const Rational& r) { return {r.to_double(), 0.0}; }
  static std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }
  static std::complex<double> one() { return {1.0, 0.0}; }
};

template <class Field>
concept ScalarField = requires(const Field& a, const Rational& r) {
  { FieldOps<Field>::from_rational(r) } -> std::convertible_to<Field>;
  { FieldOps<Field>::conj(a) } -> std::convertible_to<Field>;
  { a * a } -> std::convertible_to<Field>;
  { a + a } -> std::convertible_to<Field>;
  { a - a } -> std::convertible_to<Field>;
};

/// x^n for n >= 0 by repeated multiplication.
template <ScalarField Field>
Field power(const Field& x, int n) {
  Field out = FieldOps<Field>::one();
  for (int i = 0; i < n; ++i) out = out * x;
  return out;
}

}  // namespace cscodes
