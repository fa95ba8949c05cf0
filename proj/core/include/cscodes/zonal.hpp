#pragma once

// Zonal matrices Y^{i,j}(u, v, t) of the isotypic components of the
// polynomial space under the stabilizer U(d-1) of a point e in the complex
// sphere. With u = e*x, v = e*y and t = x*y the (a,b) entry is
//
//   (u ubar)^a (v vbar)^b sum_r c_r ((1 - u ubar)(1 - v vbar))^r
//                                   (t - ubar v)^(i-r) (tbar - u vbar)^(j-r)
//
// where c_r are the coefficients of the inner Jacobi polynomial g_{i,j}.
// This is the radical-free expansion of
//   ((1-|u|^2)(1-|v|^2))^((i+j)/2) |u|^2a |v|^2b g_{i,j}((t - ubar v)/sqrt((1-|u|^2)(1-|v|^2)))
// and stays inside the working field Q(i sqrt D).

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "cscodes/big_float.hpp"
#include "cscodes/field.hpp"
#include "cscodes/harmonics.hpp"
#include "cscodes/matrix.hpp"
#include "cscodes/quad_complex.hpp"

namespace cscodes {

class NotHermitian : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which dimension the inner Jacobi factor g_{i,j} is taken in.
enum class InnerDimension {
  Reduced,  // g_{i,j}^{d-1}, the stabilizer's sphere (default)
  Ambient,  // g_{i,j}^{d}, cross-check mode
};

struct ZonalBlockSpec {
  int d = 3;
  int i = 0;
  int j = 0;
  int m = 1;
  InnerDimension inner = InnerDimension::Reduced;

  int inner_dimension() const { return inner == InnerDimension::Reduced ? d - 1 : d; }
  /// Throws std::domain_error when the inner Jacobi factor is undefined.
  void validate() const;
};

/// Evaluates zonal entries for one (d, i, j) with the inner Jacobi
/// polynomial computed once.
class ZonalKernel {
 public:
  explicit ZonalKernel(const ZonalBlockSpec& spec);

  const ZonalBlockSpec& spec() const { return spec_; }
  const JacobiSpec& inner_jacobi() const { return inner_; }

  template <ScalarField Field>
  Field entry(int a, int b, const Field& u, const Field& v, const Field& t) const {
    using Ops = FieldOps<Field>;
    const Field one = Ops::one();
    const Field uu = u * Ops::conj(u);
    const Field vv = v * Ops::conj(v);
    const Field w = (one - uu) * (one - vv);
    const Field q = t - Ops::conj(u) * v;
    const Field qbar = Ops::conj(t) - u * Ops::conj(v);
    Field sum = Ops::from_rational(Rational(0));
    for (int r = 0; r < static_cast<int>(inner_.coeffs.size()); ++r) {
      sum = sum + Ops::from_rational(inner_.coeffs[static_cast<std::size_t>(r)]) * power(w, r) *
                      power(q, spec_.i - r) * power(qbar, spec_.j - r);
    }
    return power(uu, a) * power(vv, b) * sum;
  }

  template <ScalarField Field>
  DenseMatrix<Field> matrix(const Field& u, const Field& v, const Field& t) const {
    const auto m = static_cast<std::size_t>(spec_.m);
    DenseMatrix<Field> out(m, m, FieldOps<Field>::from_rational(Rational(0)));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        out(a, b) = entry(static_cast<int>(a), static_cast<int>(b), u, v, t);
      }
    }
    return out;
  }

 private:
  ZonalBlockSpec spec_;
  JacobiSpec inner_;
};

QuadComplex zonal_entry(int d, int i, int j, int a, int b, const QuadComplex& u, const QuadComplex& v,
                        const QuadComplex& t, InnerDimension inner = InnerDimension::Reduced);

DenseMatrix<QuadComplex> zonal_matrix(const ZonalBlockSpec& spec, const QuadComplex& u, const QuadComplex& v,
                                      const QuadComplex& t);

/// The same entry computed from the radical form with a floating square root;
/// requires |u|, |v| < 1. Used to cross-check the radical-free expansion.
std::complex<double> zonal_entry_radical_form(int d, int i, int j, int a, int b, std::complex<double> u,
                                              std::complex<double> v, std::complex<double> t);

bool is_hermitian(const DenseMatrix<QuadComplex>& h);

/// [[Re H, -Im H], [Im H, Re H]]; H is PSD iff the result is. Throws
/// NotHermitian unless H is exactly Hermitian.
Eigen::MatrixXd realify(const DenseMatrix<QuadComplex>& h, int precision_bits = kDefaultAssemblyPrecisionBits);
Eigen::MatrixXd realify(const Eigen::MatrixXcd& h);

/// Entrywise rounding of an exact matrix through qc_to_float.
Eigen::MatrixXcd to_complex_matrix(const DenseMatrix<QuadComplex>& h, int precision_bits = kDefaultAssemblyPrecisionBits);

}  // namespace cscodes
