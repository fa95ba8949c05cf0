#include "cscodes/zonal.hpp"

#include <cmath>
#include <string>

namespace cscodes {

void ZonalBlockSpec::validate() const {
  if (i < 0 || j < 0) throw std::domain_error("zonal block indices must be nonnegative");
  if (m < 1) throw std::domain_error("zonal block size must be at least 1");
  if (d < 2) throw std::domain_error("zonal blocks need d >= 2");
  if (inner_dimension() < 2 && (i != 0 || j != 0)) {
    throw std::domain_error("inner Jacobi factor g_{" + std::to_string(i) + "," + std::to_string(j) +
                            "} is undefined in dimension " + std::to_string(inner_dimension()) +
                            "; only (i,j) = (0,0) is allowed");
  }
}

ZonalKernel::ZonalKernel(const ZonalBlockSpec& spec) : spec_(spec) {
  spec_.validate();
  if (spec_.i == 0 && spec_.j == 0) {
    inner_ = JacobiSpec{std::max(spec_.inner_dimension(), 2), 0, 0, {Rational(1)}};
  } else {
    inner_ = jacobi(spec_.inner_dimension(), spec_.i, spec_.j);
  }
}

QuadComplex zonal_entry(int d, int i, int j, int a, int b, const QuadComplex& u, const QuadComplex& v,
                        const QuadComplex& t, InnerDimension inner) {
  if (a < 0 || b < 0) throw std::domain_error("zonal entry indices a, b must be nonnegative");
  const ZonalKernel kernel(ZonalBlockSpec{d, i, j, std::max(a, b) + 1, inner});
  return kernel.entry(a, b, u, v, t);
}

DenseMatrix<QuadComplex> zonal_matrix(const ZonalBlockSpec& spec, const QuadComplex& u, const QuadComplex& v,
                                      const QuadComplex& t) {
  return ZonalKernel(spec).matrix(u, v, t);
}

std::complex<double> zonal_entry_radical_form(int d, int i, int j, int a, int b, std::complex<double> u,
                                              std::complex<double> v, std::complex<double> t) {
  const double uu = std::norm(u);
  const double vv = std::norm(v);
  if (uu >= 1.0 || vv >= 1.0) throw std::domain_error("radical form needs |u|, |v| < 1");
  const double s = std::sqrt((1.0 - uu) * (1.0 - vv));
  const std::complex<double> q = (t - std::conj(u) * v) / s;
  std::complex<double> g{1.0, 0.0};
  if (i != 0 || j != 0) g = jacobi_eval(jacobi(d - 1, i, j), q);
  return std::pow(s, i + j) * std::pow(uu, a) * std::pow(vv, b) * g;
}

bool is_hermitian(const DenseMatrix<QuadComplex>& h) {
  if (h.rows() != h.cols()) return false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    for (std::size_t c = r; c < h.cols(); ++c) {
      if (h(r, c) != h(c, r).conj()) return false;
    }
  }
  return true;
}

Eigen::MatrixXcd to_complex_matrix(const DenseMatrix<QuadComplex>& h, int precision_bits) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(h.rows()), static_cast<Eigen::Index>(h.cols()));
  for (std::size_t r = 0; r < h.rows(); ++r) {
    for (std::size_t c = 0; c < h.cols(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = qc_to_float(h(r, c), precision_bits).to_complex();
    }
  }
  return out;
}

Eigen::MatrixXd realify(const Eigen::MatrixXcd& h) {
  const Eigen::Index m = h.rows();
  Eigen::MatrixXd out(2 * m, 2 * m);
  out.topLeftCorner(m, m) = h.real();
  out.topRightCorner(m, m) = -h.imag();
  out.bottomLeftCorner(m, m) = h.imag();
  out.bottomRightCorner(m, m) = h.real();
  return out;
}

Eigen::MatrixXd realify(const DenseMatrix<QuadComplex>& h, int precision_bits) {
  if (!is_hermitian(h)) throw NotHermitian("realify: matrix is not exactly Hermitian");
  return realify(to_complex_matrix(h, precision_bits));
}

}  // namespace cscodes
