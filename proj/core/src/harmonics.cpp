#include "cscodes/harmonics.hpp"

#include <algorithm>
#include <string>

namespace cscodes {

namespace {

void require_domain(int d, int k, int l) {
  if (d < 2 || k < 0 || l < 0) {
    throw std::domain_error("harmonic index out of range: d=" + std::to_string(d) + " k=" + std::to_string(k) +
                            " l=" + std::to_string(l));
  }
}

}  // namespace

Rational JacobiSpec::at_one() const {
  Rational sum;
  for (const auto& c : coeffs) sum += c;
  return sum;
}

Rational dim_harm(int d, int k, int l) {
  require_domain(d, k, l);
  const mpz_class m = binomial(d + k - 1, d - 1) * binomial(d + l - 1, d - 1) -
                      binomial(d + k - 2, d - 1) * binomial(d + l - 2, d - 1);
  return Rational(m);
}

JacobiSpec jacobi(int d, int k, int l) {
  require_domain(d, k, l);
  const auto uf = [](int n) { return factorial(static_cast<unsigned long>(n)); };
  const Rational prefactor = dim_harm(d, k, l) * Rational(uf(d - 2) * uf(k) * uf(l), uf(d + k - 2) * uf(d + l - 2));
  JacobiSpec spec{d, k, l, {}};
  for (int r = 0; r <= std::min(k, l); ++r) {
    Rational term(uf(d + k + l - r - 2), uf(r) * uf(k - r) * uf(l - r));
    if (r % 2 == 1) term = -term;
    spec.coeffs.push_back(prefactor * term);
  }
  return spec;
}

bool jacobi_recurrence_check(int d, int k, int l, const QuadComplex& x) {
  const QuadComplex lhs = x * jacobi_eval(jacobi(d, k, l), x);
  QuadComplex rhs = QuadComplex(Rational(k + 1, d + k + l)) * jacobi_eval(jacobi(d, k + 1, l), x);
  if (l >= 1) {
    // d + k + l - 2 > 0 whenever l >= 1.
    rhs += QuadComplex(Rational(d + l - 2, d + k + l - 2)) * jacobi_eval(jacobi(d, k, l - 1), x);
  }
  return lhs == rhs;
}

GegenbauerSpec gegenbauer(int d, int k) {
  if (d < 2 || k < 0) throw std::domain_error("gegenbauer index out of range");
  // (n + d - 2) G_{n+1} = (2n + d - 2) x G_n - n G_{n-1}, with G_0 = 1, G_1 = x.
  RealPolynomial prev = RealPolynomial::constant(1);
  if (k == 0) return {d, 0, prev};
  RealPolynomial curr = RealPolynomial::monomial(1);
  const RealPolynomial x = RealPolynomial::monomial(1);
  for (int n = 1; n < k; ++n) {
    RealPolynomial next = (x * curr) * Rational(2 * n + d - 2) - prev * Rational(n);
    next *= Rational(1, n + d - 2);
    prev = std::move(curr);
    curr = std::move(next);
  }
  return {d, k, curr};
}

std::vector<Rational> gegenbauer_expand(const RealPolynomial& F, int d) {
  if (d < 2) throw std::domain_error("gegenbauer_expand requires d >= 2");
  if (F.is_zero()) return {};
  const int n = F.degree();
  std::vector<Rational> f(static_cast<std::size_t>(n) + 1);
  RealPolynomial rest = F;
  for (int k = n; k >= 0; --k) {
    const GegenbauerSpec g = gegenbauer(d, k);
    const Rational c = rest.coefficient(k) / g.poly.coefficient(k);
    f[static_cast<std::size_t>(k)] = c;
    rest -= g.poly * c;
  }
  return f;
}

RealPolynomial gegenbauer_reconstruct(const std::vector<Rational>& coeffs, int d) {
  RealPolynomial out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) out += gegenbauer(d, static_cast<int>(k)).poly * coeffs[k];
  return out;
}

}  // namespace cscodes
