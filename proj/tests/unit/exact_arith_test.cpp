#include <doctest.h>

#include <cmath>
#include <random>

#include "cscodes/big_float.hpp"
#include "cscodes/quad_complex.hpp"
#include "cscodes/rational.hpp"
#include "support/oracles.hpp"

using namespace cscodes;
using cscodes::testing::random_quad;
using cscodes::testing::random_rational;

namespace {

bool reduced(const Rational& r) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
  return g == 1 && r.denominator() > 0;
}

}  // namespace

TEST_CASE("qc_mul examples") {
  const QuadComplex s3i(Rational(0), Rational(1), Rational(3));
  CHECK(qc_mul(s3i, s3i) == QuadComplex(-3));

  const QuadComplex x = QuadComplex::parse("2/7 - 5/3*sqrt(11)*i");
  CHECK(qc_mul(QuadComplex(1), x) == x);

  const QuadComplex a = QuadComplex::parse("(4+i)/5");
  const QuadComplex b = QuadComplex::parse("(4-i)/5");
  CHECK(qc_mul(a, b) == QuadComplex(Rational(17, 25)));
}

TEST_CASE("qc_conj examples") {
  const QuadComplex x(Rational(1, 2), Rational(1, 3), Rational(5));
  const QuadComplex want(Rational(1, 2), Rational(-1, 3), Rational(5));
  CHECK(qc_conj(x) == want);
  CHECK(qc_conj(QuadComplex(Rational(-7, 3))) == QuadComplex(Rational(-7, 3)));
  CHECK(qc_conj(qc_conj(x)) == x);
}

TEST_CASE("qc_to_float examples") {
  // 1/sqrt(3) = 0.57735026918962576450...; the nearest double is
  // 0.5773502691896257 (error 3.3e-17), while the naive 1.0 / std::sqrt(3.0)
  // lands one ulp above it. The contract is relative error <= 2^-52.
  const QuadComplex x(Rational(0), Rational(1, 3), Rational(3));
  const BigComplex z = qc_to_float(x, 53);
  CHECK(z.re.to_double() == 0.0);
  CHECK(z.im.to_double() == 0.5773502691896257);
  CHECK(std::abs(z.im.to_double() - 0.5773502691896258) <= std::ldexp(0.5773502691896258, -52));
  CHECK(std::abs(z.im.to_double() - 1.0 / std::sqrt(3.0)) <= std::ldexp(0.5773502691896258, -52));

  CHECK(qc_to_float(QuadComplex(0), 53).re.to_double() == 0.0);

  // 1174/203 to double: IEEE division of exactly representable integers is
  // the correctly rounded quotient.
  CHECK(qc_to_float(QuadComplex(Rational(1174, 203)), 53).re.to_double() == 1174.0 / 203.0);
  CHECK(std::abs(1174.0 / 203.0 - 5.783251231527094) < 1e-15);
}

TEST_CASE("qc_to_float rejects precision below double") {
  CHECK_THROWS(qc_to_float(QuadComplex(1), 52));
}

TEST_CASE("parse accepts the documented spellings") {
  CHECK(QuadComplex::parse("31/666 + 1/666*sqrt(4699)*i") == QuadComplex(Rational(31, 666), Rational(1, 666), Rational(4699)));
  CHECK(QuadComplex::parse("-16/111") == QuadComplex(Rational(-16, 111)));
  CHECK(QuadComplex::parse("i*sqrt(3)/3") == QuadComplex(Rational(0), Rational(1, 3), Rational(3)));
  CHECK(QuadComplex::parse("sqrt(-3)") == QuadComplex(Rational(0), Rational(1), Rational(3)));
  // Square factors of the radicand are absorbed into the coefficient.
  CHECK(QuadComplex::parse("sqrt(-12)") == QuadComplex(Rational(0), Rational(2), Rational(3)));
  CHECK_THROWS_AS(QuadComplex::parse("sqrt(2)"), std::invalid_argument);
  CHECK_THROWS_AS(QuadComplex::parse("1 +"), std::invalid_argument);
}

TEST_CASE("values from different fields cannot be combined") {
  const QuadComplex a(Rational(0), Rational(1), Rational(3));
  const QuadComplex b(Rational(0), Rational(1), Rational(5));
  CHECK_THROWS_AS(a + b, RadicandMismatch);
  CHECK_THROWS_AS(a * b, RadicandMismatch);
  CHECK_NOTHROW(a + QuadComplex(Rational(1, 2)));
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(QuadComplex(1) / QuadComplex(0), std::domain_error);
  CHECK_THROWS_AS(Rational(3, 0), std::domain_error);
}

TEST_CASE("field axioms hold exactly on random elements") {
  std::mt19937_64 rng(20240611);
  for (long D : {0L, 1L, 2L, 3L, 7L, 35L, 4699L}) {
    for (int trial = 0; trial < 40; ++trial) {
      const QuadComplex x = random_quad(rng, D), y = random_quad(rng, D), z = random_quad(rng, D);
      CHECK((x * y) * z == x * (y * z));
      CHECK((x + y) + z == x + (y + z));
      CHECK(x * y == y * x);
      CHECK(x + y == y + x);
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x - x == QuadComplex(0));
      if (!(y == QuadComplex(0))) CHECK((x / y) * y == x);
      CHECK(qc_mul(x, qc_conj(x)).imag_coeff().is_zero());
      CHECK(qc_mul(x, qc_conj(x)).real() == x.norm());
      CHECK(QuadComplex::parse(x.to_string()) == x);
      CHECK((x * y).conj() == x.conj() * y.conj());
    }
  }
}

TEST_CASE("rationals stay in lowest terms") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = random_rational(rng, 1000, 1000), b = random_rational(rng, 1000, 1000);
    CHECK(reduced(a + b));
    CHECK(reduced(a - b));
    CHECK(reduced(a * b));
    if (!b.is_zero()) CHECK(reduced(a / b));
    CHECK(reduced(a.pow(3)));
    CHECK(Rational::parse(a.to_string()) == a);
  }
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(0, 5).denominator() == 1);
}

TEST_CASE("integer helpers") {
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(rational_sqrt(Rational(49, 16)) == Rational(7, 4));
  CHECK_FALSE(rational_sqrt(Rational(2)).has_value());
  CHECK_FALSE(rational_sqrt(Rational(-4)).has_value());
  CHECK(Rational(-7, 2).floor() == -4);
}
