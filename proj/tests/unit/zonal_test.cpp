#include <doctest.h>

#include <cmath>
#include <random>

#include "cscodes/zonal.hpp"
#include "support/oracles.hpp"

using namespace cscodes;
using cscodes::testing::min_eig;
using cscodes::testing::random_code;
using cscodes::testing::random_disk_point;

TEST_CASE("the (0,0) entry of the (0,0) block is 1 everywhere") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const QuadComplex u = random_disk_point(rng, 3), v = random_disk_point(rng, 3), t = random_disk_point(rng, 3);
    for (int d = 2; d <= 6; ++d) CHECK(zonal_entry(d, 0, 0, 0, 0, u, v, t) == QuadComplex(1));
  }
}

TEST_CASE("the (3,0) entry at d = 5 is 20 (t - ubar v)^3") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const QuadComplex u = random_disk_point(rng, 1), v = random_disk_point(rng, 1), t = random_disk_point(rng, 1);
    const QuadComplex q = t - u.conj() * v;
    CHECK(zonal_entry(5, 3, 0, 0, 0, u, v, t) == QuadComplex(20) * q * q * q);
  }
  // Inner dimension d-1 gives the constant (d-1)d(d+1)/6 in ambient d.
  for (int d = 3; d <= 12; ++d) {
    const QuadComplex u(Rational(1, 3)), v(Rational(-1, 4)), t(Rational(1, 5));
    const QuadComplex q = t - u.conj() * v;
    CHECK(zonal_entry(d, 3, 0, 0, 0, u, v, t) == QuadComplex(Rational((d - 1) * d * (d + 1), 6)) * q * q * q);
    // The ambient cross-check mode uses d(d+1)(d+2)/6 instead.
    CHECK(zonal_entry(d, 3, 0, 0, 0, u, v, t, InnerDimension::Ambient) ==
          QuadComplex(Rational(d * (d + 1) * (d + 2), 6)) * q * q * q);
  }
}

TEST_CASE("entries at (1,1,1)") {
  const QuadComplex one(1);
  for (int d = 3; d <= 6; ++d) {
    for (int i = 0; i <= 3; ++i) {
      for (int j = 0; j <= 3; ++j) {
        const auto y = zonal_matrix(ZonalBlockSpec{d, i, j, 3}, one, one, one);
        for (const auto& x : y.data()) CHECK(x == QuadComplex(i + j == 0 ? 1 : 0));
      }
    }
  }
}

TEST_CASE("the (0,0) block at rational points is (u ubar)^a (v vbar)^b") {
  const QuadComplex u(Rational(1, 2)), v(Rational(-2, 3)), t(Rational(1, 7));
  const auto y = zonal_matrix(ZonalBlockSpec{4, 0, 0, 2}, u, v, t);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      CHECK(y(a, b) == QuadComplex(Rational(1, 4).pow(static_cast<int>(a)) * Rational(4, 9).pow(static_cast<int>(b))));
    }
  }
}

TEST_CASE("adjoint law: Y(u,v,t)^* = Y(v,u,tbar)") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const long radicand = trial % 2 == 0 ? 3 : 7;
    const QuadComplex u = random_disk_point(rng, radicand), v = random_disk_point(rng, radicand),
                      t = random_disk_point(rng, radicand);
    for (int i = 0; i <= 2; ++i) {
      for (int j = 0; j <= 2; ++j) {
        const ZonalBlockSpec spec{4, i, j, 3};
        const auto y = zonal_matrix(spec, u, v, t);
        const auto z = zonal_matrix(spec, v, u, t.conj());
        for (std::size_t a = 0; a < 3; ++a) {
          for (std::size_t b = 0; b < 3; ++b) CHECK(y(a, b).conj() == z(b, a));
        }
      }
    }
  }
}

TEST_CASE("the radical-free expansion matches the radical form") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(-0.6, 0.6);
  for (int trial = 0; trial < 40; ++trial) {
    const std::complex<double> u{unit(rng), unit(rng)}, v{unit(rng), unit(rng)}, t{unit(rng), unit(rng)};
    for (int d = 3; d <= 6; ++d) {
      for (int i = 0; i <= 3; ++i) {
        for (int j = 0; i + j <= 4; ++j) {
          const ZonalKernel kernel(ZonalBlockSpec{d, i, j, 3});
          for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
              const auto lhs = kernel.entry(a, b, u, v, t);
              const auto rhs = zonal_entry_radical_form(d, i, j, a, b, u, v, t);
              CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(zonal_matrix(ZonalBlockSpec{2, 1, 0, 1}, QuadComplex(0), QuadComplex(0), QuadComplex(0)), std::domain_error);
  CHECK_NOTHROW(zonal_matrix(ZonalBlockSpec{2, 0, 0, 2}, QuadComplex(0), QuadComplex(0), QuadComplex(0)));
  CHECK_THROWS_AS(zonal_matrix(ZonalBlockSpec{3, 0, 0, 0}, QuadComplex(0), QuadComplex(0), QuadComplex(0)), std::domain_error);
  CHECK_THROWS_AS(zonal_entry_radical_form(3, 1, 0, 0, 0, {1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}), std::domain_error);
}

TEST_CASE("realify examples") {
  DenseMatrix<QuadComplex> one(1, 1, QuadComplex(1));
  CHECK(realify(one).isApprox(Eigen::MatrixXd::Identity(2, 2)));

  DenseMatrix<QuadComplex> h(2, 2, QuadComplex(0));
  h(0, 1) = QuadComplex::i();
  h(1, 0) = -QuadComplex::i();
  const Eigen::MatrixXd r = realify(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r);
  const Eigen::Vector4d want(-1, -1, 1, 1);
  CHECK((es.eigenvalues() - want).cwiseAbs().maxCoeff() < 1e-14);

  // Exact Gram of three points (1,0), (3/5, 4/5 i), (0, 1) in C^2.
  DenseMatrix<QuadComplex> g(3, 3, QuadComplex(0));
  const QuadComplex a(Rational(3, 5)), b(Rational(0), Rational(4, 5), Rational(1));
  g(0, 0) = g(1, 1) = g(2, 2) = QuadComplex(1);
  g(0, 1) = a;         // x0* x1
  g(1, 0) = a;
  g(1, 2) = b.conj();  // x1* x2
  g(2, 1) = b;
  g(0, 2) = g(2, 0) = QuadComplex(0);
  CHECK(min_eig(realify(g)) >= -1e-12);

  DenseMatrix<QuadComplex> bad(2, 2, QuadComplex(0));
  bad(0, 1) = QuadComplex(1);
  CHECK_THROWS_AS(realify(bad), NotHermitian);
}

TEST_CASE("zonal sums over random codes are positive semidefinite") {
  // Sum_{x,y in X} Y(e*x, e*y, x*y) with e the last coordinate vector.
  std::mt19937_64 rng(20240611);
  const int p = 4;
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 3 + trial % 3;
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto X = random_code(rng, d, n);
    for (int i = 0; i <= p; ++i) {
      for (int j = 0; i + j <= p; ++j) {
        const int m = (p - i - j) / 2 + 1;
        const ZonalKernel kernel(ZonalBlockSpec{d, i, j, m});
        Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(m, m);
        for (const auto& x : X) {
          for (const auto& y : X) {
            const std::complex<double> u = x(d - 1), v = y(d - 1), t = x.dot(y);  // dot conjugates x
            const auto Y = kernel.matrix(u, v, t);
            for (int a = 0; a < m; ++a) {
              for (int b = 0; b < m; ++b) S(a, b) += Y(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
            }
          }
        }
        const Eigen::MatrixXcd H = 0.5 * (S + S.adjoint());
        CHECK(min_eig(H) >= -1e-9 * std::max(1.0, H.norm()));
      }
    }
  }
}
