#include "cscodes/tournaments.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include <Eigen/Dense>

#include "cscodes/parallel.hpp"
#include "cscodes/zonal.hpp"

namespace cscodes {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix out(n, n, 0);
  for (std::size_t k = 0; k < n; ++k) out(k, k) = 1;
  return out;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix out(m.cols(), m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  }
  return out;
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b, int sb = 1) {
  IntMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += sb * b(r, c);
  }
  return out;
}

/// Checks m == blockdiag(diag I + off J, diag I + off J) for blocks of size h.
bool is_block_form(const IntMatrix& m, std::size_t h, int diag, int off) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const bool same = (r < h) == (c < h);
      const int want = same ? off + (r == c ? diag : 0) : 0;
      if (m(r, c) != want) return false;
    }
  }
  return true;
}

void validate_subset(int d, const std::vector<int>& X) {
  std::set<int> seen;
  for (int x : X) {
    if (x < 0 || x >= d) throw std::invalid_argument("element " + std::to_string(x) + " is outside Z_" + std::to_string(d));
    if (!seen.insert(x).second) throw std::invalid_argument("element " + std::to_string(x) + " repeated");
  }
}

std::vector<int> elements_of(std::uint64_t m) {
  std::vector<int> out;
  for (int k = 0; m != 0; ++k, m >>= 1) {
    if ((m & 1U) != 0) out.push_back(k);
  }
  return out;
}

int difference_count_mask(int d, std::uint64_t m, int i) {
  // Rotate by i: bit y of the rotation is bit (y - i) mod d of m.
  const std::uint64_t full = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
  const std::uint64_t rot = ((m << i) | (m >> (d - i))) & full;
  return std::popcount(m & rot);
}

}  // namespace

void Tournament::validate() const {
  const std::size_t n = adjacency.rows();
  if (adjacency.cols() != n) throw std::invalid_argument("tournament adjacency must be square");
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const int a = adjacency(r, c);
      if (a != 0 && a != 1) throw std::invalid_argument("tournament adjacency must be 0/1");
      const int sum = r == c ? a : a + adjacency(c, r);
      if (sum != (r == c ? 0 : 1)) {
        throw std::invalid_argument("tournament adjacency violates A + A^T = J - I at (" + std::to_string(r) + "," +
                                    std::to_string(c) + ")");
      }
    }
  }
}

IntMatrix Tournament::skew() const { return add(adjacency, transpose(adjacency), -1); }

Tournament tournament_from_skew(const IntMatrix& S) {
  const std::size_t n = S.rows();
  Tournament t{IntMatrix(n, n, 0)};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (S(r, c) != -S(c, r)) throw std::invalid_argument("matrix is not skew-symmetric");
      if (r != c && S(r, c) != 1 && S(r, c) != -1) throw std::invalid_argument("off-diagonal entries must be +-1");
      t.adjacency(r, c) = S(r, c) == 1 ? 1 : 0;
    }
  }
  t.validate();
  return t;
}

bool SdsPair::skew_symmetric() const {
  const std::set<int> x1(X1.begin(), X1.end());
  if (x1.count(0) != 0) return false;
  for (int i = 1; i < d; ++i) {
    if ((x1.count(i) != 0) == (x1.count((d - i) % d) != 0)) return false;
  }
  return true;
}

int difference_count(int d, const std::vector<int>& X, int i) {
  int count = 0;
  const int step = ((i % d) + d) % d;
  const std::set<int> members(X.begin(), X.end());
  for (int x : X) count += static_cast<int>(members.count((x + step) % d));
  return count;
}

int sds_verify(int d, const std::vector<int>& X1, const std::vector<int>& X2) {
  if (d < 2) throw std::invalid_argument("sds_verify needs d >= 2");
  validate_subset(d, X1);
  validate_subset(d, X2);
  const int lambda = difference_count(d, X1, 1) + difference_count(d, X2, 1);
  for (int i = 2; i < d; ++i) {
    const int v = difference_count(d, X1, i) + difference_count(d, X2, i);
    if (v != lambda) {
      throw NotSds("P_X1(" + std::to_string(i) + ") + P_X2(" + std::to_string(i) + ") = " + std::to_string(v) +
                       " differs from " + std::to_string(lambda) + " at index 1",
                   i);
    }
  }
  return lambda;
}

SdsPair make_sds(int d, std::vector<int> X1, std::vector<int> X2) {
  std::sort(X1.begin(), X1.end());
  std::sort(X2.begin(), X2.end());
  const int lambda = sds_verify(d, X1, X2);
  return SdsPair{d, std::move(X1), std::move(X2), lambda};
}

std::vector<SdsPair> find_skew_sds(int max_d, int workers) {
  if (max_d > 25) throw std::domain_error("find_skew_sds is a brute force; max_d must be <= 25");
  std::vector<SdsPair> out;
  for (int d = 3; d <= max_d; d += 2) {
    const int half = (d - 1) / 2;
    const std::size_t choices = std::size_t{1} << half;
    std::vector<std::vector<SdsPair>> found(choices);
    parallel_for(choices, workers, [&](std::size_t c) {
      std::uint64_t m1 = 0;
      for (int i = 1; i <= half; ++i) m1 |= std::uint64_t{1} << (((c >> (i - 1)) & 1U) != 0 ? i : d - i);
      std::vector<int> p1(static_cast<std::size_t>(d));
      for (int i = 1; i < d; ++i) p1[static_cast<std::size_t>(i)] = difference_count_mask(d, m1, i);
      for (std::uint64_t m2 = 0; m2 < (std::uint64_t{1} << d); ++m2) {
        const int lambda = p1[1] + difference_count_mask(d, m2, 1);
        bool ok = true;
        for (int i = 2; i < d && ok; ++i) ok = p1[static_cast<std::size_t>(i)] + difference_count_mask(d, m2, i) == lambda;
        if (ok) found[c].push_back(SdsPair{d, elements_of(m1), elements_of(m2), lambda});
      }
    });
    std::vector<SdsPair> level;
    for (auto& f : found) level.insert(level.end(), f.begin(), f.end());
    std::sort(level.begin(), level.end(), [](const SdsPair& a, const SdsPair& b) {
      return std::tie(a.X1, a.X2) < std::tie(b.X1, b.X2);
    });
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

IntMatrix circulant(int d, const std::vector<int>& X) {
  const std::set<int> members(X.begin(), X.end());
  IntMatrix out(static_cast<std::size_t>(d), static_cast<std::size_t>(d), 1);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      if (members.count(((b - a) % d + d) % d) != 0) out(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = -1;
    }
  }
  return out;
}

SdsCode sds_to_code(const SdsPair& pair) {
  if (sds_verify(pair.d, pair.X1, pair.X2) != pair.lambda) throw std::invalid_argument("SDS lambda does not match");
  if (!pair.skew_symmetric()) throw std::invalid_argument("SDS is not skew-symmetric");
  const int d = pair.d;
  const auto n = static_cast<std::size_t>(d);
  const int np = pair.n_prime();
  const IntMatrix R1 = circulant(d, pair.X1);
  const IntMatrix R2 = circulant(d, pair.X2);
  const IntMatrix I = identity(n);

  // R1 R1^T + R2 R2^T = 4n' I + 2(d - 2n') J.
  const IntMatrix gram_sum = add(R1 * transpose(R1), R2 * transpose(R2));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (gram_sum(r, c) != 2 * (d - 2 * np) + (r == c ? 4 * np : 0)) throw std::logic_error("R1 R1^T + R2 R2^T identity fails");
    }
  }

  IntMatrix S(2 * n, 2 * n, 0);
  const IntMatrix tl = add(R1, I, -1);
  const IntMatrix br = add(transpose(R1), I, -1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      S(r, c) = tl(r, c);
      S(r, c + n) = R2(r, c);
      S(r + n, c) = -R2(c, r);
      S(r + n, c + n) = br(r, c);
    }
  }

  SdsCode out;
  out.tournament = tournament_from_skew(S);
  out.S = S;
  out.k = 4 * np - 1;
  const IntMatrix sst = S * transpose(S);
  if (!is_block_form(sst, n, out.k, 2 * d - 1 - out.k)) throw std::logic_error("S S^T block identity fails");
  const Rational den(d + 2 * np - 1);
  const Rational re = Rational(d - 2 * np) / den;
  const Rational im = Rational(1) / den;
  out.inner_products = {QuadComplex(re, im, Rational(out.k)), QuadComplex(re, -im, Rational(out.k))};
  out.d_optimal = out.k == 2 * d - 3;
  return out;
}

GramMatrix gram_from_tournament(const Tournament& t, const QuadComplex& gamma) {
  t.validate();
  const auto n = static_cast<std::size_t>(t.order());
  GramMatrix g(n, n, QuadComplex(0));
  const QuadComplex gbar = gamma.conj();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r == c) {
        g(r, c) = QuadComplex(1);
      } else {
        g(r, c) = t.adjacency(r, c) == 1 ? gamma : gbar;
      }
    }
  }
  return g;
}

GramMatrix gram_spectral(const Tournament& t) {
  t.validate();
  const auto n = static_cast<std::size_t>(t.order());
  if (n % 2 != 0 || n < 2) throw std::invalid_argument("gram_spectral needs an even order");
  const IntMatrix S = t.skew();
  const IntMatrix sq = S * transpose(S);  // (i(A - A^T))^2
  const std::size_t h = n / 2;
  const int beta = h > 1 ? sq(0, 1) : 0;
  const int alpha = sq(0, 0) - beta + 1;
  if (!is_block_form(sq, h, alpha - 1, beta)) throw std::invalid_argument("(i(A - A^T))^2 is not of block form");
  const Rational den(2 * alpha + beta - 2);
  const QuadComplex skew_coeff(Rational(0), Rational(2) / den, Rational(alpha - 1));
  const QuadComplex sym_coeff(Rational(beta) / den);
  GramMatrix g(n, n, QuadComplex(0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      g(r, c) = r == c ? QuadComplex(1) : sym_coeff + skew_coeff * QuadComplex(S(r, c));
    }
  }
  return g;
}

bool is_skew_hadamard(const Tournament& t) {
  const auto n = static_cast<std::size_t>(t.order());
  const IntMatrix H = add(identity(n), t.skew());
  const IntMatrix hh = H * transpose(H);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (hh(r, c) != (r == c ? static_cast<int>(n) : 0)) return false;
    }
  }
  return true;
}

std::optional<Tournament> find_skew_hadamard_tournament(int n) {
  if (n < 1 || n > 7) throw std::domain_error("find_skew_hadamard_tournament supports 1 <= n <= 7");
  const auto N = static_cast<std::size_t>(n);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = r + 1; c < N; ++c) edges.emplace_back(r, c);
  }
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << edges.size()); ++m) {
    Tournament t{IntMatrix(N, N, 0)};
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [r, c] = edges[e];
      if (((m >> e) & 1U) != 0) {
        t.adjacency(r, c) = 1;
      } else {
        t.adjacency(c, r) = 1;
      }
    }
    if (is_skew_hadamard(t)) return t;
  }
  return std::nullopt;
}

namespace {
Eigen::VectorXd eigenvalues(const GramMatrix& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_complex_matrix(g), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}
}  // namespace

int numeric_rank(const GramMatrix& g, double rel_tol) {
  const Eigen::VectorXd ev = eigenvalues(g);
  const double scale = ev.cwiseAbs().maxCoeff();
  return static_cast<int>((ev.array() > rel_tol * scale).count());
}

double min_eigenvalue(const GramMatrix& g) { return eigenvalues(g).minCoeff(); }

Rational twocode_bound_analytic(int d) {
  if (d < 5) throw std::domain_error("twocode_bound_analytic needs d >= 5");
  const Rational D(d), D2 = D * D, D3 = D2 * D;
  return (Rational(18) * D3 - Rational(48) * D2 + Rational(24) * D + Rational(4)) /
         (Rational(3) * D3 - Rational(6) * D2 - Rational(6) * D + Rational(8));
}

Rational TripleDistribution::at(const Triple& t) const {
  const auto it = x.find(t);
  return it == x.end() ? Rational(0) : it->second;
}

Rational TripleDistribution::total() const {
  Rational s(0);
  for (const auto& [t, v] : x) s += v;
  return s;
}

Rational TripleDistribution::diagonal_sum() const {
  Rational s(0);
  for (const auto& [t, v] : x) {
    if (t.u == t.v && t.t == QuadComplex(1)) s += v;
  }
  return s;
}

TripleDistribution empirical_distribution(const GramMatrix& g, const InnerProductSet& A) {
  const std::size_t n = g.rows();
  for (std::size_t r = 0; r < n; ++r) {
    if (g(r, r) != QuadComplex(1)) throw std::invalid_argument("Gram matrix must have unit diagonal");
    for (std::size_t c = 0; c < n; ++c) {
      if (r != c && !A.contains(g(r, c))) {
        throw UnknownInnerProduct("Gram entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " + g(r, c).to_string() +
                                  " is not in A");
      }
    }
  }
  std::map<Triple, long> counts;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) ++counts[Triple{g(a, b), g(a, c), g(b, c)}];
    }
  }
  TripleDistribution out;
  out.order = static_cast<long>(n);
  for (const auto& [t, count] : counts) out.x.emplace(t, Rational(count, static_cast<long>(n)));
  return out;
}

std::vector<Rational> witness_assignment(const SdpProblem& problem, const TripleDistribution& dist) {
  std::vector<Rational> out;
  for (const SdpVariable& var : problem.variables) {
    const Rational value = dist.at(var.orbit.representative);
    for (const Triple& m : var.orbit.members) {
      if (dist.at(m) != value) throw std::logic_error("distribution is not constant on the orbit of " + var.label);
    }
    out.push_back(value);
  }
  return out;
}

std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

}  // namespace cscodes
