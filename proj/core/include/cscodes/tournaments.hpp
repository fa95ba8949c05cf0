#pragma once

// Complex 2-codes with A(X) = {gamma, conj(gamma)}: their Gram matrices are
// I + gamma A + conj(gamma) A^T for a tournament A. Skew-symmetric
// supplementary difference sets give such tournaments of order 2d.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cscodes/matrix.hpp"
#include "cscodes/quad_complex.hpp"
#include "cscodes/sdp_model.hpp"

namespace cscodes {

class NotSds : public std::invalid_argument {
 public:
  NotSds(const std::string& what, int index) : std::invalid_argument(what), index_(index) {}
  /// First difference i in 1..d-1 whose count differs from the count at 1.
  int index() const { return index_; }

 private:
  int index_;
};

class UnknownInnerProduct : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using IntMatrix = DenseMatrix<int>;
using GramMatrix = DenseMatrix<QuadComplex>;

struct Tournament {
  IntMatrix adjacency;

  int order() const { return static_cast<int>(adjacency.rows()); }
  /// Throws std::invalid_argument unless A + A^T = J - I with 0/1 entries.
  void validate() const;
  /// A - A^T.
  IntMatrix skew() const;
};

/// A tournament with A - A^T = S for a skew-symmetric 0/+-1 matrix S with zero diagonal.
Tournament tournament_from_skew(const IntMatrix& S);

struct SdsPair {
  int d = 0;
  std::vector<int> X1;
  std::vector<int> X2;
  int lambda = 0;

  /// R1 + R1^T = 2I: 0 is not in X1 and exactly one of i, -i is, for i != 0.
  bool skew_symmetric() const;
  int n_prime() const { return static_cast<int>(X1.size() + X2.size()) - lambda; }
};

/// P_X(i) = #{(x, y) in X^2 : y - x = i mod d}.
int difference_count(int d, const std::vector<int>& X, int i);

/// The common value lambda of P_X1(i) + P_X2(i) over i = 1..d-1. Throws
/// NotSds at the first index that differs, std::invalid_argument for
/// elements outside Z_d.
int sds_verify(int d, const std::vector<int>& X1, const std::vector<int>& X2);
SdsPair make_sds(int d, std::vector<int> X1, std::vector<int> X2);

/// Every skew-symmetric SDS with odd 3 <= d <= max_d, in lexicographic order.
std::vector<SdsPair> find_skew_sds(int max_d, int workers = 1);

/// Circulant +-1 matrix with R[a][b] = -1 iff (b - a) mod d lies in X.
IntMatrix circulant(int d, const std::vector<int>& X);

struct SdsCode {
  Tournament tournament;  // order 2d
  IntMatrix S;            // [[R1 - I, R2], [-R2^T, R1^T - I]]
  int k = 0;              // 4 n' - 1
  std::array<QuadComplex, 2> inner_products;  // (d - 2n' +- sqrt(-k))/(d + 2n' - 1), positive imaginary part first
  bool d_optimal = false;  // k = 2d - 3
};

/// Throws std::invalid_argument for a non-skew pair and std::logic_error if
/// a matrix identity fails.
SdsCode sds_to_code(const SdsPair& pair);

/// I + gamma A + conj(gamma) A^T.
GramMatrix gram_from_tournament(const Tournament& t, const QuadComplex& gamma);

/// For (i(A - A^T))^2 = [[(a-1)I + bJ, 0], [0, (a-1)I + bJ]] (blocks of size
/// n/2 in the given vertex order), returns the Gram matrix
/// I + 2 sqrt(a-1) i/(2a+b-2) (A - A^T) + b/(2a+b-2) (J - I).
/// Throws std::invalid_argument when the square lacks that form.
GramMatrix gram_spectral(const Tournament& t);

/// Brute-force search over tournaments of order n <= 7 with
/// (I + A - A^T)(I + A - A^T)^T = nI.
std::optional<Tournament> find_skew_hadamard_tournament(int n);
bool is_skew_hadamard(const Tournament& t);

/// Numeric rank with threshold rel_tol * max |eigenvalue|.
int numeric_rank(const GramMatrix& g, double rel_tol = 1e-8);
double min_eigenvalue(const GramMatrix& g);

/// (18d^3 - 48d^2 + 24d + 4)/(3d^3 - 6d^2 - 6d + 8). Throws std::domain_error for d < 5.
Rational twocode_bound_analytic(int d);

struct TripleDistribution {
  long order = 0;
  std::map<Triple, Rational> x;  // count / |X|, nonzero entries only

  Rational at(const Triple& t) const;
  Rational total() const;         // |X|^2
  Rational diagonal_sum() const;  // sum over (u,u,1) including u = 1, i.e. |X|
};

/// Throws UnknownInnerProduct when an off-diagonal Gram entry is not in A.
TripleDistribution empirical_distribution(const GramMatrix& g, const InnerProductSet& A);

/// Feasible point of `problem` read off a code's distribution. Throws
/// std::logic_error when members of one orbit carry different values.
std::vector<Rational> witness_assignment(const SdpProblem& problem, const TripleDistribution& dist);
std::vector<double> to_doubles(const std::vector<Rational>& v);

}  // namespace cscodes
