#pragma once

// Assembly of the three-point semidefinite program bounding the size of a
// complex spherical code X in C^d with A(X) contained in a conjugation-closed
// set A. Variables are the three-point distance distribution x(u,v,t),
// identified along the orbits of its six symmetry relations.

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "cscodes/lmi.hpp"
#include "cscodes/matrix.hpp"
#include "cscodes/quad_complex.hpp"
#include "cscodes/zonal.hpp"

namespace cscodes {

class InnerProductSet {
 public:
  InnerProductSet() = default;
  /// Sorts and deduplicates. Throws std::invalid_argument unless every value
  /// has |value| <= 1, value != 1, the set is closed under conjugation, and
  /// all values share one radicand.
  explicit InnerProductSet(std::vector<QuadComplex> values);

  static InnerProductSet parse(const std::vector<std::string>& values);

  const std::vector<QuadComplex>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool contains(const QuadComplex& x) const;
  /// Common square-free radicand, 0 when every value is real.
  const mpz_class& radicand() const { return radicand_; }
  std::vector<std::string> to_strings() const;

  friend bool operator==(const InnerProductSet&, const InnerProductSet&) = default;

 private:
  std::vector<QuadComplex> values_;
  mpz_class radicand_{0};
};

struct Triple {
  QuadComplex u;
  QuadComplex v;
  QuadComplex t;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple& a, const Triple& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    if (auto c = a.v <=> b.v; c != 0) return c;
    return a.t <=> b.t;
  }
  std::string to_string() const;
};

/// det [[1,u,v],[ubar,1,t],[vbar,tbar,1]] = 1 - |u|^2 - |v|^2 - |t|^2 + 2 Re(u vbar t), exactly.
Rational triple_determinant(const Triple& x);
/// Exact PSD test of the 3x3 Gram matrix of the triple.
bool is_psd_triple(const Triple& x);

/// x(u,v,t) = x(v,u,tbar) = x(tbar,vbar,ubar) = x(vbar,tbar,u) = x(ubar,t,v) = x(t,ubar,vbar).
std::array<Triple, 6> symmetry_images(const Triple& x);

/// The set D of triples in A^3 with PSD Gram matrix.
std::vector<Triple> valid_triples(const InnerProductSet& A);

enum class OrbitKind {
  Diagonal,  // members of D_0: (u,u,1), (u,1,ubar), (1,u,u) and conjugates
  Generic,   // members of D
};

struct TripleOrbit {
  Triple representative;  // lexicographic minimum of members
  std::vector<Triple> members;  // sorted
  OrbitKind kind = OrbitKind::Generic;
};

/// Partition of D into orbits of the six symmetry relations, sorted by representative.
std::vector<TripleOrbit> orbits(const InnerProductSet& A, const std::vector<Triple>& D);

/// One orbit per conjugate pair {u, ubar} of A, tying x(u,u,1), x(ubar,ubar,1),
/// x(u,1,ubar), x(ubar,1,u), x(1,u,u) and x(1,ubar,ubar).
std::vector<TripleOrbit> diagonal_orbits(const InnerProductSet& A);

struct SdpVariable {
  TripleOrbit orbit;
  /// Number of u in A with (u,u,1) in the orbit; the objective coefficient.
  Rational objective;
  std::string label;
};

/// One PSD constraint with exact Hermitian data.
struct ExactBlock {
  std::string label;
  int i = -1;  // zonal indices; -1 for the counting block
  int j = -1;
  DenseMatrix<QuadComplex> constant;
  std::vector<DenseMatrix<QuadComplex>> coefficients;  // one per variable

  bool is_real() const;
  bool is_zero() const;
};

/// g_{k,l}(1) + sum_var coefficient * x_var >= 0.
struct LpRow {
  int k = 0;
  int l = 0;
  Rational constant;
  std::vector<Rational> coefficients;
};

struct BuildOptions {
  /// Also emit the (j,i) zonal blocks for j > i; conjugate to (i,j) and redundant.
  bool include_transposed_blocks = false;
  /// Restrict D to triples with a PSD Gram matrix. With false every triple in
  /// A^3 gets a variable; the extra ones can only be zero on an actual code.
  bool psd_triples_only = true;
  int precision_bits = kDefaultAssemblyPrecisionBits;
  InnerDimension inner = InnerDimension::Reduced;
  /// Zonal blocks are assembled in parallel over (i,j).
  int workers = 1;
};

struct SdpProblem {
  int d = 2;
  InnerProductSet A;
  int p = 2;
  BuildOptions options;
  std::vector<SdpVariable> variables;  // diagonal orbits first, then D orbits
  std::vector<LpRow> lp_rows;
  ExactBlock counting_block;
  std::vector<ExactBlock> zonal_blocks;

  std::size_t num_variables() const { return variables.size(); }
  std::vector<Rational> objective() const;
};

/// Zonal block size for (i,j) at truncation p: floor((p - i - j)/2) + 1.
int zonal_block_size(int p, int i, int j);

/// Throws std::domain_error for d < 2 or p < 2.
SdpProblem build_problem(int d, const InnerProductSet& A, int p, const BuildOptions& options = {});

/// Floating-point form for the solver. LP rows and x >= 0 become one diagonal
/// block, real-valued Hermitian blocks keep size m and complex ones are
/// realified to 2m. Every block is scaled by a positive constant so that its
/// largest entry has magnitude 1; identically zero blocks are dropped.
LmiProblem lower(const SdpProblem& problem);

/// Row-major decimal strings of the lowered (unscaled) block, at the given
/// number of significant digits, through MPFR at `precision_bits`.
std::vector<std::string> lowered_decimal_entries(const DenseMatrix<QuadComplex>& h, bool realify_complex,
                                                 int precision_bits, int significant_digits);

}  // namespace cscodes
