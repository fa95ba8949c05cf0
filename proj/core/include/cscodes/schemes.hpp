#pragma once

// Commutative association schemes given by their eigenmatrices, and the
// code obtained from a primitive idempotent: G = |X|/m_i E_i is the Gram
// matrix of |X| unit vectors in C^{m_i} whose inner product on relation j is
// Q[j][i]/m_i.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cscodes/matrix.hpp"
#include "cscodes/quad_complex.hpp"

namespace cscodes {

class RepeatedRows : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Expected outcome recorded with a fixture.
struct FixtureExpectation {
  int k = 0;
  int l = 0;
  Rational value;
  bool negative = false;
};

struct SchemeSpec {
  std::string name;
  std::string description;
  long order = 0;                    // |X|
  DenseMatrix<QuadComplex> P;        // first eigenmatrix, row 0 = valencies
  DenseMatrix<QuadComplex> Q;        // second eigenmatrix, row 0 = multiplicities
  int embedding_column = 1;          // idempotent used by default
  std::optional<FixtureExpectation> expected;

  int n_classes() const { return static_cast<int>(P.rows()) - 1; }
  std::vector<long> valencies() const;
  std::vector<long> multiplicities() const;

  /// Throws std::invalid_argument unless P and Q are square of one size,
  /// column 0 of each is all ones, row 0 entries are positive integers
  /// summing to |X|, and P Q = |X| I exactly.
  void validate() const;
};

SchemeSpec scheme_from_json(const nlohmann::json& doc);
nlohmann::json scheme_to_json(const SchemeSpec& scheme);

/// Fixtures compiled into the library, sorted by name.
std::vector<std::string> builtin_fixture_names();
/// Throws std::invalid_argument for unknown names.
SchemeSpec builtin_fixture(std::string_view name);
/// A JSON file holding one scheme object or an array of them.
std::vector<SchemeSpec> load_fixture_file(const std::string& path);

/// Q-antipodal Q-polynomial 3-class scheme from a symmetric (v,k,lambda)
/// design and w fibers, |X| = v w. Throws std::domain_error unless k - lambda,
/// (v-1)(v-k)/k and (v-1)k/(v-k) are rational squares and w >= 2.
SchemeSpec q_antipodal_scheme(long v, long k, long lambda, long w);

/// The 1-class scheme on n points.
SchemeSpec simplex_scheme(long n);

struct CodeEmbedding {
  int d = 0;                               // m_i, the rank of E_i
  long order = 0;
  std::vector<QuadComplex> inner_products;  // relation j = 1..n
  std::vector<long> valencies;              // k_j, same order
};

/// Throws RepeatedRows when two relations share an inner product, and
/// std::out_of_range for a bad column.
CodeEmbedding embed(const SchemeSpec& scheme, int column);

/// g_{k,l}^d(1) + sum_j k_j g_{k,l}^d(alpha_j), i.e. (1/|X|) sum over ordered
/// pairs. A negative value rules out the scheme.
Rational positivity_check(const CodeEmbedding& emb, int k, int l);

enum class Verdict { Nonnegative, Negative };
std::string to_string(Verdict v);

struct ScanEntry {
  int k = 0;
  int l = 0;
  Rational value;
  Verdict verdict = Verdict::Nonnegative;
};

/// Every (k,l) with k + l <= p, ordered by degree then k.
std::vector<ScanEntry> nonexistence_scan(const CodeEmbedding& emb, int p, int workers = 1);

}  // namespace cscodes
