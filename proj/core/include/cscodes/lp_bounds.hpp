#pragma once

// Linear-programming bounds for spherical s-distance sets in S^{d-1}: if
// F = sum_k f_k G_k^d with f_0 > 0, f_k >= 0 and F(a) <= 0 on A(X), then
// |X| <= F(1)/f_0. Closed forms below are the bounds of specific F.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cscodes/polynomial.hpp"
#include "cscodes/report.hpp"

namespace cscodes {

struct RealDistanceSpec {
  int d = 2;
  std::vector<Rational> inner_products;
  /// Throws std::invalid_argument unless d >= 2 and values are distinct in [-1, 1).
  void validate() const;
};

/// Every check is exact; on failure the report carries no bound.
BoundReport lp_bound(const RealPolynomial& F, int d, const std::vector<Rational>& A);

/// x^2 (x + a)(x - a).
RealPolynomial hadamard_deg4_polynomial(const Rational& alpha);
/// x^2 (x + a)(x - a)((d + 8)(x^2 + a^2) - 15).
RealPolynomial hadamard_deg6_polynomial(int d, const Rational& alpha);
/// (x - a)(x - b)(x - c).
RealPolynomial three_distance_polynomial(const Rational& a, const Rational& b, const Rational& c);
/// (x - a)(x - b)(x - ab)(((2ab - 1)(a + b + 1) + 3) x + (2a^2b^2 + 2ab + 3a + 3b)).
RealPolynomial qscheme_polynomial(const Rational& a, const Rational& b);

/// A(X) = {+-a, 0}; bound d(d+2)(1-a^2)/(3-(d+2)a^2), derived f = floor(bound/d).
/// Throws std::domain_error unless 0 < a < 1 and d >= 2.
BoundReport hadamard_bound_deg4(int d, const Rational& alpha);
/// A(X) = {+-a, 0}; degree-6 closed form, derived f = floor(bound/d).
BoundReport hadamard_bound_deg6(int d, const Rational& alpha);
/// A(X) = {a, b, c}; bound d(1-a)(1-b)(1-c)/(-(a+b+c+dabc)); derived
/// w = floor(bound/v) when a fiber size v is given.
BoundReport three_distance_bound(int d, const Rational& a, const Rational& b, const Rational& c,
                                 std::optional<long> fiber = std::nullopt);
/// A(X) = {a, b, ab} with d = -1/(ab). Throws std::domain_error when -1/(ab)
/// is not a positive integer.
BoundReport qscheme_bound(const Rational& a, const Rational& b, std::optional<long> fiber = std::nullopt);
int qscheme_dimension(const Rational& a, const Rational& b);

inline constexpr const char* kExternalColumn = "external, out of scope";
inline constexpr const char* kConditionsFail = "conditions fail";

struct HadamardRow {
  int d = 0;
  int l = 0;
  int a = 0;
  std::string previous_bound;
  BoundReport deg4;
  BoundReport deg6;

  friend bool operator==(const HadamardRow&, const HadamardRow&) = default;
};

struct QSchemeRow {
  long v = 0;
  long k = 0;
  long lambda = 0;
  int m1 = 0;
  std::vector<Rational> inner_products;  // relation order of the embedding
  std::string known_bound;
  BoundReport three_distance;
  BoundReport qscheme;

  friend bool operator==(const QSchemeRow&, const QSchemeRow&) = default;
};

/// Quasi-unbiased Hadamard parameter rows (d, l, a) with a = d^2/l and alpha = 1/sqrt(l).
std::vector<HadamardRow> hadamard_table(int workers = 1);
/// Q-antipodal rows; inner products come from embedding each scheme.
std::vector<QSchemeRow> qscheme_table(int workers = 1);

/// "f <= N", "w <= N" or the conditions-fail marker.
std::string table_cell(const BoundReport& report);

nlohmann::json hadamard_table_json(const std::vector<HadamardRow>& rows);
nlohmann::json qscheme_table_json(const std::vector<QSchemeRow>& rows);
std::string hadamard_table_text(const std::vector<HadamardRow>& rows);
std::string qscheme_table_text(const std::vector<QSchemeRow>& rows);

}  // namespace cscodes
