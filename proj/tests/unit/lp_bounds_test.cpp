#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cscodes/harmonics.hpp"
#include "cscodes/lp_bounds.hpp"

using namespace cscodes;

namespace {

const Precondition* find_condition(const BoundReport& r, const std::string& text) {
  for (const auto& p : r.preconditions) {
    if (p.condition == text) return &p;
  }
  return nullptr;
}

long derived(const BoundReport& r) {
  REQUIRE(r.derived.has_value());
  return r.derived->value.get_si();
}

std::vector<Rational> pad(std::vector<Rational> f, std::size_t n) {
  f.resize(std::max(f.size(), n), Rational(0));
  return f;
}

// Pairs (alpha, d) covering 20 dimensions, with every Hadamard table row.
std::vector<std::pair<int, Rational>> hadamard_samples() {
  std::vector<std::pair<int, Rational>> out = {{16, Rational(1, 2)}, {24, Rational(1, 2)}, {24, Rational(1, 3)},
                                               {32, Rational(1, 2)}, {36, Rational(1, 3)}, {40, Rational(1, 2)},
                                               {40, Rational(1, 5)}, {48, Rational(1, 2)}, {48, Rational(1, 3)},
                                               {48, Rational(1, 4)}, {48, Rational(1, 6)}};
  const int extra[] = {2, 3, 5, 7, 9, 12, 20, 28, 60, 64, 100, 250, 1000, 4096};
  long n = 2;
  for (int d : extra) out.emplace_back(d, Rational(1, ++n));
  return out;
}

}  // namespace

TEST_CASE("lp_bound examples") {
  const Rational third(1, 3);
  const BoundReport r = lp_bound(hadamard_deg4_polynomial(third), 24, {-third, Rational(0), third});
  REQUIRE(r.preconditions_hold());
  CHECK(*r.exact_value == Rational(4992));
  CHECK(Rational(24 * 26) * Rational(8, 9) / Rational(1, 9) == Rational(4992));

  const BoundReport one = lp_bound(RealPolynomial::constant(1), 7, {});
  REQUIRE(one.exact_value.has_value());
  CHECK(*one.exact_value == Rational(1));

  const Rational half(1, 2);
  const BoundReport fail = lp_bound(hadamard_deg4_polynomial(half), 16, {-half, Rational(0), half});
  CHECK_FALSE(fail.preconditions_hold());
  CHECK_FALSE(fail.exact_value.has_value());
  CHECK_FALSE(fail.derived.has_value());
  const Precondition* f0 = find_condition(fail, "f_0 > 0");
  REQUIRE(f0 != nullptr);
  CHECK_FALSE(f0->pass);

  const BoundReport blank = hadamard_bound_deg4(16, half);
  const Precondition* c = find_condition(blank, "(d+2)alpha^2 < 3");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
  CHECK(c->evaluation == "9/2 < 3");
  CHECK_FALSE(blank.exact_value.has_value());

  CHECK_THROWS_AS(lp_bound(RealPolynomial::constant(1), 5, {Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(lp_bound(RealPolynomial::constant(1), 5, {half, half}), std::invalid_argument);
}

TEST_CASE("degree-4 and degree-6 Hadamard examples") {
  CHECK(derived(hadamard_bound_deg4(24, Rational(1, 3))) == 208);
  CHECK(derived(hadamard_bound_deg4(40, Rational(1, 5))) == 30);
  CHECK(derived(hadamard_bound_deg4(48, Rational(1, 6))) == 30);

  const BoundReport r16 = hadamard_bound_deg6(16, Rational(1, 2));
  REQUIRE(r16.exact_value.has_value());
  CHECK(*r16.exact_value == Rational(240));
  CHECK(Rational(16 * 20) * Rational(3, 4) * Rational(-15) / Rational(-15) == Rational(240));
  CHECK(derived(r16) == 15);
  CHECK(derived(hadamard_bound_deg6(36, Rational(1, 3))) == 80);
  CHECK(derived(hadamard_bound_deg6(48, Rational(1, 3))) == 105);
  CHECK(r16.float_value.has_value());
  CHECK(*r16.float_value == 240.0);

  CHECK_THROWS_AS(hadamard_bound_deg4(16, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(hadamard_bound_deg6(16, Rational(1)), std::domain_error);
}

TEST_CASE("three-distance examples") {
  const BoundReport r = three_distance_bound(44, Rational(1, 11), Rational(-1, 44), Rational(-1, 4), 45);
  REQUIRE(r.exact_value.has_value());
  CHECK(*r.exact_value == Rational(2250, 7));
  CHECK(derived(r) == 7);
  // d(1-a)(1-b)(1-c) / -(a+b+c+dabc) by hand.
  const Rational a(1, 11), b(-1, 44), c(-1, 4);
  CHECK(Rational(44) * (1 - a) * (1 - b) * (1 - c) / -(a + b + c + Rational(44) * a * b * c) == Rational(2250, 7));
  CHECK(derived(three_distance_bound(63, Rational(1, 9), Rational(-1, 63), Rational(-1, 7), 64)) == 32);
  CHECK(derived(three_distance_bound(143, Rational(1, 13), Rational(-1, 143), Rational(-1, 11), 144)) == 72);
  CHECK_FALSE(three_distance_bound(44, a, b, c).derived.has_value());
}

TEST_CASE("Q-scheme examples") {
  CHECK(qscheme_dimension(Rational(-1, 7), Rational(1, 5)) == 35);
  CHECK(derived(qscheme_bound(Rational(-1, 7), Rational(1, 5), 36)) == 20);
  CHECK(derived(qscheme_bound(Rational(-1, 11), Rational(1, 9), 100)) == 52);
  CHECK(qscheme_dimension(Rational(-1, 16), Rational(2, 19)) == 152);
  CHECK(derived(qscheme_bound(Rational(-1, 16), Rational(2, 19), 153)) == 99);
  CHECK_THROWS_AS(qscheme_dimension(Rational(-1, 3), Rational(2, 5)), std::domain_error);
  CHECK_THROWS_AS(qscheme_bound(Rational(-1, 3), Rational(2, 5)), std::domain_error);
  CHECK_THROWS_AS(qscheme_dimension(Rational(1, 3), Rational(2, 5)), std::domain_error);
}

TEST_CASE("the Hadamard table matches the expected cells") {
  // (d, l) -> (deg4 cell, deg6 cell); empty means the conditions fail.
  const std::map<std::pair<int, int>, std::pair<std::string, std::string>> want = {
      {{16, 4}, {"", "f <= 15"}},  {{24, 4}, {"", "f <= 27"}},  {{24, 9}, {"f <= 208", ""}}, {{32, 4}, {"", "f <= 63"}},
      {{36, 9}, {"", "f <= 80"}},  {{40, 4}, {"", ""}},         {{40, 25}, {"f <= 30", ""}}, {{48, 4}, {"", ""}},
      {{48, 9}, {"", "f <= 105"}}, {{48, 16}, {"", ""}},        {{48, 36}, {"f <= 30", ""}}};
  auto cell = [](const std::string& s) { return s.empty() ? std::string(kConditionsFail) : s; };
  const auto rows = hadamard_table();
  REQUIRE(rows.size() == want.size());
  for (const auto& r : rows) {
    CAPTURE(r.d);
    CAPTURE(r.l);
    const auto& w = want.at({r.d, r.l});
    CHECK(r.a * r.l == r.d * r.d);
    CHECK(table_cell(r.deg4) == cell(w.first));
    CHECK(table_cell(r.deg6) == cell(w.second));
    // Blank iff an exact precondition fails.
    CHECK(w.first.empty() == !r.deg4.preconditions_hold());
    CHECK(w.second.empty() == !r.deg6.preconditions_hold());
  }
  CHECK(hadamard_table(4) == rows);
  const auto doc = hadamard_table_json(rows);
  CHECK(doc["rows"][0]["sdp"] == kExternalColumn);
  CHECK(hadamard_table_text(rows).find("(40,4,400)") != std::string::npos);
}

TEST_CASE("the Q-scheme table matches the expected cells") {
  struct Want {
    long v;
    int m1;
    std::set<Rational> A;
    std::string threedist, qscheme;
  };
  const std::vector<Want> want = {
      {36, 35, {Rational(1, 5), Rational(-1, 35), Rational(-1, 7)}, "", "w <= 20"},
      {45, 44, {Rational(1, 11), Rational(-1, 44), Rational(-1, 4)}, "w <= 7", ""},
      {64, 63, {Rational(1, 9), Rational(-1, 63), Rational(-1, 7)}, "w <= 32", ""},
      {96, 95, {Rational(1, 19), Rational(-1, 95), Rational(-1, 5)}, "w <= 7", ""},
      {100, 99, {Rational(1, 9), Rational(-1, 99), Rational(-1, 11)}, "", "w <= 52"},
      {144, 143, {Rational(1, 13), Rational(-1, 143), Rational(-1, 11)}, "w <= 72", ""},
      {153, 152, {Rational(2, 19), Rational(-1, 152), Rational(-1, 16)}, "", "w <= 99"}};
  auto cell = [](const std::string& s) { return s.empty() ? std::string(kConditionsFail) : s; };
  const auto rows = qscheme_table();
  REQUIRE(rows.size() == want.size());
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const auto& r = rows[n];
    CAPTURE(r.v);
    CHECK(r.v == want[n].v);
    CHECK(r.m1 == want[n].m1);
    CHECK(std::set<Rational>(r.inner_products.begin(), r.inner_products.end()) == want[n].A);
    CHECK(table_cell(r.three_distance) == cell(want[n].threedist));
    CHECK(table_cell(r.qscheme) == cell(want[n].qscheme));
    CHECK(want[n].threedist.empty() == !r.three_distance.preconditions_hold());
    CHECK(want[n].qscheme.empty() == !r.qscheme.preconditions_hold());
  }
  CHECK(qscheme_table(3) == rows);
  CHECK(qscheme_table_json(rows)["rows"].size() == rows.size());
}

TEST_CASE("degree-4 Gegenbauer coefficients match the closed forms") {
  for (const auto& [d, a] : hadamard_samples()) {
    CAPTURE(d);
    const Rational D(d), a2 = a * a;
    const auto f = pad(gegenbauer_expand(hadamard_deg4_polynomial(a), d), 5);
    CHECK(f.size() == 5);
    CHECK(f[4] == (D - 1) * (D + 1) / ((D + 2) * (D + 4)));
    CHECK(f[3] == Rational(0));
    CHECK(f[2] == (D - 1) / (D * (D + 4)) * (6 - (D + 4) * a2));
    CHECK(f[1] == Rational(0));
    CHECK(f[0] == (3 - (D + 2) * a2) / (D * (D + 2)));
  }
}

TEST_CASE("degree-6 Gegenbauer coefficients match the closed forms") {
  for (const auto& [d, a] : hadamard_samples()) {
    CAPTURE(d);
    const Rational D(d), a2 = a * a, a4 = a2 * a2;
    const auto f = pad(gegenbauer_expand(hadamard_deg6_polynomial(d, a), d), 7);
    CHECK(f.size() == 7);
    CHECK(f[6] == (D - 1) * (D + 1) * (D + 3) / ((D + 4) * (D + 6)));
    CHECK(f[5] == Rational(0));
    CHECK(f[4] == Rational(0));
    CHECK(f[3] == Rational(0));
    CHECK(f[2] == -(D - 1) / (D * (D + 6)) * ((D + 6) * (D + 8) * a4 - 15 * (D + 6) * a2 + 45));
    CHECK(f[1] == Rational(0));
    CHECK(f[0] == -Rational(1) / (D * (D + 4)) * ((D + 4) * (D + 8) * a4 - 15 * (D + 4) * a2 + 30));
  }
}

TEST_CASE("Q-scheme Gegenbauer coefficients match the closed forms") {
  std::vector<std::pair<Rational, Rational>> pairs = {
      {Rational(-1, 7), Rational(1, 5)}, {Rational(-1, 11), Rational(1, 9)}, {Rational(-1, 16), Rational(2, 19)}};
  for (long n = 2; n <= 20; ++n) {
    if (n != 5 && n != 9) pairs.emplace_back(Rational(-1, n + 2), Rational(1, n));
  }
  std::set<int> dims;
  for (const auto& [a, b] : pairs) {
    const int d = qscheme_dimension(a, b);
    dims.insert(d);
    CAPTURE(d);
    const Rational ab = a * b, one(1);
    const auto f = pad(gegenbauer_expand(qscheme_polynomial(a, b), d), 5);
    CHECK(f.size() == 5);
    const Rational lead = (2 * ab - 1) * (a + b + 1) + 3;
    CHECK(f[4] == (1 + ab) * (1 - ab) * lead / ((1 - 2 * ab) * (1 - 4 * ab)));
    CHECK(f[3] == (1 + a) * (1 + b) * (1 + ab) * (a + b));
    const Rational ab2 = ab * ab, ab3 = ab2 * ab;
    CHECK(f[2] == (1 + ab) / (1 - 4 * ab) *
                      ((a * a + ab + b * b + a + b - 1) * (-8 * ab3 + 6 * ab2 + 11 * ab) - (4 * ab3 + 3 * ab2 + 5 * ab) -
                       9 * ab * (a + b) - 3 * (a * a + b * b)));
    CHECK(f[1] == Rational(0));
    CHECK(f[0] == ab * (1 + ab) / (1 - 2 * ab) *
                      ((a * a + 2 * ab + b * b + a + b + 1) * (4 * ab2 - 8 * ab) + 6 * ab * (a + b + 3) + 3 * (a * a + b * b)));
  }
  CHECK(dims.size() == 20);
  CHECK(dims.count(35) == 1);
  CHECK(dims.count(99) == 1);
  CHECK(dims.count(152) == 1);
}

TEST_CASE("closed forms agree with lp_bound on the constructed polynomial") {
  int compared = 0;
  for (const auto& [d, a] : hadamard_samples()) {
    const std::vector<Rational> A = {-a, Rational(0), a};
    const BoundReport c4 = hadamard_bound_deg4(d, a), l4 = lp_bound(hadamard_deg4_polynomial(a), d, A);
    if (c4.preconditions_hold() && l4.preconditions_hold()) {
      CHECK(*c4.exact_value == *l4.exact_value);
      ++compared;
    }
    // A passing closed form always has a valid LP certificate behind it.
    if (c4.preconditions_hold()) CHECK(l4.preconditions_hold());
    const BoundReport c6 = hadamard_bound_deg6(d, a), l6 = lp_bound(hadamard_deg6_polynomial(d, a), d, A);
    if (c6.preconditions_hold()) {
      REQUIRE(l6.preconditions_hold());
      CHECK(*c6.exact_value == *l6.exact_value);
      ++compared;
    }
  }
  for (const auto& row : qscheme_table()) {
    const auto& A = row.inner_products;
    const BoundReport l3 = lp_bound(three_distance_polynomial(A[0], A[1], A[2]), row.m1, A);
    if (row.three_distance.preconditions_hold()) {
      REQUIRE(l3.preconditions_hold());
      CHECK(*row.three_distance.exact_value == *l3.exact_value);
      ++compared;
    }
    const Rational a = *std::min_element(A.begin(), A.end()), b = *std::max_element(A.begin(), A.end());
    const BoundReport lq = lp_bound(qscheme_polynomial(a, b), row.m1, A);
    if (row.qscheme.preconditions_hold()) {
      REQUIRE(lq.preconditions_hold());
      CHECK(*row.qscheme.exact_value == *lq.exact_value);
      ++compared;
    }
  }
  CHECK(compared >= 12);
}

TEST_CASE("real distance specs are validated") {
  CHECK_NOTHROW((RealDistanceSpec{3, {Rational(-1), Rational(0)}}.validate()));
  CHECK_THROWS_AS((RealDistanceSpec{1, {}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((RealDistanceSpec{3, {Rational(1)}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((RealDistanceSpec{3, {Rational(1, 2), Rational(1, 2)}}.validate()), std::invalid_argument);
}

TEST_CASE("reports round-trip through JSON") {
  for (const BoundReport& r : {hadamard_bound_deg4(24, Rational(1, 3)), hadamard_bound_deg6(40, Rational(1, 2)),
                               qscheme_bound(Rational(-1, 7), Rational(1, 5), 36)}) {
    const auto doc = report_to_json(r);
    CHECK(report_from_json(nlohmann::json::parse(doc.dump())) == r);
    CHECK_FALSE(report_to_text(r).empty());
  }
  CHECK_THROWS_AS(report_from_json(nlohmann::json::parse("[1, 2]")), std::invalid_argument);
}
