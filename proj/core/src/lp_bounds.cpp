#include "cscodes/lp_bounds.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cscodes/harmonics.hpp"
#include "cscodes/parallel.hpp"
#include "cscodes/schemes.hpp"

namespace cscodes {

namespace {

using nlohmann::json;

std::string cmp_text(const Rational& lhs, const char* op, const Rational& rhs) {
  return lhs.to_string() + " " + op + " " + rhs.to_string();
}

void require_unit_interval(const Rational& alpha) {
  if (alpha.sign() <= 0 || alpha >= Rational(1)) throw std::domain_error("alpha must lie in (0, 1)");
}

RealPolynomial x_power(int k) { return RealPolynomial::monomial(k); }

std::string fiber_name(long v) { return "v=" + std::to_string(v); }

}  // namespace

void RealDistanceSpec::validate() const {
  if (d < 2) throw std::invalid_argument("real distance set needs d >= 2");
  std::set<Rational> seen;
  for (const Rational& a : inner_products) {
    if (a < Rational(-1) || a >= Rational(1)) throw std::invalid_argument("inner product " + a.to_string() + " outside [-1, 1)");
    if (!seen.insert(a).second) throw std::invalid_argument("inner product " + a.to_string() + " repeated");
  }
}

BoundReport lp_bound(const RealPolynomial& F, int d, const std::vector<Rational>& A) {
  RealDistanceSpec{d, A}.validate();
  BoundReport r;
  r.method = "lp";
  r.parameters = {{"d", std::to_string(d)}, {"F", F.to_string()}};
  std::string a_text;
  for (const auto& a : A) a_text += (a_text.empty() ? "" : ", ") + a.to_string();
  r.parameters.emplace_back("A", "{" + a_text + "}");

  const std::vector<Rational> f = gegenbauer_expand(F, d);
  const Rational f0 = f.empty() ? Rational(0) : f[0];
  r.require("f_0 > 0", "f_0 = " + f0.to_string(), f0.sign() > 0);
  for (std::size_t k = 1; k < f.size(); ++k) {
    r.require("f_" + std::to_string(k) + " >= 0", "f_" + std::to_string(k) + " = " + f[k].to_string(), f[k].sign() >= 0);
  }
  for (const Rational& a : A) {
    const Rational v = F(a);
    r.require("F(" + a.to_string() + ") <= 0", "F(" + a.to_string() + ") = " + v.to_string(), v.sign() <= 0);
  }
  if (r.preconditions_hold()) r.set_bound(F(Rational(1)) / f0);
  return r;
}

RealPolynomial hadamard_deg4_polynomial(const Rational& alpha) {
  return x_power(2) * RealPolynomial::linear_factor(-alpha) * RealPolynomial::linear_factor(alpha);
}

RealPolynomial hadamard_deg6_polynomial(int d, const Rational& alpha) {
  const Rational c(d + 8);
  const RealPolynomial last({c * alpha * alpha - Rational(15), Rational(0), c});
  return hadamard_deg4_polynomial(alpha) * last;
}

RealPolynomial three_distance_polynomial(const Rational& a, const Rational& b, const Rational& c) {
  return RealPolynomial::linear_factor(a) * RealPolynomial::linear_factor(b) * RealPolynomial::linear_factor(c);
}

RealPolynomial qscheme_polynomial(const Rational& a, const Rational& b) {
  const Rational ab = a * b;
  const Rational lead = (Rational(2) * ab - Rational(1)) * (a + b + Rational(1)) + Rational(3);
  const Rational constant = Rational(2) * ab * ab + Rational(2) * ab + Rational(3) * a + Rational(3) * b;
  return three_distance_polynomial(a, b, ab) * RealPolynomial({constant, lead});
}

BoundReport hadamard_bound_deg4(int d, const Rational& alpha) {
  require_unit_interval(alpha);
  if (d < 2) throw std::domain_error("hadamard_bound_deg4 needs d >= 2");
  const Rational D(d), a2 = alpha * alpha;
  BoundReport r;
  r.method = "deg4";
  r.parameters = {{"d", std::to_string(d)}, {"alpha", alpha.to_string()}};
  const Rational c1 = (D + Rational(4)) * a2;
  const Rational c2 = (D + Rational(2)) * a2;
  r.require("(d+4)alpha^2 <= 6", cmp_text(c1, "<=", Rational(6)), c1 <= Rational(6));
  r.require("(d+2)alpha^2 < 3", cmp_text(c2, "<", Rational(3)), c2 < Rational(3));
  if (r.preconditions_hold()) {
    r.set_bound(D * (D + Rational(2)) * (Rational(1) - a2) / (Rational(3) - c2), "f", "d", d);
  }
  return r;
}

BoundReport hadamard_bound_deg6(int d, const Rational& alpha) {
  require_unit_interval(alpha);
  if (d < 2) throw std::domain_error("hadamard_bound_deg6 needs d >= 2");
  const Rational D(d), a2 = alpha * alpha, a4 = a2 * a2;
  BoundReport r;
  r.method = "deg6";
  r.parameters = {{"d", std::to_string(d)}, {"alpha", alpha.to_string()}};
  const Rational c1 = (D + Rational(6)) * (D + Rational(8)) * a4 - Rational(15) * (D + Rational(6)) * a2 + Rational(45);
  const Rational c2 = (D + Rational(4)) * (D + Rational(8)) * a4 - Rational(15) * (D + Rational(4)) * a2 + Rational(30);
  r.require("(d+6)(d+8)alpha^4 - 15(d+6)alpha^2 + 45 <= 0", cmp_text(c1, "<=", Rational(0)), c1.sign() <= 0);
  r.require("(d+4)(d+8)alpha^4 - 15(d+4)alpha^2 + 30 < 0", cmp_text(c2, "<", Rational(0)), c2.sign() < 0);
  if (r.preconditions_hold()) {
    const Rational num = D * (D + Rational(4)) * (Rational(1) - a2) * (Rational(15) - (D + Rational(8)) * (Rational(1) + a2));
    r.set_bound(num / c2, "f", "d", d);
  }
  return r;
}

BoundReport three_distance_bound(int d, const Rational& a, const Rational& b, const Rational& c, std::optional<long> fiber) {
  RealDistanceSpec{d, {a, b, c}}.validate();
  for (const Rational& x : {a, b, c}) {
    if (x <= Rational(-1)) throw std::domain_error("three_distance_bound needs values in (-1, 1)");
  }
  const Rational D(d);
  BoundReport r;
  r.method = "threedist";
  r.parameters = {{"d", std::to_string(d)}, {"alpha", a.to_string()}, {"beta", b.to_string()}, {"gamma", c.to_string()}};
  if (fiber) r.parameters.emplace_back("v", std::to_string(*fiber));
  const Rational e1 = a + b + c;
  const Rational e2 = a * b + b * c + c * a;
  const Rational e3 = a * b * c;
  const Rational lower = Rational(-3) / (D + Rational(2));
  const Rational s = e1 + D * e3;
  r.require("alpha+beta+gamma <= 0", cmp_text(e1, "<=", Rational(0)), e1.sign() <= 0);
  r.require("alpha beta + beta gamma + gamma alpha >= -3/(d+2)", cmp_text(e2, ">=", lower), e2 >= lower);
  r.require("alpha+beta+gamma + d alpha beta gamma < 0", cmp_text(s, "<", Rational(0)), s.sign() < 0);
  if (r.preconditions_hold()) {
    const Rational bound = D * (Rational(1) - a) * (Rational(1) - b) * (Rational(1) - c) / (-s);
    if (fiber) {
      r.set_bound(bound, "w", fiber_name(*fiber), *fiber);
    } else {
      r.set_bound(bound);
    }
  }
  return r;
}

int qscheme_dimension(const Rational& a, const Rational& b) {
  const Rational ab = a * b;
  if (ab.is_zero()) throw std::domain_error("qscheme needs alpha beta != 0");
  const Rational d = Rational(-1) / ab;
  if (!d.is_integer() || d.sign() <= 0) throw std::domain_error("d = -1/(alpha beta) = " + d.to_string() + " is not a positive integer");
  return static_cast<int>(d.numerator().get_si());
}

BoundReport qscheme_bound(const Rational& a, const Rational& b, std::optional<long> fiber) {
  const int d = qscheme_dimension(a, b);
  const Rational one(1), ab = a * b, a2 = a * a, b2 = b * b;
  BoundReport r;
  r.method = "qscheme";
  r.parameters = {{"alpha", a.to_string()}, {"beta", b.to_string()}, {"d", std::to_string(d)}};
  if (fiber) r.parameters.emplace_back("v", std::to_string(*fiber));
  r.require("-1 < alpha < 0", "alpha = " + a.to_string(), a > Rational(-1) && a.sign() < 0);
  r.require("0 < beta < 1", "beta = " + b.to_string(), b.sign() > 0 && b < one);
  r.require("alpha + beta > 0", cmp_text(a + b, ">", Rational(0)), (a + b).sign() > 0);

  const Rational c1 = (a + b + one) * (one - Rational(2) * ab);
  r.require("(alpha+beta+1)(1-2 alpha beta) <= 3", cmp_text(c1, "<=", Rational(3)), c1 <= Rational(3));

  const Rational ab2 = ab * ab, ab3 = ab2 * ab;
  const Rational c2_lhs = (a2 + ab + b2 + a + b - one) * (Rational(-8) * ab3 + Rational(6) * ab2 + Rational(11) * ab);
  const Rational c2_rhs = (Rational(4) * ab3 + Rational(3) * ab2 + Rational(5) * ab) + Rational(9) * ab * (a + b) + Rational(3) * (a2 + b2);
  r.require("(a^2+ab+b^2+a+b-1)(-8a^3b^3+6a^2b^2+11ab) >= (4a^3b^3+3a^2b^2+5ab) + 9ab(a+b) + 3(a^2+b^2)",
            cmp_text(c2_lhs, ">=", c2_rhs), c2_lhs >= c2_rhs);

  const Rational c3_lhs = (a2 + Rational(2) * ab + b2 + a + b + one) * (Rational(4) * ab2 - Rational(8) * ab);
  const Rational c3_rhs = Rational(-6) * ab * (a + b + Rational(3)) - Rational(3) * (a2 + b2);
  r.require("(a^2+2ab+b^2+a+b+1)(4a^2b^2-8ab) < -6ab(a+b+3) - 3(a^2+b^2)", cmp_text(c3_lhs, "<", c3_rhs), c3_lhs < c3_rhs);

  if (r.preconditions_hold()) {
    const Rational num = Rational(2) * (one - a2) * (one - b2) * (one - ab) * (one - Rational(2) * ab);
    const Rational den = ab * (c3_lhs - c3_rhs);
    const Rational bound = num / den;
    if (fiber) {
      r.set_bound(bound, "w", fiber_name(*fiber), *fiber);
    } else {
      r.set_bound(bound);
    }
  }
  return r;
}

std::vector<HadamardRow> hadamard_table(int workers) {
  struct Spec {
    int d, l, a;
    const char* previous;
  };
  static const Spec kRows[] = {
      {16, 4, 64, "f <= 35"},  {24, 4, 144, "f <= 85"},  {24, 9, 64, "f <= 85"},  {32, 4, 256, "f <= 155"},
      {36, 9, 144, "f <= 199"}, {40, 4, 400, "f <= 247"}, {40, 25, 64, "f <= 28"}, {48, 4, 576, "f <= 361"},
      {48, 9, 256, "f <= 361"}, {48, 16, 144, "f <= 361"}, {48, 36, 64, "f <= 28"},
  };
  std::vector<HadamardRow> rows(std::size(kRows));
  parallel_for(rows.size(), workers, [&](std::size_t n) {
    const Spec& s = kRows[n];
    const Rational alpha = *rational_sqrt(Rational(1, s.l));
    rows[n] = HadamardRow{s.d, s.l, s.a, s.previous, hadamard_bound_deg4(s.d, alpha), hadamard_bound_deg6(s.d, alpha)};
  });
  return rows;
}

std::vector<QSchemeRow> qscheme_table(int workers) {
  struct Spec {
    long v, k, lambda;
    const char* known;
  };
  static const Spec kRows[] = {
      {36, 15, 6, "w <= 18"},  {45, 33, 24, "w <= 7"},   {64, 36, 20, "w <= 32"},  {96, 76, 60, "w <= 7"},
      {100, 45, 20, "w <= 50"}, {144, 78, 42, "w <= 72"}, {153, 57, 21, "w <= 77"},
  };
  std::vector<QSchemeRow> rows(std::size(kRows));
  parallel_for(rows.size(), workers, [&](std::size_t n) {
    const Spec& s = kRows[n];
    // The embedding column does not depend on w; w = 2 is the smallest valid fiber count.
    const CodeEmbedding emb = embed(q_antipodal_scheme(s.v, s.k, s.lambda, 2), 1);
    QSchemeRow row;
    row.v = s.v;
    row.k = s.k;
    row.lambda = s.lambda;
    row.m1 = emb.d;
    row.known_bound = s.known;
    for (const QuadComplex& x : emb.inner_products) {
      if (!x.is_real()) throw std::logic_error("Q-antipodal embedding produced a non-real inner product");
      row.inner_products.push_back(x.real());
    }
    const auto& A = row.inner_products;
    row.three_distance = three_distance_bound(emb.d, A[0], A[1], A[2], s.v);
    const Rational a = *std::min_element(A.begin(), A.end());
    const Rational b = *std::max_element(A.begin(), A.end());
    if (std::find(A.begin(), A.end(), a * b) == A.end()) throw std::logic_error("embedding set is not of the form {a, b, ab}");
    row.qscheme = qscheme_bound(a, b, s.v);
    rows[n] = std::move(row);
  });
  return rows;
}

std::string table_cell(const BoundReport& report) {
  if (!report.preconditions_hold() || !report.derived) return kConditionsFail;
  return report.derived->name + " <= " + report.derived->value.get_str();
}

namespace {

json cell_json(const BoundReport& r) {
  json c{{"cell", table_cell(r)}, {"report", report_to_json(r)}};
  return c;
}

std::string render(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      os << cells[r][c];
      if (c + 1 < cells[r].size()) os << std::string(width[c] - cells[r][c].size() + 2, ' ');
    }
    os << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c + 1 < width.size() ? 2 : 0);
      os << std::string(total, '-') << '\n';
    }
  }
  return os.str();
}

}  // namespace

json hadamard_table_json(const std::vector<HadamardRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"d", r.d}, {"l", r.l}, {"a", r.a}, {"previous", r.previous_bound},
                   {"deg4", cell_json(r.deg4)}, {"deg6", cell_json(r.deg6)}, {"sdp", kExternalColumn}});
  }
  return {{"table", "hadamard"}, {"rows", std::move(out)}};
}

json qscheme_table_json(const std::vector<QSchemeRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json A = json::array();
    for (const auto& a : r.inner_products) A.push_back(a.to_string());
    out.push_back({{"X", std::to_string(r.v) + "w"}, {"design", {r.v, r.k, r.lambda}}, {"m1", r.m1}, {"A", std::move(A)},
                   {"known", r.known_bound}, {"threedist", cell_json(r.three_distance)}, {"qscheme", cell_json(r.qscheme)}});
  }
  return {{"table", "qschemes"}, {"rows", std::move(out)}};
}

std::string hadamard_table_text(const std::vector<HadamardRow>& rows) {
  std::vector<std::vector<std::string>> cells{{"(d,l,a)", "previous", "deg4", "deg6", "sdp"}};
  for (const auto& r : rows) {
    cells.push_back({"(" + std::to_string(r.d) + "," + std::to_string(r.l) + "," + std::to_string(r.a) + ")", r.previous_bound,
                     table_cell(r.deg4), table_cell(r.deg6), kExternalColumn});
  }
  return render(cells);
}

std::string qscheme_table_text(const std::vector<QSchemeRow>& rows) {
  std::vector<std::vector<std::string>> cells{{"|X|", "m1", "A(X)", "known", "threedist", "qscheme"}};
  for (const auto& r : rows) {
    std::string A;
    for (const auto& a : r.inner_products) A += (A.empty() ? "" : ",") + a.to_string();
    cells.push_back({std::to_string(r.v) + "w", std::to_string(r.m1), "{" + A + "}", r.known_bound, table_cell(r.three_distance),
                     table_cell(r.qscheme)});
  }
  return render(cells);
}

}  // namespace cscodes
