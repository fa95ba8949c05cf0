#include "cscodes/schemes.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cscodes/harmonics.hpp"
#include "cscodes/parallel.hpp"

namespace cscodes {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& builtin_fixture_texts();
}

namespace {

using nlohmann::json;

DenseMatrix<QuadComplex> matrix_from_json(const json& rows, const std::string& what) {
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument(what + " must be a non-empty array of rows");
  const std::size_t n = rows.size();
  DenseMatrix<QuadComplex> out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) throw std::invalid_argument(what + " must be square");
    for (std::size_t c = 0; c < n; ++c) {
      const json& cell = rows[r][c];
      out(r, c) = cell.is_number_integer() ? QuadComplex(cell.get<long>()) : QuadComplex::parse(cell.get<std::string>());
    }
  }
  return out;
}

json matrix_to_json(const DenseMatrix<QuadComplex>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<long> positive_integers(const DenseMatrix<QuadComplex>& m, const std::string& what) {
  std::vector<long> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const QuadComplex& x = m(0, c);
    if (!x.is_real() || !x.real().is_integer() || x.real().sign() <= 0) {
      throw std::invalid_argument(what + " entry " + x.to_string() + " is not a positive integer");
    }
    out.push_back(x.real().numerator().get_si());
  }
  return out;
}

Rational exact_root(const Rational& r, const std::string& what) {
  const auto root = rational_sqrt(r);
  if (!root) throw std::domain_error(what + " = sqrt(" + r.to_string() + ") is irrational; only rational eigenvalues are supported");
  return *root;
}

DenseMatrix<QuadComplex> from_rows(const std::vector<std::vector<Rational>>& rows) {
  DenseMatrix<QuadComplex> out(rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows.size(); ++c) out(r, c) = QuadComplex(rows[r][c]);
  }
  return out;
}

}  // namespace

std::vector<long> SchemeSpec::valencies() const { return positive_integers(P, "valency"); }
std::vector<long> SchemeSpec::multiplicities() const { return positive_integers(Q, "multiplicity"); }

void SchemeSpec::validate() const {
  const std::size_t n = P.rows();
  if (n < 2 || P.cols() != n || Q.rows() != n || Q.cols() != n) {
    throw std::invalid_argument("scheme " + name + ": P and Q must be square of the same size >= 2");
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (P(r, 0) != QuadComplex(1) || Q(r, 0) != QuadComplex(1)) {
      throw std::invalid_argument("scheme " + name + ": column 0 of P and Q must be all ones");
    }
  }
  for (const auto* sums : {&P, &Q}) {
    long total = 0;
    for (long x : positive_integers(*sums, sums == &P ? "valency" : "multiplicity")) total += x;
    if (total != order) throw std::invalid_argument("scheme " + name + ": row 0 does not sum to |X|");
  }
  const DenseMatrix<QuadComplex> pq = P * Q;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const QuadComplex want = r == c ? QuadComplex(order) : QuadComplex(0);
      if (pq(r, c) != want) {
        throw std::invalid_argument("scheme " + name + ": (PQ)[" + std::to_string(r) + "][" + std::to_string(c) +
                                    "] = " + pq(r, c).to_string() + ", expected " + want.to_string());
      }
    }
  }
  if (embedding_column < 1 || embedding_column >= static_cast<int>(n)) {
    throw std::invalid_argument("scheme " + name + ": embedding column out of range");
  }
}

SchemeSpec scheme_from_json(const json& doc) {
  try {
    SchemeSpec s;
    s.name = doc.at("name").get<std::string>();
    s.description = doc.value("description", "");
    s.order = doc.at("order").get<long>();
    s.P = matrix_from_json(doc.at("P"), "P");
    s.Q = matrix_from_json(doc.at("Q"), "Q");
    s.embedding_column = doc.value("embedding_column", 1);
    if (doc.contains("expected")) {
      const json& e = doc.at("expected");
      s.expected = FixtureExpectation{e.at("k").get<int>(), e.at("l").get<int>(), Rational::parse(e.at("value").get<std::string>()),
                                      e.value("verdict", "") == "negative"};
    }
    s.validate();
    return s;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed scheme document: ") + e.what());
  }
}

json scheme_to_json(const SchemeSpec& s) {
  json doc{{"name", s.name}, {"description", s.description}, {"order", s.order},
           {"P", matrix_to_json(s.P)}, {"Q", matrix_to_json(s.Q)}, {"embedding_column", s.embedding_column}};
  if (s.expected) {
    doc["expected"] = {{"k", s.expected->k}, {"l", s.expected->l}, {"value", s.expected->value.to_string()},
                       {"verdict", s.expected->negative ? "negative" : "nonnegative"}};
  }
  return doc;
}

std::vector<std::string> builtin_fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : detail::builtin_fixture_texts()) out.emplace_back(name);
  std::sort(out.begin(), out.end());
  return out;
}

SchemeSpec builtin_fixture(std::string_view name) {
  for (const auto& [fixture, text] : detail::builtin_fixture_texts()) {
    if (fixture == name) return scheme_from_json(json::parse(text));
  }
  std::string known;
  for (const auto& n : builtin_fixture_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "' (known: " + known + ")");
}

std::vector<SchemeSpec> load_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fixture file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("fixture file " + path + " is not valid JSON: " + e.what());
  }
  std::vector<SchemeSpec> out;
  if (doc.is_array()) {
    for (const json& item : doc) out.push_back(scheme_from_json(item));
  } else {
    out.push_back(scheme_from_json(doc));
  }
  return out;
}

SchemeSpec q_antipodal_scheme(long v, long k, long lambda, long w) {
  if (w < 2) throw std::domain_error("q_antipodal_scheme needs w >= 2");
  if (!(0 < lambda && lambda < k && k < v)) throw std::domain_error("q_antipodal_scheme needs 0 < lambda < k < v");
  if (Rational(k) * Rational(k - 1) != Rational(lambda) * Rational(v - 1)) {
    throw std::domain_error("(v,k,lambda) violates k(k-1) = lambda(v-1)");
  }
  const Rational V(v), K(k), W(w), one(1);
  const Rational s = exact_root(Rational(k - lambda), "sqrt(k - lambda)");
  const Rational q1 = exact_root((V - one) * (V - K) / K, "sqrt((v-1)(v-k)/k)");
  const Rational q3 = exact_root((V - one) * K / (V - K), "sqrt((v-1)k/(v-k))");
  const Rational w1 = W - one;

  SchemeSpec out;
  out.name = "q-antipodal-" + std::to_string(v) + "-" + std::to_string(k) + "-" + std::to_string(lambda) + "-w" + std::to_string(w);
  out.description = "Q-antipodal Q-polynomial 3-class scheme from the symmetric (" + std::to_string(v) + "," +
                    std::to_string(k) + "," + std::to_string(lambda) + ") design with " + std::to_string(w) + " fibers";
  out.order = v * w;
  out.P = from_rows({{one, K * w1, V - one, (V - K) * w1},
                     {one, s * w1, -one, -s * w1},
                     {one, -s, -one, s},
                     {one, -K, V - one, -(V - K)}});
  out.Q = from_rows({{one, V - one, w1 * (V - one), w1},
                     {one, q1, -q1, -one},
                     {one, -one, -w1, w1},
                     {one, -q3, q3, -one}});
  out.embedding_column = 1;
  out.validate();
  return out;
}

SchemeSpec simplex_scheme(long n) {
  if (n < 2) throw std::domain_error("simplex_scheme needs n >= 2");
  SchemeSpec out;
  out.name = "simplex-" + std::to_string(n);
  out.description = "1-class scheme on " + std::to_string(n) + " points";
  out.order = n;
  out.P = from_rows({{Rational(1), Rational(n - 1)}, {Rational(1), Rational(-1)}});
  out.Q = out.P;
  out.embedding_column = 1;
  out.validate();
  return out;
}

CodeEmbedding embed(const SchemeSpec& scheme, int column) {
  const auto n = static_cast<int>(scheme.Q.rows());
  if (column < 1 || column >= n) throw std::out_of_range("embedding column " + std::to_string(column) + " out of range");
  const QuadComplex& m = scheme.Q(0, static_cast<std::size_t>(column));
  if (!m.is_real() || !m.real().is_integer() || m.real().sign() <= 0) {
    throw std::invalid_argument("multiplicity " + m.to_string() + " is not a positive integer");
  }
  CodeEmbedding out;
  out.d = static_cast<int>(m.real().numerator().get_si());
  out.order = scheme.order;
  const std::vector<long> valencies = scheme.valencies();
  std::set<QuadComplex> seen{QuadComplex(1)};
  for (int j = 1; j < n; ++j) {
    const QuadComplex alpha = scheme.Q(static_cast<std::size_t>(j), static_cast<std::size_t>(column)) / m;
    if (!seen.insert(alpha).second) {
      throw RepeatedRows("column " + std::to_string(column) + " repeats the inner product " + alpha.to_string() +
                         " at relation " + std::to_string(j));
    }
    if (alpha.norm() > Rational(1)) throw std::invalid_argument("inner product " + alpha.to_string() + " exceeds 1 in modulus");
    out.inner_products.push_back(alpha);
    out.valencies.push_back(valencies[static_cast<std::size_t>(j)]);
  }
  return out;
}

Rational positivity_check(const CodeEmbedding& emb, int k, int l) {
  const JacobiSpec g = jacobi(emb.d, k, l);
  QuadComplex sum(g.at_one());
  for (std::size_t j = 0; j < emb.inner_products.size(); ++j) {
    sum += QuadComplex(Rational(emb.valencies[j])) * jacobi_eval(g, emb.inner_products[j]);
  }
  if (!sum.is_real()) throw std::logic_error("positivity sum has a nonzero imaginary part: " + sum.to_string());
  return sum.real();
}

std::string to_string(Verdict v) { return v == Verdict::Negative ? "negative" : "nonnegative"; }

std::vector<ScanEntry> nonexistence_scan(const CodeEmbedding& emb, int p, int workers) {
  if (p < 1) throw std::domain_error("nonexistence_scan needs p >= 1");
  std::vector<ScanEntry> out;
  for (int degree = 0; degree <= p; ++degree) {
    for (int k = degree; k >= 0; --k) out.push_back(ScanEntry{k, degree - k, Rational(0), Verdict::Nonnegative});
  }
  parallel_for(out.size(), workers, [&](std::size_t n) {
    ScanEntry& e = out[n];
    e.value = positivity_check(emb, e.k, e.l);
    e.verdict = e.value.sign() < 0 ? Verdict::Negative : Verdict::Nonnegative;
  });
  return out;
}

}  // namespace cscodes
