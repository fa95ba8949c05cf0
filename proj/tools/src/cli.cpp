#include "cscodes/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cscodes/harmonics.hpp"
#include "cscodes/lp_bounds.hpp"
#include "cscodes/parallel.hpp"
#include "cscodes/report.hpp"
#include "cscodes/schemes.hpp"
#include "cscodes/sdp_serialize.hpp"
#include "cscodes/sdp_solver.hpp"
#include "cscodes/tournaments.hpp"
#include "cscodes/zonal.hpp"

namespace cscodes::cli {

using nlohmann::json;

void RunConfig::validate() const {
  if (subcommand.empty()) throw std::invalid_argument("no subcommand given");
  if (truncation && *truncation < 0) throw std::invalid_argument("truncation must be nonnegative");
  if (!(tolerance > 0 && tolerance < 1)) throw std::invalid_argument("tolerance must lie in (0, 1)");
  if (workers < 1) throw std::invalid_argument("worker count must be at least 1");
}

namespace {

/// Thrown by handlers for inputs that parse but fail a mathematical precondition.
class PreconditionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

std::vector<std::string> strings_of(const std::vector<QuadComplex>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

json matrix_json(const DenseMatrix<QuadComplex>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_matrix_text(std::ostream& out, const DenseMatrix<QuadComplex>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    out << "  [" << join(row) << "]\n";
  }
}

void emit(std::ostream& out, const RunConfig& cfg, const json& doc, const std::string& text) {
  if (cfg.format == OutputFormat::Json) {
    out << doc.dump(2) << '\n';
  } else {
    out << text;
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------- jacobi

struct JacobiArgs {
  int d = 2, k = 0, l = 0;
  std::vector<std::string> points;
};

int run_jacobi(const RunConfig& cfg, const JacobiArgs& a, std::ostream& out) {
  const JacobiSpec g = jacobi(a.d, a.k, a.l);
  json doc{{"d", a.d}, {"k", a.k}, {"l", a.l}};
  std::ostringstream text;
  std::vector<std::string> coeffs;
  for (const auto& c : g.coeffs) coeffs.push_back(c.to_string());
  doc["coefficients"] = coeffs;
  doc["at_one"] = g.at_one().to_string();
  doc["dim_harm"] = dim_harm(a.d, a.k, a.l).to_string();
  text << "g_{" << a.k << "," << a.l << "}^" << a.d << "(x) = sum_r c_r x^(k-r) conj(x)^(l-r)\n";
  text << "c = [" << join(coeffs) << "]\n";
  text << "g(1) = " << g.at_one().to_string() << "   dim Harm = " << dim_harm(a.d, a.k, a.l).to_string() << '\n';
  json values = json::array();
  for (const auto& s : a.points) {
    const QuadComplex x = QuadComplex::parse(s);
    const QuadComplex gx = jacobi_eval(g, x);
    const bool rec = jacobi_recurrence_check(a.d, a.k, a.l, x);
    values.push_back({{"x", x.to_string()}, {"value", gx.to_string()}, {"recurrence", rec}});
    text << "g(" << x.to_string() << ") = " << gx.to_string() << "   recurrence " << (rec ? "holds" : "FAILS") << '\n';
  }
  doc["values"] = std::move(values);
  emit(out, cfg, doc, text.str());
  return kExitOk;
}

// ---------------------------------------------------------------- zonal

struct ZonalArgs {
  int d = 3, i = 0, j = 0;
  std::optional<int> m;
  std::string u = "0", v = "0", t = "0";
  std::string inner = "reduced";
};

int run_zonal(const RunConfig& cfg, const ZonalArgs& a, std::ostream& out) {
  int m = 1;
  if (a.m) {
    m = *a.m;
  } else if (cfg.truncation) {
    m = zonal_block_size(*cfg.truncation, a.i, a.j);
  }
  if (m < 1) throw std::invalid_argument("block size must be at least 1");
  const ZonalBlockSpec spec{a.d, a.i, a.j, m, a.inner == "ambient" ? InnerDimension::Ambient : InnerDimension::Reduced};
  const QuadComplex u = QuadComplex::parse(a.u), v = QuadComplex::parse(a.v), t = QuadComplex::parse(a.t);
  const DenseMatrix<QuadComplex> y = zonal_matrix(spec, u, v, t);
  json doc{{"d", a.d}, {"i", a.i}, {"j", a.j}, {"m", m}, {"inner_dimension", spec.inner_dimension()},
           {"u", u.to_string()}, {"v", v.to_string()}, {"t", t.to_string()}, {"matrix", matrix_json(y)},
           {"hermitian", is_hermitian(y)}};
  std::ostringstream text;
  text << "Y^{" << a.i << "," << a.j << "} for d=" << a.d << " (inner dimension " << spec.inner_dimension() << "), m=" << m
       << " at (u,v,t) = (" << u.to_string() << ", " << v.to_string() << ", " << t.to_string() << ")\n";
  write_matrix_text(text, y);
  emit(out, cfg, doc, text.str());
  return kExitOk;
}

// ---------------------------------------------------------------- sdp-bound

struct SdpArgs {
  int d = 2;
  std::vector<std::string> A;
  int max_iterations = 200;
  bool all_triples = false;
  bool transposed = false;
  std::string emit_problem;
};

std::vector<std::string> inner_products_from_file(const std::string& path) {
  const json doc = read_json_file(path);
  const json& list = doc.is_object() ? doc.at("A") : doc;
  if (!list.is_array()) throw std::runtime_error(path + ": expected an array of inner products");
  std::vector<std::string> out;
  for (const auto& item : list) out.push_back(item.get<std::string>());
  return out;
}

int run_sdp_bound(const RunConfig& cfg, const SdpArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::string> values = a.A;
  for (const auto& path : cfg.input_paths) {
    const auto more = inner_products_from_file(path);
    values.insert(values.end(), more.begin(), more.end());
  }
  if (values.empty()) throw std::invalid_argument("sdp-bound needs --A or --A-file");
  const InnerProductSet A = InnerProductSet::parse(values);
  const int p = cfg.truncation.value_or(3);

  BuildOptions options;
  options.workers = cfg.workers;
  options.psd_triples_only = !a.all_triples;
  options.include_transposed_blocks = a.transposed;
  const SdpProblem problem = build_problem(a.d, A, p, options);
  if (!a.emit_problem.empty()) {
    std::ofstream f(a.emit_problem);
    if (!f) throw std::runtime_error("cannot write " + a.emit_problem);
    f << problem_to_json(problem).dump(2) << '\n';
  }

  SolverConfig sc;
  sc.tolerance = cfg.tolerance;
  sc.max_iterations = a.max_iterations;
  const SolveResult r = solve(problem, sc);
  const bool optimal = r.status == SolveStatus::Optimal;
  const double bound = code_size_bound(r);

  json vars = json::array();
  std::ostringstream text;
  text << "sdp-bound d=" << a.d << " p=" << p << " A = {" << join(A.to_strings()) << "}\n";
  text << "variables (" << problem.num_variables() << "):\n";
  for (std::size_t k = 0; k < problem.num_variables(); ++k) {
    const auto& var = problem.variables[k];
    vars.push_back({{"label", var.label},
                    {"kind", var.orbit.kind == OrbitKind::Diagonal ? "diagonal" : "generic"},
                    {"orbit_size", var.orbit.members.size()},
                    {"objective", var.objective.to_string()},
                    {"value", format_double(r.x[k])}});
    text << "  " << var.label << "  orbit " << var.orbit.members.size() << "  c = " << var.objective.to_string()
         << "  value " << format_double(r.x[k]) << '\n';
  }
  text << "blocks: counting + " << problem.zonal_blocks.size() << " zonal + " << problem.lp_rows.size() << " lp rows\n";
  text << "status: " << to_string(r.status) << " (" << r.message << ", " << r.iterations << " iterations)\n";
  text << "primal objective: " << format_double(r.primal_objective) << '\n';
  text << "dual objective:   " << format_double(r.dual_objective) << '\n';
  text << "duality gap:      " << format_double(r.duality_gap) << '\n';
  json doc{{"d", a.d}, {"p", p}, {"A", A.to_strings()}, {"variables", std::move(vars)},
           {"status", to_string(r.status)}, {"message", r.message}, {"iterations", r.iterations},
           {"primal_objective", format_double(r.primal_objective)}, {"dual_objective", format_double(r.dual_objective)},
           {"duality_gap", format_double(r.duality_gap)}, {"primal_infeasibility", format_double(r.primal_infeasibility)},
           {"max_block_violation", format_double(r.max_block_violation)}, {"tolerance", format_double(r.tolerance)}};
  if (optimal) {
    const long integer_bound = static_cast<long>(std::floor(bound));
    doc["bound"] = format_double(bound);
    doc["size_bound"] = integer_bound;
    text << "bound: |X| <= " << format_double(bound) << ", so |X| <= " << integer_bound << '\n';
  } else {
    doc["bound"] = nullptr;
    doc["size_bound"] = nullptr;
    text << "bound: none\n";
  }
  emit(out, cfg, doc, text.str());
  if (!optimal) {
    err << "error: solver finished with status " << to_string(r.status) << ": " << r.message << '\n';
    return kExitError;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- lp-bound

struct LpArgs {
  std::string method;
  std::optional<int> d;
  std::string alpha, beta, gamma;
  std::optional<long> fiber;
};

int run_lp_bound(const RunConfig& cfg, const LpArgs& a, std::ostream& out, std::ostream& err) {
  auto need = [&](const std::string& value, const char* name) {
    if (value.empty()) throw std::invalid_argument("--method " + a.method + " needs --" + name);
    return Rational::parse(value);
  };
  auto need_d = [&] {
    if (!a.d) throw std::invalid_argument("--method " + a.method + " needs --d");
    return *a.d;
  };
  BoundReport report;
  try {
    if (a.method == "deg4") {
      report = hadamard_bound_deg4(need_d(), need(a.alpha, "alpha"));
    } else if (a.method == "deg6") {
      report = hadamard_bound_deg6(need_d(), need(a.alpha, "alpha"));
    } else if (a.method == "threedist") {
      report = three_distance_bound(need_d(), need(a.alpha, "alpha"), need(a.beta, "beta"), need(a.gamma, "gamma"), a.fiber);
    } else {
      report = qscheme_bound(need(a.alpha, "alpha"), need(a.beta, "beta"), a.fiber);
    }
  } catch (const std::domain_error& e) {
    throw PreconditionFailure(e.what());
  }
  emit(out, cfg, report_to_json(report), report_to_text(report));
  if (!report.preconditions_hold()) {
    err << "precondition failure: no bound for --method " << a.method << '\n';
    return kExitPrecondition;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- table

int run_table(const RunConfig& cfg, const std::string& which, std::ostream& out) {
  if (which == "hadamard") {
    const auto rows = hadamard_table(cfg.workers);
    emit(out, cfg, hadamard_table_json(rows), hadamard_table_text(rows));
  } else {
    const auto rows = qscheme_table(cfg.workers);
    emit(out, cfg, qscheme_table_json(rows), qscheme_table_text(rows));
  }
  return kExitOk;
}

// ---------------------------------------------------------------- scheme-check

struct SchemeArgs {
  std::vector<std::string> fixtures;
  std::optional<int> column;
  bool list = false;
};

int run_scheme_check(const RunConfig& cfg, const SchemeArgs& a, std::ostream& out, std::ostream& err) {
  if (a.list) {
    const auto names = builtin_fixture_names();
    json doc = json::array();
    std::ostringstream text;
    for (const auto& n : names) {
      const SchemeSpec s = builtin_fixture(n);
      doc.push_back({{"name", n}, {"order", s.order}, {"description", s.description}});
      text << n << "  |X| = " << s.order << "  " << s.description << '\n';
    }
    emit(out, cfg, doc, text.str());
    return kExitOk;
  }
  std::vector<SchemeSpec> schemes;
  for (const auto& name : a.fixtures) schemes.push_back(builtin_fixture(name));
  for (const auto& path : cfg.input_paths) {
    auto loaded = load_fixture_file(path);
    schemes.insert(schemes.end(), loaded.begin(), loaded.end());
  }
  if (schemes.empty()) throw std::invalid_argument("scheme-check needs --fixture, --fixture-file or --list");
  const int p = cfg.truncation.value_or(3);
  if (p < 1) throw std::invalid_argument("scheme-check needs --p >= 1");

  json doc = json::array();
  std::ostringstream text;
  bool mismatch = false;
  for (const SchemeSpec& s : schemes) {
    const int column = a.column.value_or(s.embedding_column);
    CodeEmbedding emb;
    try {
      emb = embed(s, column);
    } catch (const RepeatedRows& e) {
      throw PreconditionFailure(s.name + ": " + e.what());
    }
    const auto scan = nonexistence_scan(emb, p, cfg.workers);
    std::optional<ScanEntry> certificate;
    for (const auto& e : scan) {
      if (e.verdict == Verdict::Negative) {
        certificate = e;
        break;
      }
    }
    json entries = json::array();
    text << s.name << ": |X| = " << s.order << ", column " << column << ", d = " << emb.d << '\n';
    std::vector<std::string> vals;
    for (long k : emb.valencies) vals.push_back(std::to_string(k));
    text << "  A = {" << join(strings_of(emb.inner_products)) << "}\n  valencies (" << join(vals) << ")\n";
    for (const auto& e : scan) {
      entries.push_back({{"k", e.k}, {"l", e.l}, {"value", e.value.to_string()},
                         {"decimal", format_double(e.value.to_double())}, {"verdict", to_string(e.verdict)}});
      text << "  (" << e.k << "," << e.l << ")  " << e.value.to_string() << "  " << to_string(e.verdict) << '\n';
    }
    json item{{"name", s.name}, {"order", s.order}, {"column", column}, {"d", emb.d},
              {"inner_products", strings_of(emb.inner_products)}, {"valencies", emb.valencies}, {"p", p},
              {"scan", std::move(entries)}};
    if (certificate) {
      item["certificate"] = {{"k", certificate->k}, {"l", certificate->l}, {"value", certificate->value.to_string()},
                             {"verdict", to_string(Verdict::Negative)}};
      text << "  verdict: Negative certificate at (" << certificate->k << "," << certificate->l
           << ") = " << certificate->value.to_string() << "; the scheme does not exist\n";
    } else {
      item["certificate"] = nullptr;
      text << "  verdict: all values nonnegative up to degree " << p << '\n';
    }
    if (s.expected && column == s.embedding_column && s.expected->k + s.expected->l <= p) {
      const auto it = std::find_if(scan.begin(), scan.end(),
                                   [&](const ScanEntry& e) { return e.k == s.expected->k && e.l == s.expected->l; });
      const bool match = it != scan.end() && it->value == s.expected->value &&
                         (it->verdict == Verdict::Negative) == s.expected->negative;
      item["expected_match"] = match;
      text << "  expected value at (" << s.expected->k << "," << s.expected->l << "): "
           << s.expected->value.to_string() << (match ? " (matches)" : " (MISMATCH)") << '\n';
      mismatch = mismatch || !match;
    } else {
      item["expected_match"] = nullptr;
    }
    doc.push_back(std::move(item));
  }
  emit(out, cfg, doc, text.str());
  if (mismatch) {
    err << "error: a fixture's recorded expectation does not match the computed scan\n";
    return kExitError;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- twocode-bound

int run_twocode(const RunConfig& cfg, int d, std::ostream& out, std::ostream& err) {
  BoundReport r;
  r.method = "twocode";
  r.parameters = {{"d", std::to_string(d)}, {"A", "{(d-1 +- i)/d}"}};
  if (r.require("d >= 5", "d = " + std::to_string(d), d >= 5)) {
    const Rational value = twocode_bound_analytic(d);
    r.set_bound(value);
    r.diagnostics.emplace_back("formula", "(18d^3-48d^2+24d+4)/(3d^3-6d^2-6d+8)");
    r.diagnostics.emplace_back("verdict", value < Rational(6) ? "< 6" : ">= 6");
  }
  emit(out, cfg, report_to_json(r), report_to_text(r));
  if (!r.preconditions_hold()) {
    err << "precondition failure: the closed form needs d >= 5\n";
    return kExitPrecondition;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- sds

struct SdsArgs {
  std::optional<int> d;
  std::vector<std::string> x1, x2;  // tokens, each may hold comma-separated elements
  std::optional<int> search;
  bool gram = false;
};

std::vector<int> parse_subset(const std::vector<std::string>& tokens) {
  std::vector<int> out;
  for (std::string token : tokens) {
    std::replace(token.begin(), token.end(), ',', ' ');
    std::istringstream is(token);
    std::string item;
    while (is >> item) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size()) throw std::invalid_argument("not an integer: " + item);
      out.push_back(value);
    }
  }
  return out;
}

json sds_json(const SdsPair& s) {
  return {{"d", s.d}, {"X1", s.X1}, {"X2", s.X2}, {"lambda", s.lambda}, {"n_prime", s.n_prime()},
          {"skew_symmetric", s.skew_symmetric()}};
}

int run_sds(const RunConfig& cfg, const SdsArgs& a, std::ostream& out, std::ostream& err) {
  auto ints = [](const std::vector<int>& v) {
    std::vector<std::string> s;
    for (int x : v) s.push_back(std::to_string(x));
    return "{" + join(s) + "}";
  };
  if (a.search) {
    const auto found = find_skew_sds(*a.search, cfg.workers);
    json doc = json::array();
    std::ostringstream text;
    for (const auto& s : found) {
      doc.push_back(sds_json(s));
      text << "d=" << s.d << "  X1=" << ints(s.X1) << "  X2=" << ints(s.X2) << "  lambda=" << s.lambda << '\n';
    }
    text << found.size() << " skew-symmetric SDS with d <= " << *a.search << '\n';
    emit(out, cfg, doc, text.str());
    return kExitOk;
  }
  if (!a.d) throw std::invalid_argument("sds needs --d (or --search)");
  SdsPair pair;
  try {
    pair = make_sds(*a.d, parse_subset(a.x1), parse_subset(a.x2));
  } catch (const NotSds& e) {
    throw PreconditionFailure(std::string("not a supplementary difference set: ") + e.what());
  }
  json doc = sds_json(pair);
  std::ostringstream text;
  text << "SDS in Z_" << pair.d << ": X1=" << ints(pair.X1) << " X2=" << ints(pair.X2) << "  lambda=" << pair.lambda
       << "  n'=" << pair.n_prime() << '\n';
  if (!pair.skew_symmetric()) {
    text << "X1 is not skew: no code construction\n";
    emit(out, cfg, doc, text.str());
    err << "precondition failure: the tournament construction needs R1 + R1^T = 2I\n";
    return kExitPrecondition;
  }
  const SdsCode code = sds_to_code(pair);
  doc["order"] = code.tournament.order();
  doc["k"] = code.k;
  doc["inner_products"] = strings_of({code.inner_products[0], code.inner_products[1]});
  doc["d_optimal"] = code.d_optimal;
  text << "tournament of order " << code.tournament.order() << ", k = 4n'-1 = " << code.k << '\n';
  text << "A(X) = {" << join(strings_of({code.inner_products[0], code.inner_products[1]})) << "}\n";
  if (code.d_optimal) text << "k = 2d - 3: D-optimal design\n";
  if (a.gram) {
    const GramMatrix g = gram_from_tournament(code.tournament, code.inner_products[0]);
    doc["gram"] = matrix_json(g);
    doc["rank"] = numeric_rank(g);
    text << "Gram matrix (numeric rank " << numeric_rank(g) << "):\n";
    write_matrix_text(text, g);
  }
  emit(out, cfg, doc, text.str());
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds and certificates for complex spherical codes", "cscodes"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.workers = default_worker_count();
  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::Text}, {"json", OutputFormat::Json}};
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text");
  app.fallthrough();

  auto add_p = [&](CLI::App* sub, const char* help) { sub->add_option("--p", cfg.truncation, help); };

  JacobiArgs jacobi_args;
  auto* jac = app.add_subcommand("jacobi", "Jacobi polynomial g_{k,l}^d: coefficients and exact values");
  jac->add_option("--d", jacobi_args.d)->required();
  jac->add_option("--k", jacobi_args.k)->required();
  jac->add_option("--l", jacobi_args.l)->required();
  jac->add_option("--x", jacobi_args.points, "Evaluation points, e.g. 1/3+1/4*sqrt(7)*i");

  ZonalArgs zonal_args;
  auto* zon = app.add_subcommand("zonal", "Exact zonal matrix Y^{i,j}(u,v,t)");
  zon->add_option("--d", zonal_args.d)->required();
  zon->add_option("--i", zonal_args.i)->required();
  zon->add_option("--j", zonal_args.j)->required();
  zon->add_option("--m", zonal_args.m, "Block size (default from --p, else 1)");
  add_p(zon, "Truncation giving m = floor((p-i-j)/2)+1");
  zon->add_option("--u", zonal_args.u);
  zon->add_option("--v", zonal_args.v);
  zon->add_option("--t", zonal_args.t);
  zon->add_option("--inner", zonal_args.inner)->check(CLI::IsMember({"reduced", "ambient"}));

  SdpArgs sdp_args;
  auto* sdp = app.add_subcommand("sdp-bound", "Three-point SDP bound for a code with A(X) in A");
  sdp->add_option("--d", sdp_args.d)->required();
  sdp->add_option("--A", sdp_args.A, "Inner products, closed under conjugation");
  sdp->add_option("--A-file", cfg.input_paths, "JSON array of inner products (or {\"A\": [...]})");
  add_p(sdp, "Truncation degree (default 3)");
  sdp->add_option("--tol", cfg.tolerance, "Solver tolerance");
  sdp->add_option("--max-iter", sdp_args.max_iterations);
  sdp->add_flag("--all-triples", sdp_args.all_triples, "Keep triples whose Gram matrix is not PSD");
  sdp->add_flag("--transposed-blocks", sdp_args.transposed, "Also emit the redundant (j,i) blocks");
  sdp->add_option("--emit-problem", sdp_args.emit_problem, "Write the assembled problem as JSON");

  LpArgs lp_args;
  auto* lp = app.add_subcommand("lp-bound", "Closed-form linear programming bounds");
  lp->add_option("--method", lp_args.method)->required()->check(CLI::IsMember({"deg4", "deg6", "threedist", "qscheme"}));
  lp->add_option("--d", lp_args.d);
  lp->add_option("--alpha", lp_args.alpha);
  lp->add_option("--beta", lp_args.beta);
  lp->add_option("--gamma", lp_args.gamma);
  lp->add_option("--fiber", lp_args.fiber, "Fiber size v for the derived w = floor(bound/v)");

  std::string table_name;
  auto* table = app.add_subcommand("table", "Reproduce a bound table");
  table->add_option("name", table_name)->required()->check(CLI::IsMember({"hadamard", "qschemes"}));

  SchemeArgs scheme_args;
  auto* scheme = app.add_subcommand("scheme-check", "Positivity scan of an association scheme embedding");
  scheme->add_option("--fixture", scheme_args.fixtures, "Built-in fixture name");
  scheme->add_option("--fixture-file", cfg.input_paths, "JSON scheme file")->check(CLI::ExistingFile);
  add_p(scheme, "Largest degree k+l scanned (default 3)");
  scheme->add_option("--column", scheme_args.column, "Idempotent column (default from the fixture)");
  scheme->add_flag("--list", scheme_args.list, "List built-in fixtures");

  int twocode_d = 5;
  auto* two = app.add_subcommand("twocode-bound", "Closed-form bound for 2-codes with A(X) = {(d-1 +- i)/d}");
  two->add_option("--d", twocode_d)->required();

  SdsArgs sds_args;
  auto* sds = app.add_subcommand("sds", "Verify an SDS and build the tournament code");
  sds->add_option("--d", sds_args.d);
  sds->add_option("--x1", sds_args.x1, "Elements of X1 (space or comma separated; may be empty)")->expected(0, 1 << 16);
  sds->add_option("--x2", sds_args.x2, "Elements of X2 (space or comma separated; may be empty)")->expected(0, 1 << 16);
  sds->add_option("--search", sds_args.search, "List every skew-symmetric SDS with odd d <= N");
  sds->add_flag("--gram", sds_args.gram, "Print the exact Gram matrix");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
    cfg.validate();
    const std::string& s = cfg.subcommand;
    if (s == "jacobi") return run_jacobi(cfg, jacobi_args, out);
    if (s == "zonal") return run_zonal(cfg, zonal_args, out);
    if (s == "sdp-bound") return run_sdp_bound(cfg, sdp_args, out, err);
    if (s == "lp-bound") return run_lp_bound(cfg, lp_args, out, err);
    if (s == "table") return run_table(cfg, table_name, out);
    if (s == "scheme-check") return run_scheme_check(cfg, scheme_args, out, err);
    if (s == "twocode-bound") return run_twocode(cfg, twocode_d, out, err);
    if (s == "sds") return run_sds(cfg, sds_args, out, err);
    err << "error: unknown subcommand " << s << '\n';
    return kExitError;
  } catch (const PreconditionFailure& e) {
    err << "precondition failure: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace cscodes::cli
