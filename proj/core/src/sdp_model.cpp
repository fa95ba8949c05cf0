#include "cscodes/sdp_model.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <stdexcept>

#include "cscodes/harmonics.hpp"
#include "cscodes/parallel.hpp"

namespace cscodes {

namespace {

const QuadComplex kOne{1};

DenseMatrix<QuadComplex> zero_matrix(std::size_t n) { return DenseMatrix<QuadComplex>(n, n, QuadComplex(0)); }

bool all_zero(const DenseMatrix<QuadComplex>& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const QuadComplex& x) { return x == QuadComplex(0); });
}

bool all_real(const DenseMatrix<QuadComplex>& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const QuadComplex& x) { return x.is_real(); });
}

std::vector<Triple> closure(const Triple& seed, bool with_conjugation) {
  std::set<Triple> seen{seed};
  std::deque<Triple> queue{seed};
  while (!queue.empty()) {
    const Triple cur = queue.front();
    queue.pop_front();
    const auto images = symmetry_images(cur);
    std::vector<Triple> next(images.begin(), images.end());
    if (with_conjugation) next.push_back(Triple{cur.u.conj(), cur.v.conj(), cur.t.conj()});
    for (const Triple& n : next) {
      if (seen.insert(n).second) queue.push_back(n);
    }
  }
  return {seen.begin(), seen.end()};
}

Eigen::MatrixXd lowered_double(const DenseMatrix<QuadComplex>& h, bool realify_complex, int bits) {
  if (realify_complex) return realify(h, bits);
  Eigen::MatrixXd out(static_cast<Eigen::Index>(h.rows()), static_cast<Eigen::Index>(h.cols()));
  for (std::size_t r = 0; r < h.rows(); ++r) {
    for (std::size_t c = 0; c < h.cols(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = qc_to_float(h(r, c), bits).re.to_double();
    }
  }
  return out;
}

}  // namespace

InnerProductSet::InnerProductSet(std::vector<QuadComplex> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (const QuadComplex& x : values) {
    if (x == kOne) throw std::invalid_argument("inner product set may not contain 1");
    if (x.norm() > Rational(1)) throw std::invalid_argument("inner product " + x.to_string() + " has modulus > 1");
    if (!x.is_real()) {
      if (radicand_ == 0) {
        radicand_ = x.radicand();
      } else if (radicand_ != x.radicand()) {
        throw std::invalid_argument("inner products use different radicands");
      }
    }
  }
  for (const QuadComplex& x : values) {
    if (!std::binary_search(values.begin(), values.end(), x.conj())) {
      throw std::invalid_argument("inner product set is not closed under conjugation: missing " + x.conj().to_string());
    }
  }
  values_ = std::move(values);
}

InnerProductSet InnerProductSet::parse(const std::vector<std::string>& values) {
  std::vector<QuadComplex> parsed;
  parsed.reserve(values.size());
  for (const auto& s : values) parsed.push_back(QuadComplex::parse(s));
  return InnerProductSet(std::move(parsed));
}

bool InnerProductSet::contains(const QuadComplex& x) const {
  return std::binary_search(values_.begin(), values_.end(), x);
}

std::vector<std::string> InnerProductSet::to_strings() const {
  std::vector<std::string> out;
  out.reserve(values_.size());
  for (const auto& x : values_) out.push_back(x.to_string());
  return out;
}

std::string Triple::to_string() const { return "(" + u.to_string() + ", " + v.to_string() + ", " + t.to_string() + ")"; }

Rational triple_determinant(const Triple& x) {
  const QuadComplex cross = x.u * x.v.conj() * x.t;
  return Rational(1) - x.u.norm() - x.v.norm() - x.t.norm() + Rational(2) * cross.real();
}

bool is_psd_triple(const Triple& x) {
  // A Hermitian 3x3 matrix with unit diagonal is PSD iff its 2x2 principal
  // minors and determinant are nonnegative.
  return x.u.norm() <= Rational(1) && x.v.norm() <= Rational(1) && x.t.norm() <= Rational(1) &&
         triple_determinant(x).sign() >= 0;
}

std::array<Triple, 6> symmetry_images(const Triple& x) {
  const QuadComplex& u = x.u;
  const QuadComplex& v = x.v;
  const QuadComplex& t = x.t;
  return {Triple{u, v, t},
          Triple{v, u, t.conj()},
          Triple{t.conj(), v.conj(), u.conj()},
          Triple{v.conj(), t.conj(), u},
          Triple{u.conj(), t, v},
          Triple{t, u.conj(), v.conj()}};
}

std::vector<Triple> valid_triples(const InnerProductSet& A) {
  std::vector<Triple> out;
  for (const auto& u : A.values()) {
    for (const auto& v : A.values()) {
      for (const auto& t : A.values()) {
        Triple x{u, v, t};
        if (is_psd_triple(x)) out.push_back(std::move(x));
      }
    }
  }
  return out;
}

std::vector<TripleOrbit> orbits(const InnerProductSet& A, const std::vector<Triple>& D) {
  const std::set<Triple> domain(D.begin(), D.end());
  std::set<Triple> assigned;
  std::vector<TripleOrbit> out;
  for (const Triple& x : domain) {
    if (assigned.count(x) != 0) continue;
    std::vector<Triple> members = closure(x, false);
    for (const Triple& m : members) {
      if (domain.count(m) == 0 || !A.contains(m.u) || !A.contains(m.v) || !A.contains(m.t)) {
        throw std::logic_error("symmetry image " + m.to_string() + " of " + x.to_string() + " leaves the triple set");
      }
      assigned.insert(m);
    }
    out.push_back(TripleOrbit{members.front(), std::move(members), OrbitKind::Generic});
  }
  return out;
}

std::vector<TripleOrbit> diagonal_orbits(const InnerProductSet& A) {
  std::set<Triple> assigned;
  std::vector<TripleOrbit> out;
  for (const QuadComplex& u : A.values()) {
    const Triple seed{u, u, kOne};
    if (assigned.count(seed) != 0) continue;
    std::vector<Triple> members = closure(seed, true);
    const std::set<Triple> expected{Triple{u, u, kOne},        Triple{u.conj(), u.conj(), kOne},
                                    Triple{u, kOne, u.conj()}, Triple{u.conj(), kOne, u},
                                    Triple{kOne, u, u},        Triple{kOne, u.conj(), u.conj()}};
    if (std::set<Triple>(members.begin(), members.end()) != expected) {
      throw std::logic_error("diagonal closure of " + seed.to_string() + " is inconsistent");
    }
    assigned.insert(members.begin(), members.end());
    out.push_back(TripleOrbit{members.front(), std::move(members), OrbitKind::Diagonal});
  }
  std::sort(out.begin(), out.end(), [](const TripleOrbit& a, const TripleOrbit& b) { return a.representative < b.representative; });
  return out;
}

bool ExactBlock::is_real() const {
  return all_real(constant) && std::all_of(coefficients.begin(), coefficients.end(), all_real);
}

bool ExactBlock::is_zero() const {
  return all_zero(constant) && std::all_of(coefficients.begin(), coefficients.end(), all_zero);
}

std::vector<Rational> SdpProblem::objective() const {
  std::vector<Rational> out;
  out.reserve(variables.size());
  for (const auto& v : variables) out.push_back(v.objective);
  return out;
}

int zonal_block_size(int p, int i, int j) {
  if (i < 0 || j < 0 || i + j > p) throw std::domain_error("zonal block indices outside truncation");
  return (p - i - j) / 2 + 1;
}

SdpProblem build_problem(int d, const InnerProductSet& A, int p, const BuildOptions& options) {
  if (d < 2) throw std::domain_error("build_problem needs d >= 2");
  if (p < 2) throw std::domain_error("build_problem needs truncation p >= 2");

  SdpProblem problem;
  problem.d = d;
  problem.A = A;
  problem.p = p;
  problem.options = options;

  for (TripleOrbit& orbit : diagonal_orbits(A)) {
    Rational count(0);
    for (const Triple& m : orbit.members) {
      if (m.t == kOne && m.u == m.v) count += Rational(1);
    }
    std::string label = "x" + orbit.representative.to_string();
    problem.variables.push_back(SdpVariable{std::move(orbit), count, std::move(label)});
  }
  std::vector<Triple> D;
  if (options.psd_triples_only) {
    D = valid_triples(A);
  } else {
    for (const auto& u : A.values()) {
      for (const auto& v : A.values()) {
        for (const auto& t : A.values()) D.push_back(Triple{u, v, t});
      }
    }
  }
  for (TripleOrbit& orbit : orbits(A, D)) {
    std::string label = "x" + orbit.representative.to_string();
    problem.variables.push_back(SdpVariable{std::move(orbit), Rational(0), std::move(label)});
  }
  const std::size_t nv = problem.variables.size();

  // Counting block.
  ExactBlock& counting = problem.counting_block;
  counting.label = "counting";
  counting.constant = zero_matrix(2);
  counting.constant(0, 0) = QuadComplex(1);
  for (const SdpVariable& var : problem.variables) {
    DenseMatrix<QuadComplex> f = zero_matrix(2);
    if (var.orbit.kind == OrbitKind::Diagonal) {
      f(0, 1) = f(1, 0) = f(1, 1) = QuadComplex(var.objective);
    } else {
      f(1, 1) = QuadComplex(Rational(static_cast<long>(var.orbit.members.size())));
    }
    counting.coefficients.push_back(std::move(f));
  }

  // LP rows; (l,k) is the conjugate of (k,l) over a conjugation-closed sum.
  for (int k = 0; k <= p; ++k) {
    for (int l = 0; l <= k; ++l) {
      if (k == 0 && l == 0) continue;
      const JacobiSpec g = jacobi(d, k, l);
      LpRow row{k, l, g.at_one(), std::vector<Rational>(nv, Rational(0))};
      for (std::size_t v = 0; v < nv; ++v) {
        const SdpVariable& var = problem.variables[v];
        if (var.orbit.kind != OrbitKind::Diagonal) continue;
        QuadComplex sum(0);
        for (const Triple& m : var.orbit.members) {
          if (m.t == kOne && m.u == m.v) sum += jacobi_eval(g, m.u);
        }
        if (!sum.is_real()) throw std::logic_error("LP row imaginary parts failed to cancel");
        row.coefficients[v] = sum.real();
      }
      problem.lp_rows.push_back(std::move(row));
    }
  }

  // Zonal blocks.
  std::vector<std::pair<int, int>> indices;
  for (int i = 0; i <= p; ++i) {
    for (int j = 0; i + j <= p; ++j) {
      if (j > i && !options.include_transposed_blocks) continue;
      if (d == 2 && (i != 0 || j != 0)) continue;
      indices.emplace_back(i, j);
    }
  }
  std::sort(indices.begin(), indices.end(), [](auto a, auto b) {
    return std::make_pair(a.first + a.second, a) < std::make_pair(b.first + b.second, b);
  });
  problem.zonal_blocks.resize(indices.size());
  parallel_for(indices.size(), options.workers, [&](std::size_t n) {
    const auto [i, j] = indices[n];
    const ZonalKernel kernel(ZonalBlockSpec{d, i, j, zonal_block_size(p, i, j), options.inner});
    ExactBlock block;
    block.label = "zonal(" + std::to_string(i) + "," + std::to_string(j) + ")";
    block.i = i;
    block.j = j;
    block.constant = kernel.matrix(kOne, kOne, kOne);
    for (const SdpVariable& var : problem.variables) {
      DenseMatrix<QuadComplex> f = zero_matrix(static_cast<std::size_t>(kernel.spec().m));
      for (const Triple& m : var.orbit.members) f += kernel.matrix(m.u, m.v, m.t);
      if (!is_hermitian(f)) throw std::logic_error(block.label + " coefficient of " + var.label + " is not Hermitian");
      block.coefficients.push_back(std::move(f));
    }
    problem.zonal_blocks[n] = std::move(block);
  });

  // Feasibility at x = 0.
  for (const LpRow& row : problem.lp_rows) {
    if (row.constant.sign() < 0) throw std::logic_error("LP row constant is negative");
  }
  for (const ExactBlock& block : problem.zonal_blocks) {
    const bool base = block.i == 0 && block.j == 0;
    for (const QuadComplex& x : block.constant.data()) {
      if (x != QuadComplex(base ? 1 : 0)) throw std::logic_error(block.label + " is not PSD at x = 0");
    }
  }
  return problem;
}

std::vector<std::string> lowered_decimal_entries(const DenseMatrix<QuadComplex>& h, bool realify_complex,
                                                 int precision_bits, int significant_digits) {
  const std::size_t m = h.rows();
  const std::size_t n = realify_complex ? 2 * m : m;
  std::vector<std::string> out(n * n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      const BigComplex z = qc_to_float(h(r, c), precision_bits);
      const std::string re = z.re.to_string(significant_digits);
      if (!realify_complex) {
        out[r * n + c] = re;
        continue;
      }
      const std::string im = z.im.to_string(significant_digits);
      const std::string neg_im = qc_to_float(h(r, c).conj(), precision_bits).im.to_string(significant_digits);
      out[r * n + c] = re;
      out[(r + m) * n + (c + m)] = re;
      out[r * n + (c + m)] = neg_im;
      out[(r + m) * n + c] = im;
    }
  }
  return out;
}

LmiProblem lower(const SdpProblem& problem) {
  const std::size_t nv = problem.num_variables();
  const int bits = problem.options.precision_bits;
  LmiProblem out;
  out.nonnegative = true;
  for (const SdpVariable& var : problem.variables) {
    out.objective.push_back(var.objective.to_double());
    out.variable_labels.push_back(var.label);
  }

  auto push_block = [&](const ExactBlock& block) {
    if (block.is_zero()) return;
    const bool complex = !block.is_real();
    LmiBlock lowered;
    lowered.label = block.label;
    lowered.constant = lowered_double(block.constant, complex, bits);
    double scale = lowered.constant.cwiseAbs().maxCoeff();
    for (const auto& f : block.coefficients) {
      lowered.coefficients.push_back(lowered_double(f, complex, bits));
      scale = std::max(scale, lowered.coefficients.back().cwiseAbs().maxCoeff());
    }
    if (scale > 0) {
      lowered.constant /= scale;
      for (auto& f : lowered.coefficients) f /= scale;
    }
    out.blocks.push_back(std::move(lowered));
  };

  push_block(problem.counting_block);
  for (const ExactBlock& block : problem.zonal_blocks) push_block(block);

  // LP rows: each row scaled to unit max-magnitude, as one diagonal block.
  const auto rows = static_cast<Eigen::Index>(problem.lp_rows.size());
  if (rows > 0) {
    LmiBlock lp;
    lp.label = "lp";
    lp.constant = Eigen::MatrixXd::Zero(rows, rows);
    lp.coefficients.assign(nv, Eigen::MatrixXd::Zero(rows, rows));
    for (Eigen::Index r = 0; r < rows; ++r) {
      const LpRow& row = problem.lp_rows[static_cast<std::size_t>(r)];
      double scale = std::abs(row.constant.to_double());
      for (const auto& c : row.coefficients) scale = std::max(scale, std::abs(c.to_double()));
      if (scale == 0) scale = 1;
      lp.constant(r, r) = row.constant.to_double() / scale;
      for (std::size_t v = 0; v < nv; ++v) lp.coefficients[v](r, r) = row.coefficients[v].to_double() / scale;
    }
    out.blocks.push_back(std::move(lp));
  }
  out.validate();
  return out;
}

}  // namespace cscodes
