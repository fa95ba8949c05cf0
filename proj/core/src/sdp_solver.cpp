#include "cscodes/sdp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cscodes {

void LmiProblem::validate() const {
  const std::size_t nv = objective.size();
  if (!variable_labels.empty() && variable_labels.size() != nv) {
    throw std::invalid_argument("variable label count does not match objective");
  }
  for (const LmiBlock& b : blocks) {
    const Eigen::Index n = b.constant.rows();
    if (b.constant.cols() != n) throw std::invalid_argument("block " + b.label + " is not square");
    if (b.coefficients.size() != nv) throw std::invalid_argument("block " + b.label + " has wrong coefficient count");
    auto symmetric = [](const Eigen::MatrixXd& m) {
      const double s = std::max(1.0, m.cwiseAbs().maxCoeff());
      return (m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * s;
    };
    if (!symmetric(b.constant)) throw std::invalid_argument("block " + b.label + " constant is not symmetric");
    for (const auto& f : b.coefficients) {
      if (f.rows() != n || f.cols() != n) throw std::invalid_argument("block " + b.label + " coefficient has wrong size");
      if (!symmetric(f)) throw std::invalid_argument("block " + b.label + " coefficient is not symmetric");
    }
  }
}

void SolverConfig::validate() const {
  if (!(tolerance > 0)) throw std::invalid_argument("solver tolerance must be positive");
  if (max_iterations <= 0) throw std::invalid_argument("solver max_iterations must be positive");
  if (!(step_fraction > 0 && step_fraction < 1)) throw std::invalid_argument("step fraction must lie in (0,1)");
}

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::IterationLimit: return "iteration_limit";
    case SolveStatus::NumericalFailure: return "numerical_failure";
  }
  return "unknown";
}

double SolveResult::certified_max() const { return std::max(primal_objective, dual_objective) + tolerance; }

double code_size_bound(const SolveResult& result) { return 1.0 + result.certified_max(); }

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using Blocks = std::vector<MatrixXd>;

struct StandardForm {
  Blocks C;
  std::vector<Blocks> A;  // A[b][j]
  VectorXd b;
  Index total_dim = 0;
};

StandardForm standard_form(const LmiProblem& problem) {
  const auto nv = static_cast<Index>(problem.num_variables());
  StandardForm sf;
  sf.b = VectorXd::Zero(nv);
  for (Index j = 0; j < nv; ++j) sf.b(j) = problem.objective[static_cast<std::size_t>(j)];
  for (const LmiBlock& blk : problem.blocks) {
    sf.C.push_back(blk.constant);
    Blocks a;
    for (const auto& f : blk.coefficients) a.push_back(-f);
    sf.A.push_back(std::move(a));
  }
  if (problem.nonnegative && nv > 0) {
    sf.C.push_back(MatrixXd::Zero(nv, nv));
    Blocks a(static_cast<std::size_t>(nv), MatrixXd::Zero(nv, nv));
    for (Index j = 0; j < nv; ++j) a[static_cast<std::size_t>(j)](j, j) = -1.0;
    sf.A.push_back(std::move(a));
  }
  for (const auto& c : sf.C) sf.total_dim += c.rows();
  return sf;
}

double inner(const Blocks& x, const Blocks& y) {
  double s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k].cwiseProduct(y[k]).sum();
  return s;
}

double frob(const Blocks& x) { return std::sqrt(inner(x, x)); }

VectorXd apply_A(const StandardForm& sf, const Blocks& w) {
  VectorXd out = VectorXd::Zero(sf.b.size());
  for (std::size_t k = 0; k < sf.C.size(); ++k) {
    for (Index j = 0; j < out.size(); ++j) out(j) += sf.A[k][static_cast<std::size_t>(j)].cwiseProduct(w[k]).sum();
  }
  return out;
}

Blocks apply_At(const StandardForm& sf, const VectorXd& y) {
  Blocks out;
  for (std::size_t k = 0; k < sf.C.size(); ++k) {
    MatrixXd s = MatrixXd::Zero(sf.C[k].rows(), sf.C[k].cols());
    for (Index j = 0; j < y.size(); ++j) s += y(j) * sf.A[k][static_cast<std::size_t>(j)];
    out.push_back(std::move(s));
  }
  return out;
}

double min_eigenvalue(const MatrixXd& m) {
  if (m.rows() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

/// Largest alpha with X + alpha dX PSD (infinity if unbounded); X must be PD.
double max_step(const Blocks& x, const Blocks& dx) {
  double alpha = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < x.size(); ++k) {
    Eigen::LLT<MatrixXd> llt(x[k]);
    if (llt.info() != Eigen::Success) return 0;
    MatrixXd lm = llt.matrixL().solve(dx[k]);
    lm = llt.matrixL().solve(lm.transpose()).transpose();
    const double lam = min_eigenvalue(0.5 * (lm + lm.transpose()));
    if (lam < 0) alpha = std::min(alpha, -1.0 / lam);
  }
  return alpha;
}

}  // namespace

SolveResult solve(const LmiProblem& problem, const SolverConfig& config) {
  config.validate();
  problem.validate();
  const StandardForm sf = standard_form(problem);
  const auto nv = static_cast<Index>(sf.b.size());
  const std::size_t nb = sf.C.size();

  SolveResult result;
  result.tolerance = config.tolerance;
  result.x.assign(static_cast<std::size_t>(nv), 0.0);
  if (nv == 0) {
    result.status = SolveStatus::Optimal;
    result.message = "no variables";
    return result;
  }

  const double n = static_cast<double>(std::max<Index>(sf.total_dim, 1));
  const double norm_b = sf.b.norm();
  const double norm_c = frob(sf.C);
  double max_a = 0;
  for (Index j = 0; j < nv; ++j) {
    double s = 0;
    for (std::size_t k = 0; k < nb; ++k) s += sf.A[k][static_cast<std::size_t>(j)].squaredNorm();
    max_a = std::max(max_a, std::sqrt(s));
  }
  double xi = std::max({10.0, std::sqrt(n)});
  for (Index j = 0; j < nv; ++j) xi = std::max(xi, std::sqrt(n) * (1 + std::abs(sf.b(j))) / (1 + max_a));
  const double eta = std::max({10.0, std::sqrt(n), norm_c, max_a});

  Blocks X, Z;
  for (const auto& c : sf.C) {
    X.push_back(xi * MatrixXd::Identity(c.rows(), c.cols()));
    Z.push_back(eta * MatrixXd::Identity(c.rows(), c.cols()));
  }
  VectorXd y = VectorXd::Zero(nv);
  const double tol = config.tolerance;
  int stalled = 0;

  auto finish = [&](SolveStatus status, std::string message, int iter) {
    result.status = status;
    result.message = std::move(message);
    result.iterations = iter;
    for (Index j = 0; j < nv; ++j) result.x[static_cast<std::size_t>(j)] = y(j);
    return result;
  };

  for (int iter = 0;; ++iter) {
    const VectorXd ax = apply_A(sf, X);
    const VectorXd rp = sf.b - ax;
    const Blocks aty = apply_At(sf, y);
    Blocks rd(nb);
    double violation = 0;
    for (std::size_t k = 0; k < nb; ++k) {
      rd[k] = sf.C[k] - Z[k] - aty[k];
      violation = std::max(violation, -min_eigenvalue(sf.C[k] - aty[k]));
    }
    const double dobj = sf.b.dot(y);
    const double pobj = inner(sf.C, X);
    result.primal_objective = dobj;
    result.dual_objective = pobj;
    result.duality_gap = std::abs(pobj - dobj);
    result.max_block_violation = std::max(0.0, violation);
    result.primal_infeasibility = rp.norm() / (1 + norm_b);
    if (!std::isfinite(dobj) || !std::isfinite(pobj)) return finish(SolveStatus::NumericalFailure, "non-finite iterate", iter);

    if (result.duality_gap <= tol * (1 + std::abs(dobj)) && result.primal_infeasibility <= tol &&
        result.max_block_violation <= tol) {
      return finish(SolveStatus::Optimal, "converged", iter);
    }
    // A diverging X with <C,X> -> -inf is a Farkas ray: no x satisfies the blocks.
    if (frob(X) > config.divergence_threshold && pobj < 0) {
      return finish(SolveStatus::Infeasible, "no point satisfies the matrix inequalities", iter);
    }
    if (y.cwiseAbs().maxCoeff() > config.divergence_threshold) {
      return finish(SolveStatus::Infeasible, "objective unbounded on the feasible set", iter);
    }
    if (iter >= config.max_iterations) return finish(SolveStatus::IterationLimit, "iteration limit reached", iter);

    const double mu = inner(X, Z) / n;
    Blocks zinv(nb);
    for (std::size_t k = 0; k < nb; ++k) {
      Eigen::LLT<MatrixXd> llt(Z[k]);
      if (llt.info() != Eigen::Success) return finish(SolveStatus::NumericalFailure, "slack matrix lost definiteness", iter);
      zinv[k] = llt.solve(MatrixXd::Identity(Z[k].rows(), Z[k].cols()));
      zinv[k] = 0.5 * (zinv[k] + zinv[k].transpose());
    }

    // Schur complement M_ij = tr(A_i X A_j Z^-1).
    MatrixXd M = MatrixXd::Zero(nv, nv);
    for (std::size_t k = 0; k < nb; ++k) {
      for (Index j = 0; j < nv; ++j) {
        const MatrixXd& aj = sf.A[k][static_cast<std::size_t>(j)];
        if (aj.cwiseAbs().maxCoeff() == 0) continue;
        const MatrixXd g = X[k] * aj * zinv[k];
        for (Index i = 0; i <= j; ++i) M(i, j) += sf.A[k][static_cast<std::size_t>(i)].cwiseProduct(g).sum();
      }
    }
    M = M.selfadjointView<Eigen::Upper>();
    Eigen::LDLT<MatrixXd> ldlt(M);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
      return finish(SolveStatus::NumericalFailure, "Schur complement factorization failed", iter);
    }

    Blocks xrdz(nb);
    for (std::size_t k = 0; k < nb; ++k) xrdz[k] = X[k] * rd[k] * zinv[k];
    const VectorXd base_rhs = sf.b + apply_A(sf, xrdz);

    auto direction = [&](double sigma, const Blocks* corr, VectorXd& dy, Blocks& dX, Blocks& dZ) {
      VectorXd rhs = base_rhs - sigma * mu * apply_A(sf, zinv);
      if (corr != nullptr) rhs += apply_A(sf, *corr);
      dy = ldlt.solve(rhs);
      const Blocks atdy = apply_At(sf, dy);
      dX.assign(nb, MatrixXd());
      dZ.assign(nb, MatrixXd());
      for (std::size_t k = 0; k < nb; ++k) {
        dZ[k] = rd[k] - atdy[k];
        MatrixXd d = sigma * mu * zinv[k] - X[k] - X[k] * dZ[k] * zinv[k];
        if (corr != nullptr) d -= (*corr)[k];
        dX[k] = 0.5 * (d + d.transpose());
      }
    };

    VectorXd dy;
    Blocks dXa, dZa;
    direction(0.0, nullptr, dy, dXa, dZa);
    const double ap = std::min(1.0, max_step(X, dXa));
    const double ad = std::min(1.0, max_step(Z, dZa));
    Blocks xa(nb), za(nb);
    for (std::size_t k = 0; k < nb; ++k) {
      xa[k] = X[k] + ap * dXa[k];
      za[k] = Z[k] + ad * dZa[k];
    }
    const double ratio = std::max(0.0, inner(xa, za) / (mu * n));
    const double sigma = std::min(1.0, ratio * ratio * ratio);

    Blocks corr(nb);
    for (std::size_t k = 0; k < nb; ++k) corr[k] = dXa[k] * dZa[k] * zinv[k];
    Blocks dX, dZ;
    direction(sigma, &corr, dy, dX, dZ);
    if (!dy.allFinite()) return finish(SolveStatus::NumericalFailure, "non-finite search direction", iter);

    double step_p = std::min(1.0, config.step_fraction * max_step(X, dX));
    double step_d = std::min(1.0, config.step_fraction * max_step(Z, dZ));
    // Rounding can push a near-singular block out of the cone even inside the
    // computed step; back off until both new iterates factor.
    Blocks xn(nb), zn(nb);
    for (int backoff = 0;; ++backoff) {
      bool definite = true;
      for (std::size_t k = 0; k < nb && definite; ++k) {
        xn[k] = X[k] + step_p * dX[k];
        zn[k] = Z[k] + step_d * dZ[k];
        xn[k] = 0.5 * (xn[k] + xn[k].transpose());
        zn[k] = 0.5 * (zn[k] + zn[k].transpose());
        definite = Eigen::LLT<MatrixXd>(xn[k]).info() == Eigen::Success &&
                   Eigen::LLT<MatrixXd>(zn[k]).info() == Eigen::Success;
      }
      if (definite) break;
      if (backoff >= 30) return finish(SolveStatus::NumericalFailure, "iterates left the cone", iter);
      step_p *= 0.5;
      step_d *= 0.5;
    }
    X = std::move(xn);
    Z = std::move(zn);
    y += step_d * dy;

    stalled = (step_p < 1e-9 && step_d < 1e-9) ? stalled + 1 : 0;
    if (stalled >= 5) return finish(SolveStatus::NumericalFailure, "step length collapsed", iter + 1);
  }
}

SolveResult solve(const SdpProblem& problem, const SolverConfig& config) {
  if (config.precision_bits == problem.options.precision_bits) return solve(lower(problem), config);
  SdpProblem repriced = problem;
  repriced.options.precision_bits = config.precision_bits;
  return solve(lower(repriced), config);
}

bool WitnessReport::feasible(double tol) const {
  if (min_variable < -tol) return false;
  for (const auto& b : blocks) {
    if (b.min_eigenvalue < -tol) return false;
  }
  for (const auto& r : rows) {
    if (r.slack < -tol * r.scale) return false;
  }
  return true;
}

WitnessReport check_witness(const SdpProblem& problem, const std::vector<double>& assignment) {
  if (assignment.size() != problem.num_variables()) {
    throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) + " values, problem has " +
                                std::to_string(problem.num_variables()) + " variables");
  }
  WitnessReport report;
  const LmiProblem lowered = lower(problem);
  for (const LmiBlock& b : lowered.blocks) {
    if (b.label == "lp") continue;
    MatrixXd f = b.constant;
    for (std::size_t j = 0; j < assignment.size(); ++j) f += assignment[j] * b.coefficients[j];
    report.blocks.push_back(BlockResidual{b.label, min_eigenvalue(0.5 * (f + f.transpose()))});
  }
  for (const LpRow& row : problem.lp_rows) {
    RowResidual r{row.k, row.l, row.constant.to_double(), std::abs(row.constant.to_double())};
    for (std::size_t j = 0; j < assignment.size(); ++j) {
      const double c = row.coefficients[j].to_double();
      r.slack += c * assignment[j];
      r.scale = std::max(r.scale, std::abs(c) * std::max(1.0, std::abs(assignment[j])));
    }
    report.rows.push_back(r);
  }
  report.min_variable = assignment.empty() ? 0 : *std::min_element(assignment.begin(), assignment.end());
  for (std::size_t j = 0; j < assignment.size(); ++j) report.objective += problem.variables[j].objective.to_double() * assignment[j];
  return report;
}

}  // namespace cscodes
