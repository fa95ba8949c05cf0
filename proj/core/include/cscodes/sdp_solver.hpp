#pragma once

// Dense primal-dual interior-point solver for
//   maximize c.x  subject to  F0_b + sum_j x_j F_j,b >= 0 (PSD) for every block b.
// Internally this is the dual standard form  max b'y : C - sum y_j A_j = Z >= 0
// with C = F0 and A_j = -F_j, paired with  min <C,X> : <A_j,X> = b_j, X >= 0.
// Iterates follow the HKM search direction with a Mehrotra predictor-corrector
// from an infeasible start X = xi I, Z = eta I.

#include <string>
#include <vector>

#include "cscodes/lmi.hpp"
#include "cscodes/sdp_model.hpp"

namespace cscodes {

struct SolverConfig {
  double tolerance = 1e-8;
  int max_iterations = 200;
  int precision_bits = kDefaultAssemblyPrecisionBits;
  double step_fraction = 0.98;
  /// |y| beyond this is treated as an unbounded objective.
  double divergence_threshold = 1e10;

  /// Throws std::invalid_argument unless tolerance > 0 and max_iterations > 0.
  void validate() const;
};

enum class SolveStatus { Optimal, Infeasible, IterationLimit, NumericalFailure };

std::string to_string(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::NumericalFailure;
  double primal_objective = 0;  // c.x at the returned x
  double dual_objective = 0;    // <C, X>, an upper bound when X is feasible
  double duality_gap = 0;       // |dual - primal|
  double max_block_violation = 0;
  double primal_infeasibility = 0;  // relative residual of <A_j, X> = b_j
  int iterations = 0;
  std::vector<double> x;
  std::string message;
  double tolerance = 0;

  /// max(primal, dual) + tolerance, rounded outward.
  double certified_max() const;
};

SolveResult solve(const LmiProblem& problem, const SolverConfig& config = {});

/// Lowers and solves; the code-size bound is 1 + certified_max().
SolveResult solve(const SdpProblem& problem, const SolverConfig& config = {});

double code_size_bound(const SolveResult& result);

struct BlockResidual {
  std::string label;
  double min_eigenvalue = 0;  // of the lowered, unit-scaled block
};

struct RowResidual {
  int k = 0;
  int l = 0;
  double slack = 0;  // constant + coefficients . x, unscaled
  double scale = 1;  // largest magnitude among the row's data
};

struct WitnessReport {
  std::vector<BlockResidual> blocks;  // counting and zonal blocks
  std::vector<RowResidual> rows;
  double min_variable = 0;
  double objective = 0;

  /// Every block eigenvalue and variable >= -tol, every row slack >= -tol * scale.
  bool feasible(double tol) const;
};

/// Throws std::invalid_argument when the assignment has the wrong dimension.
WitnessReport check_witness(const SdpProblem& problem, const std::vector<double>& assignment);

}  // namespace cscodes
