#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cscodes {

/// F0 + sum_j x_j F_j >= 0 (PSD), real symmetric.
struct LmiBlock {
  std::string label;
  Eigen::MatrixXd constant;
  std::vector<Eigen::MatrixXd> coefficients;  // one per variable
};

/// maximize objective . x subject to every block being PSD and, when
/// `nonnegative` is set, x >= 0 componentwise.
struct LmiProblem {
  std::vector<double> objective;
  std::vector<LmiBlock> blocks;
  bool nonnegative = true;
  std::vector<std::string> variable_labels;

  std::size_t num_variables() const { return objective.size(); }
  /// Throws std::invalid_argument on dimension or symmetry errors.
  void validate() const;
};

}  // namespace cscodes
