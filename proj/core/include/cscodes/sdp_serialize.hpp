#pragma once

#include <nlohmann/json.hpp>

#include "cscodes/sdp_model.hpp"

namespace cscodes {

inline constexpr int kSerializedDigits = 30;

/// {d, radicand, A, p, orbits, objective, lp_rows, blocks}. Exact fields are
/// strings; block entries are lowered (unscaled) row-major decimal strings.
nlohmann::json problem_to_json(const SdpProblem& problem);

/// The exact part of a serialized problem plus its floating blocks.
struct SerializedProblem {
  int d = 2;
  mpz_class radicand{0};
  InnerProductSet A;
  int p = 2;
  std::vector<TripleOrbit> orbits;
  std::vector<Rational> objective;
  std::vector<LpRow> lp_rows;
  LmiProblem blocks;  // unscaled; no LP block
};

/// Throws std::invalid_argument on malformed documents.
SerializedProblem problem_from_json(const nlohmann::json& doc);

}  // namespace cscodes
