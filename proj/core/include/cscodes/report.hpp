#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cscodes/rational.hpp"

namespace cscodes {

struct Precondition {
  std::string condition;   // e.g. "(d+2)a^2 < 3"
  std::string evaluation;  // exact evaluation, e.g. "9/2 < 3"
  bool pass = false;

  friend bool operator==(const Precondition&, const Precondition&) = default;
};

/// floor(bound / divisor), e.g. f = floor(|X| / d).
struct DerivedQuantity {
  std::string name;
  std::string divisor_name;
  mpz_class divisor;
  mpz_class value;

  friend bool operator==(const DerivedQuantity& a, const DerivedQuantity& b) {
    return a.name == b.name && a.divisor_name == b.divisor_name && a.divisor == b.divisor && a.value == b.value;
  }
};

using Entries = std::vector<std::pair<std::string, std::string>>;

struct BoundReport {
  std::string method;
  Entries parameters;  // ordered
  std::optional<Rational> exact_value;
  std::optional<double> float_value;
  std::vector<Precondition> preconditions;
  std::optional<DerivedQuantity> derived;
  Entries diagnostics;  // free-form ordered details

  bool preconditions_hold() const;
  /// Adds a precondition and returns its pass flag.
  bool require(std::string condition, std::string evaluation, bool pass);
  /// Sets exact and float values and, when divisor > 0, the derived floor.
  void set_bound(const Rational& value, const std::string& derived_name = "", const std::string& divisor_name = "",
                 long divisor = 0);

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

mpz_class floor_div(const Rational& value, long divisor);

nlohmann::json report_to_json(const BoundReport& report);
/// Throws std::invalid_argument on malformed input.
BoundReport report_from_json(const nlohmann::json& doc);
std::string report_to_text(const BoundReport& report);

/// "%.17g" rendering used for every floating field, so output is reproducible.
std::string format_double(double x);

}  // namespace cscodes
