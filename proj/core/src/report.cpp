#include "cscodes/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace cscodes {

using nlohmann::json;

bool BoundReport::preconditions_hold() const {
  for (const auto& p : preconditions) {
    if (!p.pass) return false;
  }
  return true;
}

bool BoundReport::require(std::string condition, std::string evaluation, bool pass) {
  preconditions.push_back(Precondition{std::move(condition), std::move(evaluation), pass});
  return pass;
}

mpz_class floor_div(const Rational& value, long divisor) {
  if (divisor <= 0) throw std::domain_error("floor_div needs a positive divisor");
  return (value / Rational(divisor)).floor();
}

void BoundReport::set_bound(const Rational& value, const std::string& derived_name, const std::string& divisor_name,
                            long divisor) {
  exact_value = value;
  float_value = value.to_double();
  if (divisor > 0) derived = DerivedQuantity{derived_name, divisor_name, mpz_class(divisor), floor_div(value, divisor)};
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

json entries_json(const Entries& e) {
  json out = json::array();
  for (const auto& [k, v] : e) out.push_back(json::array({k, v}));
  return out;
}

Entries entries_from(const json& j) {
  Entries out;
  for (const json& item : j) out.emplace_back(item.at(0).get<std::string>(), item.at(1).get<std::string>());
  return out;
}

}  // namespace

json report_to_json(const BoundReport& r) {
  json doc;
  doc["method"] = r.method;
  doc["parameters"] = entries_json(r.parameters);
  doc["exact_value"] = r.exact_value ? json(r.exact_value->to_string()) : json(nullptr);
  doc["float_value"] = r.float_value ? json(format_double(*r.float_value)) : json(nullptr);
  json pre = json::array();
  for (const auto& p : r.preconditions) pre.push_back({{"condition", p.condition}, {"evaluation", p.evaluation}, {"pass", p.pass}});
  doc["preconditions"] = std::move(pre);
  doc["preconditions_hold"] = r.preconditions_hold();
  if (r.derived) {
    doc["derived"] = {{"name", r.derived->name},
                      {"divisor_name", r.derived->divisor_name},
                      {"divisor", r.derived->divisor.get_str()},
                      {"value", r.derived->value.get_str()}};
  } else {
    doc["derived"] = nullptr;
  }
  doc["diagnostics"] = entries_json(r.diagnostics);
  return doc;
}

BoundReport report_from_json(const json& doc) {
  try {
    BoundReport r;
    r.method = doc.at("method").get<std::string>();
    r.parameters = entries_from(doc.at("parameters"));
    if (!doc.at("exact_value").is_null()) r.exact_value = Rational::parse(doc.at("exact_value").get<std::string>());
    if (!doc.at("float_value").is_null()) r.float_value = std::strtod(doc.at("float_value").get<std::string>().c_str(), nullptr);
    for (const json& p : doc.at("preconditions")) {
      r.preconditions.push_back(Precondition{p.at("condition").get<std::string>(), p.at("evaluation").get<std::string>(),
                                             p.at("pass").get<bool>()});
    }
    if (!doc.at("derived").is_null()) {
      const json& d = doc.at("derived");
      r.derived = DerivedQuantity{d.at("name").get<std::string>(), d.at("divisor_name").get<std::string>(),
                                  mpz_class(d.at("divisor").get<std::string>()), mpz_class(d.at("value").get<std::string>())};
    }
    r.diagnostics = entries_from(doc.at("diagnostics"));
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed bound report: ") + e.what());
  }
}

std::string report_to_text(const BoundReport& r) {
  std::ostringstream os;
  os << "method: " << r.method << '\n';
  for (const auto& [k, v] : r.parameters) os << "  " << k << " = " << v << '\n';
  for (const auto& p : r.preconditions) {
    os << "  [" << (p.pass ? "pass" : "FAIL") << "] " << p.condition << "   (" << p.evaluation << ")\n";
  }
  if (r.exact_value) {
    os << "bound: " << r.exact_value->to_string() << " ~ " << format_double(*r.float_value) << '\n';
  } else if (r.float_value) {
    os << "bound: " << format_double(*r.float_value) << '\n';
  } else {
    os << "bound: none (conditions fail)\n";
  }
  if (r.derived) {
    os << r.derived->name << " <= floor(bound / " << r.derived->divisor_name << ") = " << r.derived->value.get_str() << '\n';
  }
  for (const auto& [k, v] : r.diagnostics) os << "  " << k << ": " << v << '\n';
  return os.str();
}

}  // namespace cscodes
