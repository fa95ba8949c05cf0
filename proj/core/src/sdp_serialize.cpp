#include "cscodes/sdp_serialize.hpp"

#include <cstdlib>
#include <stdexcept>

namespace cscodes {

namespace {

using nlohmann::json;

json triple_json(const Triple& x) { return json::array({x.u.to_string(), x.v.to_string(), x.t.to_string()}); }

Triple triple_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("triple must be an array of three strings");
  return Triple{QuadComplex::parse(j[0].get<std::string>()), QuadComplex::parse(j[1].get<std::string>()),
                QuadComplex::parse(j[2].get<std::string>())};
}

Eigen::MatrixXd matrix_from(const json& entries, Eigen::Index n) {
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n * n)) {
    throw std::invalid_argument("block entry count does not match its size");
  }
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const std::string s = entries[static_cast<std::size_t>(r * n + c)].get<std::string>();
      char* end = nullptr;
      out(r, c) = std::strtod(s.c_str(), &end);
      if (end == s.c_str() || *end != '\0') throw std::invalid_argument("bad decimal entry '" + s + "'");
    }
  }
  return out;
}

}  // namespace

json problem_to_json(const SdpProblem& problem) {
  json doc;
  doc["d"] = problem.d;
  doc["radicand"] = problem.A.radicand().get_str();
  doc["A"] = problem.A.to_strings();
  doc["p"] = problem.p;

  json orbits = json::array();
  for (const SdpVariable& var : problem.variables) {
    json members = json::array();
    for (const Triple& m : var.orbit.members) members.push_back(triple_json(m));
    orbits.push_back({{"kind", var.orbit.kind == OrbitKind::Diagonal ? "diagonal" : "generic"},
                      {"representative", triple_json(var.orbit.representative)},
                      {"members", std::move(members)}});
  }
  doc["orbits"] = std::move(orbits);

  json objective = json::array();
  for (const Rational& c : problem.objective()) objective.push_back(c.to_string());
  doc["objective"] = std::move(objective);

  json rows = json::array();
  for (const LpRow& row : problem.lp_rows) {
    json coeffs = json::array();
    for (const Rational& c : row.coefficients) coeffs.push_back(c.to_string());
    rows.push_back({{"k", row.k}, {"l", row.l}, {"constant", row.constant.to_string()}, {"coefficients", std::move(coeffs)}});
  }
  doc["lp_rows"] = std::move(rows);

  const int bits = problem.options.precision_bits;
  json blocks = json::array();
  auto emit = [&](const ExactBlock& block) {
    const bool complex = !block.is_real();
    const std::size_t n = complex ? 2 * block.constant.rows() : block.constant.rows();
    json coeffs = json::array();
    for (const auto& f : block.coefficients) coeffs.push_back(lowered_decimal_entries(f, complex, bits, kSerializedDigits));
    blocks.push_back({{"label", block.label},
                      {"i", block.i},
                      {"j", block.j},
                      {"size", n},
                      {"constant", lowered_decimal_entries(block.constant, complex, bits, kSerializedDigits)},
                      {"coefficients", std::move(coeffs)}});
  };
  emit(problem.counting_block);
  for (const ExactBlock& block : problem.zonal_blocks) emit(block);
  doc["blocks"] = std::move(blocks);
  return doc;
}

SerializedProblem problem_from_json(const json& doc) {
  try {
    SerializedProblem out;
    out.d = doc.at("d").get<int>();
    out.radicand = mpz_class(doc.at("radicand").get<std::string>());
    out.A = InnerProductSet::parse(doc.at("A").get<std::vector<std::string>>());
    out.p = doc.at("p").get<int>();
    if (out.A.radicand() != out.radicand) throw std::invalid_argument("radicand does not match A");
    for (const json& o : doc.at("orbits")) {
      TripleOrbit orbit;
      orbit.kind = o.at("kind").get<std::string>() == "diagonal" ? OrbitKind::Diagonal : OrbitKind::Generic;
      orbit.representative = triple_from(o.at("representative"));
      for (const json& m : o.at("members")) orbit.members.push_back(triple_from(m));
      out.orbits.push_back(std::move(orbit));
    }
    for (const json& c : doc.at("objective")) out.objective.push_back(Rational::parse(c.get<std::string>()));
    for (const json& r : doc.at("lp_rows")) {
      LpRow row{r.at("k").get<int>(), r.at("l").get<int>(), Rational::parse(r.at("constant").get<std::string>()), {}};
      for (const json& c : r.at("coefficients")) row.coefficients.push_back(Rational::parse(c.get<std::string>()));
      out.lp_rows.push_back(std::move(row));
    }
    out.blocks.objective.clear();
    for (const Rational& c : out.objective) out.blocks.objective.push_back(c.to_double());
    for (const json& b : doc.at("blocks")) {
      const auto n = b.at("size").get<Eigen::Index>();
      LmiBlock block;
      block.label = b.at("label").get<std::string>();
      block.constant = matrix_from(b.at("constant"), n);
      for (const json& f : b.at("coefficients")) block.coefficients.push_back(matrix_from(f, n));
      out.blocks.blocks.push_back(std::move(block));
    }
    out.blocks.validate();
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed problem document: ") + e.what());
  }
}

}  // namespace cscodes
