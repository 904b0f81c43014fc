#include "qstar/spec_io.hpp"

#include <nlohmann/json.hpp>

namespace qstar {

namespace {

using json = nlohmann::ordered_json;

Rational scalar_at(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SpecParseError(where + ": " + e.what());
    }
  }
  throw SpecParseError(where + ": expected an integer or a \"p/q\" string");
}

const json& member(const json& j, const std::string& parent, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SpecParseError(parent + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

std::vector<MatrixColumn> columns_at(const json& j, const std::string& where) {
  if (!j.is_array()) throw SpecParseError(where + ": expected an array of column triples");
  std::vector<MatrixColumn> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& col = j[i];
    if (!col.is_array() || col.size() != 3) throw SpecParseError(at + ": expected [q0, q1, q2]");
    try {
      out.emplace_back(scalar_at(col[0], at), scalar_at(col[1], at), scalar_at(col[2], at));
    } catch (const std::invalid_argument& e) {
      throw SpecParseError(at + ": " + e.what());
    }
  }
  return out;
}

std::vector<Rational> epsilons_at(const json& j, const std::string& where) {
  if (!j.is_array()) throw SpecParseError(where + ": expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    Rational e = scalar_at(j[i], at);
    if (e.sign() < 0 || e > Rational(1)) throw SpecParseError(at + ": epsilon out of [0,1]");
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

FunctionSpec parse_spec_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw SpecParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SpecParseError("top level: expected an object");

  const json& matrix = member(doc, "top level", "matrix");
  const json& epsilon = member(doc, "top level", "epsilon");

  auto preamble = columns_at(member(matrix, "matrix", "preamble"), "matrix.preamble");
  auto period = columns_at(member(matrix, "matrix", "period"), "matrix.period");
  if (period.empty()) throw SpecParseError("matrix.period: must be nonempty");

  auto eps_preamble = epsilons_at(member(epsilon, "epsilon", "preamble"), "epsilon.preamble");
  auto eps_period = epsilons_at(member(epsilon, "epsilon", "period"), "epsilon.period");
  if (eps_period.empty()) throw SpecParseError("epsilon.period: must be nonempty");

  return {ColumnSchedule(std::move(preamble), std::move(period)),
          EpsilonSchedule(std::move(eps_preamble), std::move(eps_period))};
}

std::string serialize_spec(const FunctionSpec& f) {
  auto column = [](const MatrixColumn& c) {
    return json::array({c.q0().str(), c.q1().str(), c.q2().str()});
  };
  json matrix_preamble = json::array(), matrix_period = json::array();
  for (const MatrixColumn& c : f.x_schedule.preamble()) matrix_preamble.push_back(column(c));
  for (const MatrixColumn& c : f.x_schedule.period()) matrix_period.push_back(column(c));

  json eps_preamble = json::array(), eps_period = json::array();
  for (const Rational& e : f.eps.preamble()) eps_preamble.push_back(e.str());
  for (const Rational& e : f.eps.period()) eps_period.push_back(e.str());

  json doc;
  doc["matrix"] = {{"preamble", matrix_preamble}, {"period", matrix_period}};
  doc["epsilon"] = {{"preamble", eps_preamble}, {"period", eps_period}};
  return doc.dump(2) + "\n";
}

}  // namespace qstar
