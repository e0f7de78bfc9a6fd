#include "ssp/method_io.hpp"

#include <fstream>

#include "ssp/errors.hpp"

namespace ssp {

RungeKuttaMethod method_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("method document must be a JSON object");
  for (const char* key : {"label", "s", "A", "b"})
    if (!j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  if (!j["label"].is_string()) throw FormatError("\"label\" must be a string");
  if (!j["s"].is_number_integer()) throw FormatError("\"s\" must be an integer");
  const int s = j["s"].get<int>();
  if (s < 1) throw FormatError("\"s\" must be positive");
  if (!j["A"].is_array() || static_cast<int>(j["A"].size()) != s)
    throw FormatError("\"A\" must be an array of s rows");
  if (!j["b"].is_array() || static_cast<int>(j["b"].size()) != s)
    throw FormatError("\"b\" must have s entries");

  Matrix A(s, s);
  for (int i = 0; i < s; ++i) {
    const auto& row = j["A"][i];
    if (!row.is_array() || static_cast<int>(row.size()) != s)
      throw FormatError("row " + std::to_string(i) + " of \"A\" must have s entries");
    for (int k = 0; k < s; ++k) {
      if (!row[k].is_number()) throw FormatError("\"A\" entries must be numbers");
      A(i, k) = row[k].get<double>();
    }
  }
  std::vector<double> b(s);
  for (int i = 0; i < s; ++i) {
    if (!j["b"][i].is_number()) throw FormatError("\"b\" entries must be numbers");
    b[i] = j["b"][i].get<double>();
  }
  return make_method(j["label"].get<std::string>(), std::move(A), std::move(b));
}

nlohmann::ordered_json method_to_json(const RungeKuttaMethod& m) {
  nlohmann::ordered_json j;
  j["label"] = m.label;
  j["s"] = m.stages();
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.stages(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int k = 0; k < m.stages(); ++k) row.push_back(m.A(i, k));
    rows.push_back(std::move(row));
  }
  j["A"] = std::move(rows);
  j["b"] = m.b;
  return j;
}

RungeKuttaMethod load_method(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("cannot parse " + path.string() + ": " + e.what());
  }
  return method_from_json(j);
}

void save_method(const RungeKuttaMethod& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << method_to_json(m).dump(2) << "\n";
}

}  // namespace ssp
