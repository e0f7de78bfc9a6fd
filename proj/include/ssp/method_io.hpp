#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ssp/method.hpp"

namespace ssp {

// Interchange format used by every CLI command:
//   {"label": string, "s": integer, "A": [[...], ...], "b": [...]}

/// Throws FormatError if the document does not match the schema.
RungeKuttaMethod method_from_json(const nlohmann::json& j);

nlohmann::ordered_json method_to_json(const RungeKuttaMethod& m);

/// Throws FormatError on unreadable or malformed files.
RungeKuttaMethod load_method(const std::filesystem::path& path);

void save_method(const RungeKuttaMethod& m, const std::filesystem::path& path);

}  // namespace ssp
