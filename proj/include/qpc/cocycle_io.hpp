#pragma once

// Cocycle interchange format:
//   {"d":…, "m":…, "r":…, "coeffs":[{"n":[…], "re":[[…]], "im":[[…]]}, …]}
// Coefficients are emitted in lexicographic frequency order; floats survive
// the text round trip bit-for-bit (17 significant digits).

#include <qpc/fourier.hpp>

#include <json.hpp>

#include <string>

namespace qpc {

nlohmann::json cocycle_to_json(const FourierCocycle& C);
FourierCocycle cocycle_from_json(const nlohmann::json& j);

void write_cocycle_file(const FourierCocycle& C, const std::string& path);
FourierCocycle read_cocycle_file(const std::string& path);

}  // namespace qpc
