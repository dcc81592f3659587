#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "rootmean/sympoly.hpp"

namespace rootmean {

/// {"terms":[{"expt":{"r1":4},"coeff":"-9"}, ...]} in print order.
nlohmann::json to_json(const SymPoly& p);

/// Inverse of to_json. Integration constant c<m> gets weight constant_base + m,
/// where constant_base is the degree whose parameter vector was extended.
SymPoly sympoly_from_json(const nlohmann::json& j, unsigned constant_base = 0);

/// Plain text such as "-9 r1^4 + 18 r1^2 r2 - 4 r1 r3"; zero terms are accepted and dropped.
SymPoly parse_sympoly(std::string_view text, unsigned constant_base = 0);

/// Round-trips through parse_sympoly.
std::string to_text(const SymPoly& p);

/// Human layout with bars written as r^[i], e.g. "-9 r^[1]^4 + 18 r^[1]^2 r^[2]".
std::string to_pretty(const SymPoly& p);

}  // namespace rootmean
