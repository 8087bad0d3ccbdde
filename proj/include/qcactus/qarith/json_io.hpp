#pragma once

#include <json.hpp>

#include "qcactus/qarith/laurent_poly.hpp"
#include "qcactus/qarith/rat_func.hpp"

namespace qcactus::qarith {

/// [[k, "p/q"], ...] in ascending k.
nlohmann::json to_json(const LaurentPoly& p);
/// {"num": [...], "den": [...]}
nlohmann::json to_json(const RatFunc& f);

LaurentPoly laurent_from_json(const nlohmann::json& j);
RatFunc ratfunc_from_json(const nlohmann::json& j);

}  // namespace qcactus::qarith
