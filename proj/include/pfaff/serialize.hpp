#ifndef PFAFF_SERIALIZE_HPP
#define PFAFF_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "pfaff/polyform.hpp"

namespace pfaff {

/// {"n":..,"r":..,"terms":[{"idx":[..],"exp":[..],"num":"..","den":".."}]},
/// rationals as decimal strings, deterministic term order.
nlohmann::json form_to_json(const PolyForm& w);
PolyForm form_from_json(const nlohmann::json& j);

/// {"n":..,"components":[[{"exp":[..],"num":"..","den":".."},..],..]}.
nlohmann::json field_to_json(const PolyVectorField& X);
PolyVectorField field_from_json(const nlohmann::json& j);

} // namespace pfaff

#endif
