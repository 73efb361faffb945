#pragma once

#include <json.hpp>

#include "q4v/construct.hpp"

namespace q4v::detail {

using ordered_json = nlohmann::ordered_json;

ordered_json scalar_json(const RadicalScalar& s);
RadicalScalar scalar_unjson(const ordered_json& j);

ordered_json bipoly_json(const BiPoly& p);
BiPoly bipoly_unjson(const ordered_json& j);

ordered_json rational_fn_json(const RationalFn& r);
RationalFn rational_fn_unjson(const ordered_json& j);

ordered_json curve_json(const VectorCurve& f);
VectorCurve curve_unjson(const ordered_json& j);

ordered_json matrix_json(const ScalarMatrix& m);
ScalarMatrix matrix_unjson(const ordered_json& j);

}  // namespace q4v::detail
