#pragma once

// JSON renderings used by the CLI reports. Integers go out as decimal strings
// so consumers never hit fixed-width limits.

#include "tetra/genfun.hpp"
#include "tetra/identities.hpp"
#include "tetra/matrix.hpp"

#include <json.hpp>

namespace tetra {

using Json = nlohmann::ordered_json;

// {"re": "<decimal>", "im": "<decimal>"}
Json to_json_value(const GaussianInt& z);
// Coefficient array, constant term first.
Json to_json_value(const GPoly& p);
// Row-major array of rows.
Json to_json_value(const Matrix4& m);
// {"id", "window": [lo, hi], "checked", "failures": [...], "observed": {...}, "pass"}
Json to_json_value(const IdentityReport& r);

}  // namespace tetra
