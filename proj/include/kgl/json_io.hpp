#pragma once

// Canonical JSON forms. Sequences are arrays, sets are sorted arrays.
// Integers are emitted as JSON numbers when they fit in a signed 64-bit
// integer and as decimal strings otherwise; integer_from_json accepts both.

#include <json.hpp>

#include "kgl/core.hpp"

namespace kgl {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& value);
Integer integer_from_json(const Json& value);

Json to_json(const IntVec& values);
Json to_json(const LineBundleClass& bundle);
Json to_json(const OrbitSpec& spec);
Json to_json(const WeightPair& weight);
Json to_json(const std::vector<WeightPair>& weights);
Json to_json(const Decomposition& decomposition);
Json to_json(const DivisorExpr& divisor);

/// Index conventions attached to every top-level document.
Json conventions_json();

LineBundleClass line_bundle_from_json(const Json& doc);
OrbitSpec orbit_from_json(const Json& doc);

}  // namespace kgl
