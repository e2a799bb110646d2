#include "kgl/json_io.hpp"

#include <limits>

namespace kgl {

Json integer_to_json(const Integer& value) {
  if (value.fits_slong_p()) return Json(static_cast<std::int64_t>(value.get_si()));
  return Json(value.get_str());
}

Integer integer_from_json(const Json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(std::to_string(value.get<std::uint64_t>()));
    return Integer(std::to_string(value.get<std::int64_t>()));
  }
  if (value.is_string()) {
    Integer out;
    if (out.set_str(value.get<std::string>(), 10) != 0)
      throw Error(ErrorCode::InvalidArgument, "not a decimal integer: " + value.get<std::string>());
    return out;
  }
  throw Error(ErrorCode::InvalidArgument, "expected an integer, got " + value.dump());
}

Json to_json(const IntVec& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(integer_to_json(v));
  return out;
}

Json to_json(const LineBundleClass& bundle) {
  return Json{{"n", bundle.n()},
              {"m", to_json(bundle.m())},
              {"l", to_json(bundle.l())},
              {"e", integer_to_json(bundle.e())},
              {"d", integer_to_json(bundle.d())}};
}

Json to_json(const OrbitSpec& spec) {
  // std::set iterates in sorted order.
  return Json{{"n", spec.n()}, {"I", Json(spec.I())}, {"J", Json(spec.J())}};
}

Json to_json(const WeightPair& weight) {
  return Json{{"a", to_json(weight.a)}, {"b", to_json(weight.b)}};
}

Json to_json(const std::vector<WeightPair>& weights) {
  Json out = Json::array();
  for (const auto& w : weights) out.push_back(to_json(w));
  return out;
}

Json to_json(const Decomposition& decomposition) {
  Json weights = Json::array();
  for (const auto& entry : decomposition.entries()) {
    Json item = to_json(entry.weight);
    item["dim"] = integer_to_json(entry.dim);
    weights.push_back(std::move(item));
  }
  return Json{{"weights", std::move(weights)}, {"total", integer_to_json(decomposition.total_dim())}};
}

Json to_json(const DivisorExpr& divisor) {
  return Json{{"Z", to_json(divisor.zZ)}, {"Y", to_json(divisor.zY)}, {"Delta", to_json(divisor.zDelta)}};
}

Json conventions_json() {
  return Json{{"boundary_index", "0-based: Z_i, Y_i, m_i, l_i for i in [0, n-1]"},
              {"weight_index", "1-based: a_i, b_i for i in [1, n], listed in order"},
              {"delta_index", "1-based: Delta_i for i in [1, n-1], listed in order"}};
}

namespace {

IntVec int_vec_from_json(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_array())
    throw Error(ErrorCode::InvalidArgument, std::string("missing array field '") + key + "'");
  IntVec out;
  for (const auto& v : doc.at(key)) out.push_back(integer_from_json(v));
  return out;
}

std::set<int> index_set_from_json(const Json& doc, const char* key) {
  std::set<int> out;
  if (!doc.contains(key)) return out;
  for (const auto& v : doc.at(key)) {
    if (!v.is_number_integer()) throw Error(ErrorCode::InvalidArgument, "index sets hold integers");
    out.insert(v.get<int>());
  }
  return out;
}

}  // namespace

LineBundleClass line_bundle_from_json(const Json& doc) {
  if (!doc.contains("n")) throw Error(ErrorCode::InvalidArgument, "missing field 'n'");
  Integer e = doc.contains("e") ? integer_from_json(doc.at("e")) : Integer(0);
  Integer d = doc.contains("d") ? integer_from_json(doc.at("d")) : Integer(0);
  return LineBundleClass(doc.at("n").get<int>(), int_vec_from_json(doc, "m"), int_vec_from_json(doc, "l"),
                         std::move(e), std::move(d));
}

OrbitSpec orbit_from_json(const Json& doc) {
  if (!doc.contains("n")) throw Error(ErrorCode::InvalidArgument, "missing field 'n'");
  return OrbitSpec(doc.at("n").get<int>(), index_set_from_json(doc, "I"), index_set_from_json(doc, "J"));
}

}  // namespace kgl
