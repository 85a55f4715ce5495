#pragma once

// JSON document schema for models and divisors. All rationals travel as
// "num/den" strings so round-trips are bit-exact.
//
// {
//   "boundary": { "y_id": "Y", "components": [ {"id": "H1", "coeff": "2/1"} ] },
//   "records": [
//     { "id": "E", "kind": "exceptional",           // strict_y | strict_b:<B_j> | exceptional
//       "c": "2/1", "b_pullback": "0/1", "rel_canonical": "1/1",
//       "restriction": [ {"curve": "p1", "mult": 1, "image_codim": 1} ] }
//   ],
//   "x_smooth": true,
//   "volume_zeros": {}
// }

#include <pairsing/model.hpp>

#include <json.hpp>

#include <string>

namespace pairsing {

nlohmann::json divisor_to_json(const QDivisor& d);
QDivisor divisor_from_json(const nlohmann::json& j, const std::string& space);

nlohmann::json model_to_json(const SncModel& m);
SncModel model_from_json(const nlohmann::json& j);

// Parses a JSON document; throws std::invalid_argument with a description on
// malformed input.
SncModel model_from_string(const std::string& text);
SncModel model_from_file(const std::string& path);

}  // namespace pairsing
