#pragma once

// JSON wire formats for the command-line front end. Complex numbers are
// two-element arrays [re, im]; matrices are nested row-major arrays.

#include <json.hpp>
#include <string>

#include "symdisc/geometry.hpp"
#include "symdisc/maps.hpp"
#include "symdisc/spectral.hpp"
#include "symdisc/types.hpp"

namespace symdisc::io {

using nlohmann::json;

json complex_to_json(const Complex& c);
Complex complex_from_json(const json& j);

json tuple_to_json(const std::vector<Complex>& v);
std::vector<Complex> tuple_from_json(const json& j);

json matrix_to_json(const spectral::Matrix& m);
spectral::Matrix matrix_from_json(const json& j);

json verdict_to_json(const geometry::MembershipVerdict& v);

/// {"type": "blaschke", "zeros": [[re,im],...], "factor": [re,im]} or
/// {"type": "polynomial", "coeffs": [[re,im],...]}
json map_to_json(const maps::BlaschkeProduct& b);
maps::LiftedMap lifted_map_from_json(const json& j, int n);
maps::BlaschkeProduct blaschke_from_json(const json& j);

json load_json_file(const std::string& path);

}  // namespace symdisc::io
