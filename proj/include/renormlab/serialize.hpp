#pragma once

// JSON records for maps and pairs. Doubles are stored as hex-float strings so
// round trips are bit-exact; decimal mirrors are included for readability.

#include <string>

#include <json.hpp>

#include "renormlab/cheb.hpp"
#include "renormlab/pair1d.hpp"

namespace renormlab {

std::string double_to_hex(double v);
double hex_to_double(const std::string& s);

nlohmann::json to_json(const Interval& iv);
Interval interval_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ChebFun1& f);
ChebFun1 chebfun1_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ChebFun2& f);
ChebFun2 chebfun2_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Pair1D& z);
Pair1D pair1d_from_json(const nlohmann::json& j);

} // namespace renormlab
