#include "renormlab/serialize.hpp"

#include <cstdio>
#include <cstdlib>

namespace renormlab {

std::string double_to_hex(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

double hex_to_double(const std::string& s)
{
    return std::strtod(s.c_str(), nullptr);
}

nlohmann::json to_json(const Interval& iv)
{
    return {{"lo", double_to_hex(iv.lo)}, {"hi", double_to_hex(iv.hi)},
            {"lo_dec", iv.lo}, {"hi_dec", iv.hi}};
}

Interval interval_from_json(const nlohmann::json& j)
{
    return {hex_to_double(j.at("lo").get<std::string>()),
            hex_to_double(j.at("hi").get<std::string>())};
}

nlohmann::json to_json(const ChebFun1& f)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (double c : f.coeffs()) coeffs.push_back(double_to_hex(c));
    return {{"basis", "chebyshev"},
            {"domain", to_json(f.domain())},
            {"coeffs", coeffs},
            {"trunc_err", double_to_hex(f.trunc_err())}};
}

ChebFun1 chebfun1_from_json(const nlohmann::json& j)
{
    if (j.at("basis").get<std::string>() != "chebyshev")
        throw ConfigError("chebfun1_from_json: unknown basis");
    std::vector<double> c;
    for (const auto& s : j.at("coeffs")) c.push_back(hex_to_double(s.get<std::string>()));
    return ChebFun1(interval_from_json(j.at("domain")), std::move(c),
                    hex_to_double(j.at("trunc_err").get<std::string>()));
}

nlohmann::json to_json(const ChebFun2& f)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : f.coeffs()) {
        nlohmann::json r = nlohmann::json::array();
        for (double c : row) r.push_back(double_to_hex(c));
        rows.push_back(r);
    }
    return {{"basis", "chebyshev2"},
            {"domain_x", to_json(f.domain_x())},
            {"domain_y", to_json(f.domain_y())},
            {"coeffs", rows},
            {"trunc_err", double_to_hex(f.trunc_err())}};
}

ChebFun2 chebfun2_from_json(const nlohmann::json& j)
{
    if (j.at("basis").get<std::string>() != "chebyshev2")
        throw ConfigError("chebfun2_from_json: unknown basis");
    std::vector<std::vector<double>> c;
    for (const auto& row : j.at("coeffs")) {
        std::vector<double> r;
        for (const auto& s : row) r.push_back(hex_to_double(s.get<std::string>()));
        c.push_back(std::move(r));
    }
    return ChebFun2(interval_from_json(j.at("domain_x")), interval_from_json(j.at("domain_y")),
                    std::move(c), hex_to_double(j.at("trunc_err").get<std::string>()));
}

nlohmann::json to_json(const Pair1D& z)
{
    return {{"eta", to_json(z.eta)},
            {"xi", to_json(z.xi)},
            {"meta", {{"eta0", double_to_hex(z.eta0())}, {"xi0", double_to_hex(z.xi0())}}}};
}

Pair1D pair1d_from_json(const nlohmann::json& j)
{
    return {chebfun1_from_json(j.at("eta")), chebfun1_from_json(j.at("xi"))};
}

} // namespace renormlab
