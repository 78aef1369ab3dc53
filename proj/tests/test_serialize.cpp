#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "renormlab/serialize.hpp"

using namespace renormlab;

TEST_CASE("hex floats round-trip bit-exactly")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        double v = std::ldexp(U(rng), static_cast<int>(rng() % 600) - 300);
        CHECK(hex_to_double(double_to_hex(v)) == v);
    }
    CHECK(hex_to_double(double_to_hex(0.0)) == 0.0);
    CHECK(hex_to_double(double_to_hex(-0.1)) == -0.1);
}

TEST_CASE("ChebFun1 JSON round trip")
{
    ChebFun1 f = ChebFun1::fit([](double x) { return std::sin(3.0 * x) / (1.7 + x); },
                               {-0.8, 0.9}, 33);
    nlohmann::json j = to_json(f);
    std::string text = j.dump();
    ChebFun1 g = chebfun1_from_json(nlohmann::json::parse(text));
    REQUIRE(g.coeffs().size() == f.coeffs().size());
    for (size_t i = 0; i < f.coeffs().size(); ++i) CHECK(g.coeffs()[i] == f.coeffs()[i]);
    CHECK(g.domain().lo == f.domain().lo);
    CHECK(g.domain().hi == f.domain().hi);
    CHECK(g.trunc_err() == f.trunc_err());
}

TEST_CASE("ChebFun2 JSON round trip")
{
    ChebFun2 f = ChebFun2::fit([](double x, double y) { return std::exp(0.3 * x - 0.2 * y); },
                               {-0.5, 1.0}, {-1.2, 0.4}, 9, 5);
    ChebFun2 g = chebfun2_from_json(nlohmann::json::parse(to_json(f).dump()));
    REQUIRE(g.coeffs().size() == f.coeffs().size());
    for (size_t i = 0; i < f.coeffs().size(); ++i)
        for (size_t k = 0; k < f.coeffs()[i].size(); ++k)
            CHECK(g.coeffs()[i][k] == f.coeffs()[i][k]);
}

TEST_CASE("Pair1D JSON round trip preserves evaluations")
{
    Pair1D z = Pair1D::rigid(0.618, 12);
    Pair1D w = pair1d_from_json(nlohmann::json::parse(to_json(z).dump()));
    for (double x : cheb_nodes(z.nominal_eta(), 11))
        CHECK(w.eta.eval(x) == z.eta.eval(x));
    for (double x : cheb_nodes(z.nominal_xi(), 11))
        CHECK(w.xi.eval(x) == z.xi.eval(x));
}
