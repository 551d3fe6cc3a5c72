#include "symprod/fractal_function.hpp"

#include <doctest.h>

#include <cmath>

using namespace symprod;

TEST_CASE("weierstrass values")
{
    CHECK(FractalFunction::weierstrass(0.5, 3.0, 0)(0.0) == 1.0);
    CHECK(FractalFunction::weierstrass(0.5, 3.0, 50)(0.0) == doctest::Approx(2.0).epsilon(1e-15));
    const auto w = FractalFunction::weierstrass(0.5, 3.0, 30);
    CHECK(w(0.25) == doctest::Approx(w(1.25)).epsilon(1e-12));
    CHECK(w.is_periodic());
    CHECK(w.graph_dimension() == doctest::Approx(1.3690702464285427).epsilon(1e-15));
    CHECK(w.truncation_bound() == doctest::Approx(std::pow(0.5, 31) / 0.5).epsilon(1e-12));
}

TEST_CASE("phase-shifted weierstrass")
{
    const auto h = FractalFunction::weierstrass_phase(0.5, 3.0, 10, std::uint64_t{7});
    CHECK(h.phases().size() == 11);
    for (double p : h.phases()) CHECK((p >= 0.0 && p < 1.0));
    const auto zero = FractalFunction::weierstrass_phase(0.5, 3.0, 10, std::vector<double>(11, 0.0));
    CHECK(zero(0.3) == doctest::Approx(FractalFunction::weierstrass(0.5, 3.0, 10)(0.3)).epsilon(1e-14));
}

TEST_CASE("xiao-zhou")
{
    const auto f = FractalFunction::xiao_zhou(0.5, 1.5, 2.0, 6);
    CHECK(f(0.0) == 0.0);
    CHECK(triangle_wave(0.25) == doctest::Approx(0.5));
    CHECK(triangle_wave(0.75) == doctest::Approx(0.5));
    CHECK(triangle_wave(-0.25) == doctest::Approx(0.5));
    for (double x : {0.1, 0.37, 0.8}) CHECK((f(x) >= 0.0 && f(x) <= f.sup_bound()));
}
