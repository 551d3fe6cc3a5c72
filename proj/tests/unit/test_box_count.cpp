#include "symprod/box_count.hpp"
#include "symprod/fractal_function.hpp"

#include <doctest.h>

#include <cmath>

using namespace symprod;

TEST_CASE("segment and square boundary counts")
{
    PointN a(2), b(2);
    a << 0.0, 0.0;
    b << 1.0, 0.0;
    const auto seg = segment_sampler(a, b);
    for (int k : {8, 32, 100}) {
        const double n = box_count(seg, 1.0 / k, 0.25 / k);
        CHECK((n >= k && n <= k + 1));
    }
    const double n = box_count(square_boundary_sampler(), 1.0 / 64, 1.0 / 256);
    CHECK(n == doctest::Approx(4 * 64).epsilon(0.03));
    CHECK_THROWS_AS(box_count(seg, 0.1, 0.03), InvalidArgument);
}

TEST_CASE("dimension of smooth sets")
{
    PointN a(3), b(3);
    a << 0.1, 0.2, 0.0;
    b << 0.9, 0.5, 0.7;
    const auto scales = dyadic_scales(3, 10);
    const auto counts = box_counts(segment_sampler(a, b), scales);
    for (std::size_t i = 1; i < counts.size(); ++i) CHECK(counts[i] >= counts[i - 1]);
    const auto line = estimate_dimension(scales, counts);
    CHECK(line.slope == doctest::Approx(1.0).epsilon(0.02));
    CHECK(line.window_ok);

    const auto surf = smooth_surface_sampler([](double x, double y) { return 0.3 * std::sin(3 * x) * y; }, 1.0);
    const auto s2 = dyadic_scales(3, 7);
    const auto est = estimate_dimension(s2, box_counts(surf, s2));
    CHECK(est.slope == doctest::Approx(2.0).epsilon(0.025));
}

TEST_CASE("degenerate windows are flagged")
{
    const std::vector<double> s{0.5, 0.25, 0.125};
    const std::vector<double> c{1, 1, 1};
    const auto est = estimate_dimension(s, c);
    CHECK(est.degenerate);
    CHECK_FALSE(est.window_ok);
}

TEST_CASE("graph counts are stable under truncation")
{
    const auto f30 = FractalFunction::weierstrass(0.5, 3.0, 30);
    const auto f40 = FractalFunction::weierstrass(0.5, 3.0, 40);
    const auto scales = dyadic_scales(4, 9);
    const auto c30 = box_counts(function_graph_sampler(f30, 0.0, 1.0), scales);
    const auto c40 = box_counts(function_graph_sampler(f40, 0.0, 1.0), scales);
    for (std::size_t i = 0; i < scales.size(); ++i) CHECK(c30[i] == doctest::Approx(c40[i]).epsilon(1e-3));
    CHECK(estimate_dimension(scales, c30).slope == doctest::Approx(f30.graph_dimension()).epsilon(0.08));
}
