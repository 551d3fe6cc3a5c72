#include "symprod/presets.hpp"

#include <doctest.h>

using namespace symprod;

TEST_CASE("disk profile area, gauge and sector area")
{
    const RadialProfile d = make_profile(DiskSource{2.0});
    CHECK(d.area() == doctest::Approx(2.0).epsilon(1e-14));
    const double r = std::sqrt(2.0 / kPi);
    CHECK(d.radius(0.7) == doctest::Approx(r).epsilon(1e-14));
    CHECK(d.gauge(Point2(0.3, -0.4)) == doctest::Approx(0.5 / r).epsilon(1e-14));
    CHECK(d.sector_area(kPi / 2) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(d.gauge(Point2::Zero()) == 0.0);
}

TEST_CASE("sector area inverse of the cosine profile")
{
    // S(theta) = (a / 2 pi)(theta + sin(theta) / 2); S = a / 4 at theta + sin(theta) / 2 = pi / 2.
    const RadialProfile w = make_profile(CosineSource{kPi, 0.5});
    CHECK(w.area() == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(w.inverse_sector_area(kPi / 4) == doctest::Approx(1.120612715500023).epsilon(1e-9));
    for (double th : {0.1, 1.0, 2.5, 4.0, 6.2})
        CHECK(w.inverse_sector_area(w.sector_area(th)) == doctest::Approx(th).epsilon(1e-12));
    // Unwrapped across turns.
    CHECK(w.sector_area(kTwoPi + 1.0) == doctest::Approx(w.area() + w.sector_area(1.0)).epsilon(1e-13));
}

TEST_CASE("weierstrass disk area")
{
    // Reference: trapezoid rule for (1/2) int R^2 on 2^20 points, 3.1625366046137207.
    const RadialProfile w = make_profile(WeierstrassSource{});
    CHECK(w.area() == doctest::Approx(3.1625366046137207).epsilon(1e-5));
    CHECK(w.interpolation() == Interpolation::linear);
}

TEST_CASE("square polygon")
{
    const RadialProfile s = make_profile(square());
    CHECK(s.area() == doctest::Approx(4.0).epsilon(1e-5));
    CHECK(s.radius(0.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(s.radius(kPi / 4) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(s.with_area(kPi).area() == kPi);
}

TEST_CASE("invalid profiles are rejected")
{
    CHECK_THROWS_AS(RadialProfile(std::vector<double>(64, -1.0), Interpolation::linear), InvalidArgument);
    CHECK_THROWS_AS(RadialProfile(std::vector<double>(4, 1.0), Interpolation::linear), InvalidArgument);
    // Clockwise square is not a valid star-shaped polygon listing.
    PolygonSource cw{{Point2(1, -1), Point2(-1, -1), Point2(-1, 1), Point2(1, 1)}};
    CHECK_THROWS_AS(make_profile(cw), InvalidArgument);
    // Origin outside.
    PolygonSource off{{Point2(1, 1), Point2(2, 1), Point2(2, 2), Point2(1, 2)}};
    CHECK_THROWS_AS(make_profile(off), InvalidArgument);
}

TEST_CASE("fractal presets use linear interpolation")
{
    ProfileOptions o;
    o.interpolation = Interpolation::cubic_periodic;
    CHECK(make_profile(WeierstrassSource{}, o).interpolation() == Interpolation::linear);
    CHECK(make_profile(CosineSource{}).interpolation() == Interpolation::cubic_periodic);
}

TEST_CASE("ellipsoid gauge")
{
    const EllipsoidSpec e({1.0, 2.0});
    PointN z(4);
    z << std::sqrt(0.5 / kPi), 0.0, 0.0, std::sqrt(1.0 / kPi);
    CHECK(ellipsoid_gauge(z, std::span<const double>(e.areas)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(EllipsoidSpec({1.0, 0.0}), InvalidArgument);
}
