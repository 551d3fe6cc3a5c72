#include "symprod/dynamics.hpp"
#include "symprod/presets.hpp"
#include "symprod/random.hpp"

#include <doctest.h>

using namespace symprod;

TEST_CASE("planar characteristic flow")
{
    const RadialProfile sq = make_profile(square());
    CHECK((char_flow_2d(sq, Point2(1, 0), 1.0) - Point2(0, 1)).norm() < 1e-5);
    CHECK((char_flow_2d(sq, Point2(1, 0), sq.area()) - Point2(1, 0)).norm() < 1e-9);

    const RadialProfile w = make_profile(CosineSource{kPi, 0.5});
    const Point2 z = 0.7 * unit_direction(0.4);
    CHECK((char_flow_2d(w, z, w.area()) - z).norm() < 1e-9);
    CHECK(w.gauge(char_flow_2d(w, z, 1.3)) == doctest::Approx(w.gauge(z)).epsilon(1e-12));
    CHECK((char_flow_ode(w, z, 1.3, 2000) - char_flow_2d(w, z, 1.3)).norm() < 1e-5);
}

TEST_CASE("conjugacy to the ellipsoid Reeb flow")
{
    const std::vector<RadialProfile> f{make_profile(CosineSource{2.0, 0.4}), make_profile(square())};
    RandomStream rng(5, 0);
    for (int i = 0; i < 20; ++i) {
        PointN z(4);
        const double s = rng.uniform();
        z.segment<2>(0) = std::sqrt(s * f[0].area() / kPi) * unit_direction(rng.uniform(0.0, kTwoPi));
        z.segment<2>(2) = std::sqrt((1 - s) * f[1].area() / kPi) * unit_direction(rng.uniform(0.0, kTwoPi));
        CHECK(conjugacy_residual(f, z, rng.uniform(0.0, 8.0)) < 1e-8);
    }
}

TEST_CASE("orbit periods")
{
    const std::vector<double> equal{kPi, kPi};
    const FlowPoint p{{0.1, 2.0}, {0.6, 0.8}};
    const auto t = orbit_period(equal, p, 1e-9, 100);
    REQUIRE(t);
    CHECK(*t == doctest::Approx(kPi));

    const std::vector<double> irrational{1.0, std::sqrt(2.0)};
    CHECK_FALSE(orbit_period(irrational, p, 1e-9, 50));

    const std::vector<Rational> q{{2, 3}, {1, 2}};
    CHECK(orbit_period_exact(q, {true, true}) == Rational{2, 1});
    CHECK(orbit_period_exact(q, {false, true}) == Rational{1, 2});
}

TEST_CASE("systoles of an equal-area product")
{
    const std::vector<RadialProfile> eq{make_profile(WeierstrassSource{}).with_area(kPi),
                                        make_profile(square()).with_area(kPi)};
    const auto r = is_foliated_by_systoles(eq, 200, 3);
    CHECK(r.passed);
    CHECK(r.worst_deviation < 1e-8);
    const std::vector<RadialProfile> uneq{make_profile(DiskSource{1.0}), make_profile(DiskSource{2.0})};
    CHECK_THROWS_AS(is_foliated_by_systoles(uneq, 10, 3), PreconditionError);
}
