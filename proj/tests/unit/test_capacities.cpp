#include "symprod/boundary_minimal.hpp"
#include "symprod/capacities.hpp"
#include "symprod/presets.hpp"
#include "symprod/product_domain.hpp"

#include <doctest.h>

using namespace symprod;

TEST_CASE("ellipsoid capacities")
{
    CHECK(gh_capacities(EllipsoidSpec({1.0, 2.0}), 4).values == std::vector<double>{1, 2, 2, 3});
    CHECK(gh_capacities(EllipsoidSpec({1.0, 1.0, 2.0}), 3).values == std::vector<double>{1, 1, 2});
    CHECK(zoll_check(EllipsoidSpec({kPi, kPi})).zoll);
    CHECK_FALSE(zoll_check(EllipsoidSpec({1.0, 2.0})).zoll);
    const ProductDomain d({make_profile(WeierstrassSource{}).with_area(kPi), make_profile(square()).with_area(kPi)});
    CHECK(zoll_check(d).zoll);
}

TEST_CASE("shrinking a profile")
{
    const RadialProfile w = make_profile(CosineSource{kPi, 0.5});
    const auto s = shrink_profile_solve(w, 1.0, kPi / 4, 0.95 * kPi);
    CHECK(s.profile.area() == doctest::Approx(0.95 * kPi).epsilon(1e-9));
    CHECK((s.amplitude > 0.0 && s.amplitude < 1.0));
    CHECK(s.profile.radius(1.0 + kPi) == doctest::Approx(w.radius(1.0 + kPi)).epsilon(1e-3));
    CHECK_THROWS_AS(shrink_profile(w, 1.0, 0.1, 0.2 * kPi), PreconditionError);
}

TEST_CASE("boundary minimality on a small sample")
{
    const std::vector<RadialProfile> f{make_profile(WeierstrassSource{}).with_area(kPi),
                                       make_profile(square()).with_area(kPi)};
    BoundaryMinimalConfig c;
    const double level = std::sqrt(0.5);
    c.center = PointN(4);
    c.center.segment<2>(0) = level * f[0].boundary_point(kPi / 3);
    c.center.segment<2>(2) = level * f[1].boundary_point(5 * kPi / 4);
    c.target_area = 0.9 * kPi;
    c.samples = 5000;
    const auto r = boundary_minimal_experiment(f, c);
    CHECK(r.passed());
    CHECK(r.gap == doctest::Approx(0.1 * kPi).epsilon(1e-6));
}
