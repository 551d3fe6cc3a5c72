#include "symprod/presets.hpp"
#include "symprod/product_domain.hpp"

#include <doctest.h>

#include <memory>

using namespace symprod;

TEST_CASE("2-product of disks is the ellipsoid")
{
    const ProductDomain d({make_profile(DiskSource{1.0}), make_profile(DiskSource{2.0})});
    const ProductDomain e({EllipsoidSpec({1.0, 2.0})});
    PointN z(4);
    z << 0.2, -0.1, 0.3, 0.25;
    CHECK(d.gauge(z) == doctest::Approx(e.gauge(z)).epsilon(1e-12));
    CHECK(d.is_ellipsoid());
    CHECK(ellipsoid_volume(EllipsoidSpec({1.0, 1.0})) == 0.5);
    CHECK(d.plane_areas()[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(d.plane_areas()[1] == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("p-product gauge and containment")
{
    const ProductDomain d({make_profile(DiskSource{kPi}), make_profile(DiskSource{kPi})}, 3.0);
    PointN z(4);
    z << 0.5, 0.0, 0.0, 0.5;
    CHECK(d.gauge(z) == doctest::Approx(std::cbrt(2 * 0.125)).epsilon(1e-12));
    CHECK(contains(d, z));
    PointN bad(3);
    CHECK_THROWS_AS(d.gauge(bad), InvalidArgument);
    CHECK_THROWS_AS(ProductDomain({make_profile(DiskSource{})}, 0.5), InvalidArgument);
}

TEST_CASE("nested products")
{
    auto inner = std::make_shared<const ProductDomain>(
        std::vector<ProductFactor>{make_profile(DiskSource{1.0}), make_profile(DiskSource{1.0})});
    const ProductDomain outer({inner, make_profile(DiskSource{1.0})});
    CHECK(outer.dimension() == 6);
    CHECK(outer.is_ellipsoid());
    CHECK(outer.plane_areas().size() == 3);
}

TEST_CASE("boundary samples have gauge one")
{
    const ProductDomain d({make_profile(WeierstrassSource{}), make_profile(square())}, 2.0);
    for (const auto& x : boundary_sample(d, 200, 5)) CHECK(d.gauge(x) == doctest::Approx(1.0).epsilon(1e-10));
    const ProductDomain e({EllipsoidSpec({1.0, 3.0}), make_profile(CosineSource{})}, 2.0);
    for (const auto& x : boundary_sample(e, 50, 5)) CHECK(e.gauge(x) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("Monte Carlo volume of the ball and thread independence")
{
    const ProductDomain d({make_profile(DiskSource{1.0}), make_profile(DiskSource{1.0})});
    const auto v = mc_volume(d, 200000, 11, 1);
    CHECK(std::abs(v.estimate - 0.5) < 4 * v.standard_error);
    const auto v4 = mc_volume(d, 200000, 11, 4);
    CHECK(v4.hits == v.hits);
    CHECK(v4.estimate == v.estimate);
    CHECK_THROWS_AS(mc_volume(d, 10, 1), InvalidArgument);
}

TEST_CASE("volume of a product of unit-area factors")
{
    const ProductDomain d({make_profile(WeierstrassSource{}).with_area(1.0), make_profile(square()).with_area(1.0)});
    const auto v = mc_volume(d, 300000, 3, 2);
    CHECK(std::abs(v.estimate - 0.5) < 4 * v.standard_error);
}
