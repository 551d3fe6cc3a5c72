#include "symprod/boundary_graph.hpp"
#include "symprod/presets.hpp"

#include <doctest.h>

using namespace symprod;

namespace {

BoundaryGraphSampler patch(const RadialProfile& w)
{
    return BoundaryGraphSampler(w, {16 * kPi}, {{0.5, 0.75}}, {{0.0, 1.0}, {0.0, 0.25}});
}

}  // namespace

TEST_CASE("emitted graph points lie on the product boundary")
{
    const RadialProfile w = make_profile(WeierstrassSource{});
    const auto g = patch(w);
    CHECK(g.dimension() == 4);
    CHECK(g.grid().size() == 4);
    const auto s = g.sampler();
    std::size_t seen = 0;
    double worst = 0.0;
    s.emit(1.0 / 64, 0, [&](std::span<const double> pts) {
        for (std::size_t i = 0; i + 4 <= pts.size(); i += 4 * 97) {
            const PointN x = Eigen::Map<const PointN>(pts.data() + i, 4);
            worst = std::max(worst, std::abs(g.product_gauge(g.to_ambient(x)) - 1.0));
            ++seen;
        }
    });
    CHECK(seen > 0);
    CHECK(worst < 1e-8);
}

TEST_CASE("parameter boxes must avoid the coordinate axes")
{
    const RadialProfile d = make_profile(DiskSource{kPi});
    CHECK_THROWS_AS(BoundaryGraphSampler(d, {kPi}, {{0.0, 0.5}}), PreconditionError);
    CHECK_THROWS_AS(BoundaryGraphSampler(d, {kPi}, {{0.5, 1.0}}), PreconditionError);
    CHECK_THROWS_AS(BoundaryGraphSampler(d, {kPi}, {{0.5, 0.7}}, {{0.0, 1.5}, {0.0, 1.0}}), InvalidArgument);
}

TEST_CASE("disk patch is three-dimensional")
{
    const auto g = patch(make_profile(DiskSource{kPi}));
    BoxCountOptions o;
    o.axes = g.grid();
    const auto scales = dyadic_scales(2, 5);
    const auto est = estimate_dimension(scales, box_counts(g.sampler(), scales, o));
    CHECK(est.slope == doctest::Approx(3.0).epsilon(0.05));
}
