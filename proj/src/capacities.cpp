#include "symprod/capacities.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace symprod {

namespace {

double angular_distance(double a, double b)
{
    const double d = wrap_angle(a - b);
    return std::min(d, kTwoPi - d);
}

constexpr double kMaxAmplitude = 0.999;

}  // namespace

CapacityTable gh_capacities(const EllipsoidSpec& spec, std::size_t count)
{
    if (count < 1) throw InvalidArgument("capacity count must be at least 1");
    CapacityTable table;
    table.areas = spec.areas;
    // (value, factor, multiple); ties broken by factor index so the merge is deterministic.
    using Entry = std::tuple<double, std::size_t, long>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (std::size_t j = 0; j < spec.size(); ++j) heap.emplace(spec.areas[j], j, 1);
    while (table.values.size() < count) {
        const auto [value, j, k] = heap.top();
        heap.pop();
        table.values.push_back(value);
        heap.emplace(static_cast<double>(k + 1) * spec.areas[j], j, k + 1);
    }
    return table;
}

ZollResult zoll_check(const EllipsoidSpec& spec)
{
    const auto table = gh_capacities(spec, spec.size());
    return {table.values.front() == table.values.back(), table.values.front(), table.values.back()};
}

ZollResult zoll_check(const ProductDomain& domain)
{
    if (domain.p() != 2.0) throw InvalidArgument("the ellipsoid model exists only for 2-products");
    return zoll_check(EllipsoidSpec(domain.plane_areas()));
}

ShrinkResult shrink_profile_solve(const RadialProfile& profile, double direction, double width,
                                  double target_area)
{
    const double a = profile.area();
    if (!(width > 0.0 && width <= kPi)) throw InvalidArgument("window half-width must lie in (0, pi]");
    if (!(target_area > 0.0) || target_area > a) throw InvalidArgument("target area must lie in (0, area]");
    if (target_area == a) return {profile, 0.0};

    const std::size_t m = profile.size() * RadialProfile::kRefine;
    std::vector<double> base(m), bump(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(m);
        base[k] = profile.radius(theta);
        const double d = angular_distance(theta, direction);
        bump[k] = d < width ? 0.5 * (1.0 + std::cos(kPi * d / width)) : 0.0;
    }
    std::vector<double> shrunk(m);
    auto area_at = [&](double amp) {
        for (std::size_t k = 0; k < m; ++k) shrunk[k] = base[k] * (1.0 - amp * bump[k]);
        return RadialProfile::quadrature_area(shrunk, Interpolation::linear);
    };

    if (area_at(kMaxAmplitude) > target_area)
        throw PreconditionError("infeasible shrink: the window cannot remove area " + std::to_string(a - target_area));
    double lo = 0.0, hi = kMaxAmplitude;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        (area_at(mid) > target_area ? lo : hi) = mid;
    }
    const double amp = 0.5 * (lo + hi);
    area_at(amp);
    return {RadialProfile(shrunk, Interpolation::linear), amp};
}

}  // namespace symprod
