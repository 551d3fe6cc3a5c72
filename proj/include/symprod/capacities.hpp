#pragma once

#include "symprod/product_domain.hpp"
#include "symprod/radial_profile.hpp"

#include <vector>

namespace symprod {

/// First K capacities of E(a_1, ..., a_n): the K smallest elements, with multiplicity,
/// of { k a_j : k >= 1 }.
struct CapacityTable {
    std::vector<double> areas;
    std::vector<double> values;
};

CapacityTable gh_capacities(const EllipsoidSpec& spec, std::size_t count);

struct ZollResult {
    bool zoll = false;
    double c1 = 0.0;
    double cn = 0.0;
};

/// c_1 == c_n, compared exactly.
ZollResult zoll_check(const EllipsoidSpec& spec);
/// Uses the ellipsoid model E(plane areas) of a 2-product.
ZollResult zoll_check(const ProductDomain& domain);

struct ShrinkResult {
    RadialProfile profile;
    double amplitude = 0.0;
};

/// R'(theta) = R(theta) (1 - A b(theta)) with the raised-cosine bump
/// b = (1 + cos(pi d / w)) / 2 for angular distance d = |theta - direction| < w, and A in
/// [0, 1) chosen by bisection so that the area equals target_area. The result samples R' on
/// the input's refined grid with linear interpolation.
ShrinkResult shrink_profile_solve(const RadialProfile& profile, double direction, double width,
                                  double target_area);
inline RadialProfile shrink_profile(const RadialProfile& profile, double direction, double width,
                                    double target_area)
{
    return shrink_profile_solve(profile, direction, width, target_area).profile;
}

}  // namespace symprod
