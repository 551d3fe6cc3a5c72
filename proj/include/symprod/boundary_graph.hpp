#pragma once

#include "symprod/box_count.hpp"
#include "symprod/radial_profile.hpp"

#include <utility>
#include <vector>

namespace symprod {

/// Patch of the boundary of W_1 x_2 E(a_2, ..., a_n) written as the graph
///   r_n = sqrt((a_n / pi) (1 - r_1^2 / R_1(theta_1)^2 - sum_{1<j<n} pi r_j^2 / a_j))
/// over the parameter box r_j in [lo_j, hi_j) (j < n), u_j = theta_j / 2 pi in [lo, hi)
/// (j <= n, full turns by default).
///
/// Graph coordinates are (r_1, u_1, r_2, u_2, ..., r_{n-1}, u_{n-1}, u_n, r_n). Counting
/// happens in these coordinates: full-turn u axes are periodic with period 1, box edges are
/// kept aligned (they should be multiples of the box sizes), and r_n is dithered. The chart
/// is bi-Lipschitz on the box, so box dimension is unchanged.
class BoundaryGraphSampler {
public:
    BoundaryGraphSampler(RadialProfile first, std::vector<double> areas,
                         std::vector<std::pair<double, double>> radius_box,
                         std::vector<std::pair<double, double>> turn_box = {}, double margin = 1e-3);

    std::size_t factors() const { return areas_.size() + 1; }
    std::size_t dimension() const { return 2 * factors(); }

    /// Radicand of the graph formula divided by a_n / pi.
    double radicand(std::span<const double> radii, double theta1) const;
    double last_radius(std::span<const double> radii, double theta1) const;
    PointN to_ambient(const PointN& graph) const;
    /// Product gauge of an ambient point (2-product of W_1 and the disks).
    double product_gauge(const PointN& ambient) const;

    std::vector<AxisGrid> grid() const;
    PointSampler sampler() const;

private:
    RadialProfile first_;
    std::vector<double> areas_;  // a_2, ..., a_n
    std::vector<std::pair<double, double>> box_;
    std::vector<std::pair<double, double>> turns_;
    double margin_;
    double min_radicand_ = 0.0;
};

}  // namespace symprod
