#pragma once

#include "symprod/radial_profile.hpp"

#include <functional>
#include <vector>

namespace symprod {

/// Degree-one circle map phi with S(phi(theta)) = a theta / (2 pi): the angle
/// reparametrization that equalizes sector areas of the disk D(a) and W.
///
/// Holds a reference to the profile, which must outlive the map.
class MonotoneCircleMap {
public:
    explicit MonotoneCircleMap(const RadialProfile& profile);

    double forward(double theta) const;
    double inverse(double phi) const;

    /// Values of phi on the profile's sample grid (and of phi^{-1}).
    const std::vector<double>& table() const { return table_; }
    const std::vector<double>& inverse_table() const { return inverse_table_; }

    const RadialProfile& profile() const { return *profile_; }

private:
    const RadialProfile* profile_;
    std::vector<double> table_;
    std::vector<double> inverse_table_;
};

inline MonotoneCircleMap angle_map(const RadialProfile& profile) { return MonotoneCircleMap(profile); }

/// psi(rho e^{i theta}) = rho sqrt(pi / a) R(phi(theta)) e^{i phi(theta)}, psi(0) = 0.
/// One-homogeneous, area preserving wherever R is C^1, maps D(A) onto sqrt(A / a) W.
Point2 disk_to_domain(const RadialProfile& profile, const Point2& z);
Point2 domain_to_disk(const RadialProfile& profile, const Point2& w);

/// Factor-wise disk_to_domain; maps E(a_1, ..., a_n) onto W_1 x_2 ... x_2 W_n.
PointN product_map(std::span<const RadialProfile> factors, const PointN& z);
PointN product_map_inverse(std::span<const RadialProfile> factors, const PointN& w);

/// Central-difference Jacobian with step rel_step * max(|z|, 1e-300).
Eigen::Matrix2d numerical_jacobian(const std::function<Point2(const Point2&)>& map, const Point2& z,
                                   double rel_step = 1e-5);

}  // namespace symprod
