#include "symprod/disk_map.hpp"

namespace symprod {

MonotoneCircleMap::MonotoneCircleMap(const RadialProfile& profile) : profile_(&profile)
{
    const std::size_t n = profile.size();
    table_.resize(n);
    inverse_table_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
        table_[j] = forward(theta);
        inverse_table_[j] = inverse(theta);
    }
}

double MonotoneCircleMap::forward(double theta) const
{
    return profile_->inverse_sector_area(profile_->area() * theta / kTwoPi);
}

double MonotoneCircleMap::inverse(double phi) const
{
    return kTwoPi * profile_->sector_area(phi) / profile_->area();
}

Point2 disk_to_domain(const RadialProfile& profile, const Point2& z)
{
    const double rho = z.norm();
    if (rho == 0.0) return Point2::Zero();
    const double theta = polar_angle(z);
    const double phi = profile.inverse_sector_area(profile.area() * theta / kTwoPi);
    const double scale = rho * std::sqrt(kPi / profile.area()) * profile.radius(phi);
    return scale * unit_direction(phi);
}

Point2 domain_to_disk(const RadialProfile& profile, const Point2& w)
{
    const double r = w.norm();
    if (r == 0.0) return Point2::Zero();
    const double phi = polar_angle(w);
    const double theta = kTwoPi * profile.sector_area(phi) / profile.area();
    const double rho = r / (std::sqrt(kPi / profile.area()) * profile.radius(phi));
    return rho * unit_direction(theta);
}

PointN product_map(std::span<const RadialProfile> factors, const PointN& z)
{
    if (z.size() != static_cast<Eigen::Index>(2 * factors.size()))
        throw InvalidArgument("point dimension does not match the number of factors");
    PointN out(z.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        out.segment<2>(2 * i) = disk_to_domain(factors[i], z.segment<2>(2 * i));
    return out;
}

PointN product_map_inverse(std::span<const RadialProfile> factors, const PointN& w)
{
    if (w.size() != static_cast<Eigen::Index>(2 * factors.size()))
        throw InvalidArgument("point dimension does not match the number of factors");
    PointN out(w.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        out.segment<2>(2 * i) = domain_to_disk(factors[i], w.segment<2>(2 * i));
    return out;
}

Eigen::Matrix2d numerical_jacobian(const std::function<Point2(const Point2&)>& map, const Point2& z,
                                   double rel_step)
{
    const double h = rel_step * std::max(z.norm(), 1e-300);
    Eigen::Matrix2d jac;
    for (int k = 0; k < 2; ++k) {
        Point2 dz = Point2::Zero();
        dz(k) = h;
        jac.col(k) = (map(z + dz) - map(z - dz)) / (2.0 * h);
    }
    return jac;
}

}  // namespace symprod
