#pragma once

#include "symprod/core.hpp"

#include <span>
#include <vector>

namespace symprod {

enum class Interpolation { linear, cubic_periodic };

/// Compact star-shaped domain W = {r e^{i theta} : r <= R(theta)} in R^2.
///
/// The radius R is sampled at N uniform angles 2 pi j / N and interpolated
/// either linearly or by a periodic cubic spline. Sector areas
/// S(theta) = int_0^theta R^2 / 2 are tabulated on a grid refined kRefine
/// times; between refined nodes R^2 is taken linear, so S is C^1, strictly
/// increasing, and its inverse has a closed form on every cell.
///
/// Instances are immutable and safe to share between threads.
class RadialProfile {
public:
    static constexpr int kRefine = 8;
    static constexpr int kMinSamples = 16;

    RadialProfile(std::vector<double> samples, Interpolation interpolation, bool smooth = false);

    std::size_t size() const { return samples_.size(); }
    std::span<const double> samples() const { return samples_; }
    Interpolation interpolation() const { return interpolation_; }
    /// True only for profiles known to be C^1 (disk, cosine presets).
    bool is_smooth() const { return smooth_; }

    double radius(double theta) const;
    double radius_derivative(double theta) const;

    double area() const { return area_; }

    /// Unwrapped sector area: adds one full area per turn, so it is defined
    /// and strictly increasing on all of R.
    double sector_area(double theta) const;
    /// dS/dtheta as used by the sector-area table.
    double sector_rate(double theta) const;
    /// Inverse of sector_area on all of R.
    double inverse_sector_area(double s) const;

    /// Minkowski functional |z| / R(arg z); zero at the origin.
    double gauge(const Point2& z) const;
    bool contains(const Point2& z) const { return gauge(z) <= 1.0; }
    Point2 boundary_point(double theta) const { return radius(theta) * unit_direction(theta); }

    double min_radius() const { return min_radius_; }
    double max_radius() const { return max_radius_; }

    /// Same shape scaled by s > 0 (area scales by s^2 exactly).
    RadialProfile scaled(double s) const;
    RadialProfile with_area(double target_area) const;

    /// Area the constructor would assign to the given data, without building
    /// the full profile (sector tables are skipped).
    static double quadrature_area(std::span<const double> samples, Interpolation interpolation);

private:
    double refined_step() const { return refined_step_; }

    std::vector<double> samples_;
    Interpolation interpolation_;
    bool smooth_;
    double step_ = 0.0;
    double refined_step_ = 0.0;
    std::vector<double> curvature_;  // spline second derivatives (cubic only)
    std::vector<double> refined_sq_; // R^2 at refined nodes
    std::vector<double> cumulative_; // S at refined nodes, size M + 1
    double area_ = 0.0;
    double min_radius_ = 0.0;
    double max_radius_ = 0.0;
};

/// Symplectic ellipsoid E(a_1, ..., a_n) = { sum pi |z_i|^2 / a_i <= 1 }.
struct EllipsoidSpec {
    std::vector<double> areas;

    explicit EllipsoidSpec(std::vector<double> a);
    std::size_t size() const { return areas.size(); }
};

/// Square root of sum pi |z_i|^2 / a_i for z laid out as (x_1, y_1, x_2, y_2, ...).
template <typename Derived>
double ellipsoid_gauge(const Eigen::MatrixBase<Derived>& z, std::span<const double> areas)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < areas.size(); ++i) {
        const double x = z(2 * i), y = z(2 * i + 1);
        sum += kPi * (x * x + y * y) / areas[i];
    }
    return std::sqrt(sum);
}

inline double area(const RadialProfile& profile) { return profile.area(); }
inline double gauge2d(const RadialProfile& profile, const Point2& z) { return profile.gauge(z); }

}  // namespace symprod
