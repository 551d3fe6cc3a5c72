#pragma once

#include "symprod/product_domain.hpp"
#include "symprod/radial_profile.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace symprod {

/// Boundary point of a 2-product in split coordinates: z_i = levels[i] R_i(angles[i]) e^{i angles[i]}.
struct FlowPoint {
    std::vector<double> angles;
    std::vector<double> levels;
    std::size_t size() const { return angles.size(); }
};

/// Characteristic flow of the boundary of W extended one-homogeneously to R^2:
/// the gauge is kept and the angle advances so that the swept sector area is t.
/// Counterclockwise; period equal to the area.
Point2 char_flow_2d(const RadialProfile& profile, const Point2& z, double t);

/// Same flow obtained by RK4 integration of X = i grad H, H = gauge^2, with the gradient
/// taken by central differences. Only meaningful for C^1 profiles; used as a cross-check.
Point2 char_flow_ode(const RadialProfile& profile, const Point2& z, double t, int steps);

FlowPoint to_flow_point(std::span<const RadialProfile> factors, const PointN& x);
PointN to_ambient(std::span<const RadialProfile> factors, const FlowPoint& point);

/// Characteristic flow on the boundary of W_1 x_2 ... x_2 W_n: each factor runs its own
/// planar flow, levels unchanged.
FlowPoint product_flow(std::span<const RadialProfile> factors, const FlowPoint& point, double t);
/// Requires p = 2 and planar profile factors.
FlowPoint product_flow(const ProductDomain& domain, const FlowPoint& point, double t);

/// z_i -> e^{2 pi i t / a_i} z_i.
PointN reeb_ellipsoid(const EllipsoidSpec& spec, const PointN& z, double t);

/// Homeomorphism from the boundary of E(a_1, ..., a_n) (a_i the factor areas) to the boundary
/// of the product: z_i = r_i e^{2 pi i theta_i} goes to the time theta_i a_i flow of the
/// base point on the ray theta = 0 at level lambda_i = sqrt(pi r_i^2 / a_i).
/// Levels are renormalized so that sum lambda_i^2 = 1.
FlowPoint conjugacy_map(std::span<const RadialProfile> factors, const PointN& z, double tolerance = 1e-8);

/// |Psi(Reeb^t z) - Phi^t(Psi z)| in ambient coordinates.
double conjugacy_residual(std::span<const RadialProfile> factors, const PointN& z, double t);

/// Least t <= bound * max(a_i) at which all factors with positive level close up, i.e.
/// t / a_i is an integer within `tolerance` for every active i.
std::optional<double> orbit_period(std::span<const double> areas, const FlowPoint& point, double tolerance,
                                   long bound);
std::optional<double> orbit_period(std::span<const RadialProfile> factors, const FlowPoint& point,
                                   double tolerance, long bound);

struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

/// Exact period for rational areas: the least common multiple lcm(num) / gcd(den) of the
/// active areas in lowest terms.
Rational orbit_period_exact(std::span<const Rational> areas, const std::vector<bool>& active);

struct SystoleReport {
    bool passed = false;
    double area = 0.0;
    std::size_t points = 0;
    std::size_t failures = 0;
    /// Largest of |period - a| and the return distance |Phi^a(x) - x| over the sample.
    double worst_deviation = 0.0;
};

/// Samples boundary points of an equal-area 2-product and checks each closes at t = a.
SystoleReport is_foliated_by_systoles(std::span<const RadialProfile> factors, std::size_t count,
                                      std::uint64_t seed, double tolerance = 1e-8);

}  // namespace symprod
