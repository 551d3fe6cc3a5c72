#include "symprod/cutoff_map.hpp"

#include "symprod/disk_map.hpp"

#include <algorithm>
#include <array>

namespace symprod {

namespace {

double bump_exp(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

}  // namespace

CutoffDiskMap::CutoffDiskMap(const RadialProfile& profile, CutoffMapConfig config)
    : profile_(&profile), config_(config)
{
    if (!(config_.delta > 0.0)) throw InvalidArgument("cut-off radius delta must be positive");
    if (config_.delta >= profile.area()) throw InvalidArgument("cut-off radius delta must be below the area");
    if (config_.steps < 1) throw InvalidArgument("step count must be positive");
    const double rmin = profile.min_radius();
    kappa_ = std::max(1.0, profile.area() / (kPi * rmin * rmin)) * (1.0 + 1e-6);

    if (!config_.validate) return;
    // Step doubling on a fixed set of probes across the integrated annulus.
    const std::array<double, 4> fractions{0.15, 0.45, 0.75, 0.97};
    for (double f : fractions) {
        const double area_level = frozen_area() + f * (exact_area() - frozen_area());
        const double rho = std::sqrt(area_level / kPi);
        for (int k = 0; k < 7; ++k) {
            const Point2 z = rho * unit_direction(0.37 + kTwoPi * k / 7.0);
            const Point2 coarse = integrate(z, config_.steps);
            const Point2 fine = integrate(z, 2 * config_.steps);
            validation_error_ = std::max(validation_error_, (coarse - fine).norm() / rho);
        }
    }
    if (validation_error_ > config_.tolerance)
        throw IntegrationError("cut-off flow integration with " + std::to_string(config_.steps) +
                               " steps misses tolerance: step-doubling error " +
                               std::to_string(validation_error_));
}

double CutoffDiskMap::cutoff(double s) const
{
    const double s0 = config_.delta / kTwoPi, s1 = config_.delta / kPi;
    if (s <= s0) return 0.0;
    if (s >= s1) return 1.0;
    const double x = (s - s0) / (s1 - s0);
    const double p = bump_exp(x), q = bump_exp(1.0 - x);
    return p / (p + q);
}

double CutoffDiskMap::cutoff_derivative(double s) const
{
    const double s0 = config_.delta / kTwoPi, s1 = config_.delta / kPi;
    if (s <= s0 || s >= s1) return 0.0;
    const double x = (s - s0) / (s1 - s0);
    const double p = bump_exp(x), q = bump_exp(1.0 - x);
    const double dp = p / (x * x), dq = q / ((1.0 - x) * (1.0 - x));
    const double denom = (p + q) * (p + q);
    return (dp * q + p * dq) / denom / (s1 - s0);
}

Point2 CutoffDiskMap::velocity(double t, const Point2& z) const
{
    const double s = z.squaredNorm();
    if (s == 0.0) return Point2::Zero();
    const double rho = cutoff(s);
    const double drho = cutoff_derivative(s);
    if (rho == 0.0 && drho == 0.0) return Point2::Zero();

    const RadialProfile& w = *profile_;
    const double a = w.area();
    const double phi = polar_angle(z);
    const double r = w.radius(phi);
    const double dr = w.radius_derivative(phi);
    const double defect = w.sector_area(phi) - a * phi / kTwoPi;
    const double rt2 = (1.0 - t) * a / kPi + t * r * r;
    const double omega = -2.0 * defect / rt2;
    const double g = (r * r - a / kPi) / (2.0 * rt2) + (t * r * dr / rt2) * omega;
    const Point2 jz = rotate_quarter(z);
    const double h = 0.5 * s * omega;
    return rho * (g * z + omega * jz) + h * 2.0 * drho * jz;
}

double CutoffDiskMap::hamiltonian(double t, const Point2& z) const
{
    const double s = z.squaredNorm();
    if (s == 0.0) return 0.0;
    const RadialProfile& w = *profile_;
    const double a = w.area();
    const double phi = polar_angle(z);
    const double r = w.radius(phi);
    const double rt2 = (1.0 - t) * a / kPi + t * r * r;
    const double defect = w.sector_area(phi) - a * phi / kTwoPi;
    return cutoff(s) * (-s * defect / rt2);
}

Point2 CutoffDiskMap::integrate(const Point2& z, int steps, bool backward) const
{
    const double dt = (backward ? -1.0 : 1.0) / steps;
    double t = backward ? 1.0 : 0.0;
    Point2 y = z;
    for (int k = 0; k < steps; ++k) {
        const Point2 k1 = velocity(t, y);
        const Point2 k2 = velocity(t + 0.5 * dt, y + 0.5 * dt * k1);
        const Point2 k3 = velocity(t + 0.5 * dt, y + 0.5 * dt * k2);
        const Point2 k4 = velocity(t + dt, y + dt * k3);
        y += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = backward ? 1.0 - (k + 1) * (1.0 / steps) : (k + 1) * (1.0 / steps);
    }
    return y;
}

Point2 CutoffDiskMap::operator()(const Point2& z) const
{
    const double level = kPi * z.squaredNorm();
    if (level <= frozen_area()) return z;
    if (level >= exact_area()) return disk_to_domain(*profile_, z);
    return integrate(z, config_.steps);
}

Point2 CutoffDiskMap::inverse(const Point2& w) const
{
    const double level = kPi * w.squaredNorm();
    if (level <= frozen_area()) return w;
    // Preimages under psi keep pi |z|^2 = a g(w)^2.
    const double g = profile_->gauge(w);
    if (profile_->area() * g * g >= exact_area()) return domain_to_disk(*profile_, w);
    return integrate(w, config_.steps, true);
}

double scan_cutoff_delta(const RadialProfile& profile, double eps_prime, int steps)
{
    if (!(eps_prime > 0.0 && eps_prime < 1.0)) throw InvalidArgument("eps' must lie in (0, 1)");
    const double rmin = profile.min_radius();
    const double kappa = std::max(1.0, profile.area() / (kPi * rmin * rmin)) * (1.0 + 1e-6);
    double delta = eps_prime * eps_prime * profile.area() / (kappa * kappa);
    for (int attempt = 0; attempt < 40; ++attempt, delta *= 0.5) {
        CutoffDiskMap map(profile, {delta, steps, 0.0, false});
        double worst = 0.0;
        constexpr int kRadii = 24, kAngles = 48;
        for (int i = 0; i <= kRadii; ++i) {
            const double level = map.frozen_area() + (map.exact_area() - map.frozen_area()) * i / kRadii;
            const double rho = std::sqrt(level / kPi);
            for (int k = 0; k < kAngles; ++k) {
                const Point2 z = rho * unit_direction(kTwoPi * (k + 0.5) / kAngles);
                worst = std::max(worst, profile.gauge(map(z)));
            }
        }
        if (worst <= eps_prime) return delta;
    }
    throw IntegrationError("no cut-off radius keeps the small disk inside eps' W");
}

}  // namespace symprod
