#include "symprod/radial_profile.hpp"

#include <Eigen/Sparse>

#include <algorithm>
#include <string>

namespace symprod {

namespace {

std::vector<double> spline_curvature(std::span<const double> y, double h)
{
    // Periodic cubic spline: M_{j-1} + 4 M_j + M_{j+1} = 6 (y_{j+1} - 2 y_j + y_{j-1}) / h^2.
    const int n = static_cast<int>(y.size());
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(3 * n);
    Eigen::VectorXd rhs(n);
    for (int j = 0; j < n; ++j) {
        const int prev = (j + n - 1) % n, next = (j + 1) % n;
        entries.emplace_back(j, j, 4.0);
        entries.emplace_back(j, prev, 1.0);
        entries.emplace_back(j, next, 1.0);
        rhs(j) = 6.0 * (y[next] - 2.0 * y[j] + y[prev]) / (h * h);
    }
    Eigen::SparseMatrix<double> system(n, n);
    system.setFromTriplets(entries.begin(), entries.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(system);
    Eigen::VectorXd m = solver.solve(rhs);
    return {m.data(), m.data() + n};
}

struct Interpolant {
    std::span<const double> y;
    std::span<const double> m;
    double h;
    bool cubic;

    double value(double theta) const
    {
        const std::size_t n = y.size();
        const double u = wrap_angle(theta) / h;
        std::size_t j = static_cast<std::size_t>(u);
        if (j >= n) j = n - 1;
        const double f = u - static_cast<double>(j);
        const std::size_t k = (j + 1) % n;
        double r = (1.0 - f) * y[j] + f * y[k];
        if (cubic) {
            const double g = 1.0 - f;
            r += h * h / 6.0 * ((g * g * g - g) * m[j] + (f * f * f - f) * m[k]);
        }
        return r;
    }

    double derivative(double theta) const
    {
        const std::size_t n = y.size();
        const double u = wrap_angle(theta) / h;
        std::size_t j = static_cast<std::size_t>(u);
        if (j >= n) j = n - 1;
        const double f = u - static_cast<double>(j);
        const std::size_t k = (j + 1) % n;
        double d = (y[k] - y[j]) / h;
        if (cubic) {
            const double g = 1.0 - f;
            d += h / 6.0 * (-(3.0 * g * g - 1.0) * m[j] + (3.0 * f * f - 1.0) * m[k]);
        }
        return d;
    }
};

void check_samples(std::span<const double> samples)
{
    if (samples.size() < static_cast<std::size_t>(RadialProfile::kMinSamples))
        throw InvalidArgument("radial profile needs at least " +
                              std::to_string(RadialProfile::kMinSamples) + " samples");
    for (std::size_t j = 0; j < samples.size(); ++j) {
        if (!(samples[j] > 0.0) || !std::isfinite(samples[j]))
            throw InvalidArgument("radius sample " + std::to_string(j) +
                                  " is not positive: domain is not star-shaped about the origin");
    }
}

}  // namespace

RadialProfile::RadialProfile(std::vector<double> samples, Interpolation interpolation, bool smooth)
    : samples_(std::move(samples)), interpolation_(interpolation), smooth_(smooth)
{
    check_samples(samples_);
    const std::size_t n = samples_.size();
    step_ = kTwoPi / static_cast<double>(n);
    if (interpolation_ == Interpolation::cubic_periodic) curvature_ = spline_curvature(samples_, step_);

    const Interpolant interp{samples_, curvature_, step_, interpolation_ == Interpolation::cubic_periodic};
    const std::size_t m = n * kRefine;
    refined_step_ = kTwoPi / static_cast<double>(m);
    refined_sq_.resize(m);
    min_radius_ = samples_[0];
    max_radius_ = samples_[0];
    for (std::size_t k = 0; k < m; ++k) {
        const double r = interp.value(static_cast<double>(k) * refined_step_);
        if (!(r > 0.0))
            throw InvalidArgument("interpolated radius is not positive at refined node " +
                                  std::to_string(k) + ": domain is not star-shaped about the origin");
        refined_sq_[k] = r * r;
        min_radius_ = std::min(min_radius_, r);
        max_radius_ = std::max(max_radius_, r);
    }
    cumulative_.resize(m + 1);
    cumulative_[0] = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double q1 = refined_sq_[(k + 1) % m];
        cumulative_[k + 1] = cumulative_[k] + 0.25 * refined_step_ * (refined_sq_[k] + q1);
    }
    area_ = cumulative_[m];
}

double RadialProfile::quadrature_area(std::span<const double> samples, Interpolation interpolation)
{
    check_samples(samples);
    const double h = kTwoPi / static_cast<double>(samples.size());
    std::vector<double> curvature;
    if (interpolation == Interpolation::cubic_periodic) curvature = spline_curvature(samples, h);
    const Interpolant interp{samples, curvature, h, interpolation == Interpolation::cubic_periodic};
    const std::size_t m = samples.size() * kRefine;
    const double hr = kTwoPi / static_cast<double>(m);
    // Periodic trapezoid: every node carries weight hr / 2 for the integrand R^2 / 2.
    double sum = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double r = interp.value(static_cast<double>(k) * hr);
        sum += r * r;
    }
    return 0.5 * hr * sum;
}

double RadialProfile::radius(double theta) const
{
    return Interpolant{samples_, curvature_, step_, interpolation_ == Interpolation::cubic_periodic}.value(theta);
}

double RadialProfile::radius_derivative(double theta) const
{
    return Interpolant{samples_, curvature_, step_, interpolation_ == Interpolation::cubic_periodic}.derivative(
        theta);
}

double RadialProfile::sector_area(double theta) const
{
    const double turns = std::floor(theta / kTwoPi);
    const double t = theta - kTwoPi * turns;
    const std::size_t m = refined_sq_.size();
    const double u = t / refined_step_;
    std::size_t k = static_cast<std::size_t>(u);
    if (k >= m) k = m - 1;
    const double tau = t - static_cast<double>(k) * refined_step_;
    const double q0 = refined_sq_[k], q1 = refined_sq_[(k + 1) % m];
    const double partial = 0.5 * (q0 * tau + (q1 - q0) * tau * tau / (2.0 * refined_step_));
    return turns * area_ + cumulative_[k] + partial;
}

double RadialProfile::sector_rate(double theta) const
{
    const double t = wrap_angle(theta);
    const std::size_t m = refined_sq_.size();
    const double u = t / refined_step_;
    std::size_t k = static_cast<std::size_t>(u);
    if (k >= m) k = m - 1;
    const double f = u - static_cast<double>(k);
    return 0.5 * ((1.0 - f) * refined_sq_[k] + f * refined_sq_[(k + 1) % m]);
}

double RadialProfile::inverse_sector_area(double s) const
{
    const double turns = std::floor(s / area_);
    double r = s - turns * area_;
    if (r >= area_) r = 0.0;
    // Bisection over the monotone table, then the cell quadratic.
    const std::size_t m = refined_sq_.size();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
    std::size_t k = static_cast<std::size_t>(std::distance(cumulative_.begin(), it));
    k = k == 0 ? 0 : std::min(k - 1, m - 1);
    const double rem = r - cumulative_[k];
    const double q0 = refined_sq_[k], q1 = refined_sq_[(k + 1) % m];
    const double quad = (q1 - q0) / (4.0 * refined_step_);
    const double lin = 0.5 * q0;
    // Stable root of quad tau^2 + lin tau - rem = 0.
    double tau = 2.0 * rem / (lin + std::sqrt(std::max(0.0, lin * lin + 4.0 * quad * rem)));
    // Newton polish.
    for (int it2 = 0; it2 < 2; ++it2) {
        const double f = quad * tau * tau + lin * tau - rem;
        const double df = 2.0 * quad * tau + lin;
        tau -= f / df;
    }
    tau = std::clamp(tau, 0.0, refined_step_);
    return kTwoPi * turns + static_cast<double>(k) * refined_step_ + tau;
}

double RadialProfile::gauge(const Point2& z) const
{
    const double norm = z.norm();
    if (norm == 0.0) return 0.0;
    return norm / radius(polar_angle(z));
}

RadialProfile RadialProfile::scaled(double s) const
{
    if (!(s > 0.0)) throw InvalidArgument("scale factor must be positive");
    std::vector<double> y(samples_);
    for (double& v : y) v *= s;
    return RadialProfile(std::move(y), interpolation_, smooth_);
}

RadialProfile RadialProfile::with_area(double target_area) const
{
    if (!(target_area > 0.0)) throw InvalidArgument("target area must be positive");
    RadialProfile out = scaled(std::sqrt(target_area / area_));
    // The quadrature of the scaled samples equals the target up to rounding; store the
    // target itself so that equal-area factors compare equal.
    if (std::abs(out.area_ - target_area) <= 1e-12 * target_area) {
        out.area_ = target_area;
        out.cumulative_.back() = target_area;
    }
    return out;
}

EllipsoidSpec::EllipsoidSpec(std::vector<double> a) : areas(std::move(a))
{
    if (areas.empty()) throw InvalidArgument("ellipsoid needs at least one area");
    for (double v : areas)
        if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument("ellipsoid areas must be positive");
}

}  // namespace symprod
