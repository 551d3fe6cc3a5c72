#include "symprod/dynamics.hpp"

#include "symprod/random.hpp"

#include <algorithm>
#include <numeric>

namespace symprod {

namespace {

constexpr double kActiveLevel = 1e-12;

double advance(const RadialProfile& w, double theta, double t)
{
    return wrap_angle(w.inverse_sector_area(w.sector_area(theta) + t));
}

std::vector<double> areas_of(std::span<const RadialProfile> factors)
{
    std::vector<double> a;
    for (const auto& w : factors) a.push_back(w.area());
    return a;
}

void check_size(std::span<const RadialProfile> factors, const FlowPoint& p)
{
    if (p.angles.size() != factors.size() || p.levels.size() != factors.size())
        throw InvalidArgument("flow point has the wrong number of factors");
}

}  // namespace

Point2 char_flow_2d(const RadialProfile& profile, const Point2& z, double t)
{
    if (z.isZero(0.0)) return z;
    const double level = profile.gauge(z);
    const double theta = advance(profile, polar_angle(z), t);
    return level * profile.boundary_point(theta);
}

Point2 char_flow_ode(const RadialProfile& profile, const Point2& z, double t, int steps)
{
    if (steps < 1) throw InvalidArgument("step count must be positive");
    auto field = [&](const Point2& x) -> Point2 {
        const double h = 1e-6 * std::max(x.norm(), 1e-300);
        auto H = [&](const Point2& y) {
            const double g = profile.gauge(y);
            return g * g;
        };
        const Point2 ex(h, 0.0), ey(0.0, h);
        const Point2 grad((H(x + ex) - H(x - ex)) / (2 * h), (H(x + ey) - H(x - ey)) / (2 * h));
        return rotate_quarter(grad);
    };
    const double dt = t / steps;
    Point2 y = z;
    for (int k = 0; k < steps; ++k) {
        const Point2 k1 = field(y);
        const Point2 k2 = field(y + 0.5 * dt * k1);
        const Point2 k3 = field(y + 0.5 * dt * k2);
        const Point2 k4 = field(y + dt * k3);
        y += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return y;
}

FlowPoint to_flow_point(std::span<const RadialProfile> factors, const PointN& x)
{
    if (static_cast<std::size_t>(x.size()) != 2 * factors.size()) throw InvalidArgument("dimension mismatch");
    FlowPoint p;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Point2 z = x.segment<2>(2 * i);
        p.angles.push_back(polar_angle(z));
        p.levels.push_back(factors[i].gauge(z));
    }
    return p;
}

PointN to_ambient(std::span<const RadialProfile> factors, const FlowPoint& point)
{
    check_size(factors, point);
    PointN x(2 * factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        x.segment<2>(2 * i) = point.levels[i] * factors[i].boundary_point(point.angles[i]);
    return x;
}

FlowPoint product_flow(std::span<const RadialProfile> factors, const FlowPoint& point, double t)
{
    check_size(factors, point);
    FlowPoint out = point;
    for (std::size_t i = 0; i < factors.size(); ++i) out.angles[i] = advance(factors[i], point.angles[i], t);
    return out;
}

FlowPoint product_flow(const ProductDomain& domain, const FlowPoint& point, double t)
{
    if (domain.p() != 2.0) throw InvalidArgument("the characteristic flow splits only for p = 2");
    const auto ptrs = domain.profiles();
    if (ptrs.empty()) throw InvalidArgument("product flow needs planar profile factors");
    std::vector<RadialProfile> factors;
    for (const auto* w : ptrs) factors.push_back(*w);
    return product_flow(std::span<const RadialProfile>(factors), point, t);
}

PointN reeb_ellipsoid(const EllipsoidSpec& spec, const PointN& z, double t)
{
    if (static_cast<std::size_t>(z.size()) != 2 * spec.size()) throw InvalidArgument("dimension mismatch");
    PointN out(z.size());
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const double angle = kTwoPi * std::fmod(t / spec.areas[i], 1.0);
        const double c = std::cos(angle), s = std::sin(angle);
        const double x = z(2 * i), y = z(2 * i + 1);
        out(2 * i) = c * x - s * y;
        out(2 * i + 1) = s * x + c * y;
    }
    return out;
}

FlowPoint conjugacy_map(std::span<const RadialProfile> factors, const PointN& z, double tolerance)
{
    if (static_cast<std::size_t>(z.size()) != 2 * factors.size()) throw InvalidArgument("dimension mismatch");
    FlowPoint p;
    double sum = 0.0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Point2 zi = z.segment<2>(2 * i);
        const double a = factors[i].area();
        const double level = std::sqrt(kPi * zi.squaredNorm() / a);
        sum += level * level;
        const double turns = polar_angle(zi) / kTwoPi;
        p.angles.push_back(wrap_angle(factors[i].inverse_sector_area(turns * a)));
        p.levels.push_back(level);
    }
    if (std::abs(sum - 1.0) > tolerance)
        throw InvalidArgument("point is off the ellipsoid boundary: sum pi|z_i|^2/a_i = " + std::to_string(sum));
    const double scale = 1.0 / std::sqrt(sum);
    for (double& l : p.levels) l *= scale;
    return p;
}

double conjugacy_residual(std::span<const RadialProfile> factors, const PointN& z, double t)
{
    const EllipsoidSpec spec(areas_of(factors));
    const PointN lhs = to_ambient(factors, conjugacy_map(factors, reeb_ellipsoid(spec, z, t)));
    const PointN rhs = to_ambient(factors, product_flow(factors, conjugacy_map(factors, z), t));
    return (lhs - rhs).norm();
}

std::optional<double> orbit_period(std::span<const double> areas, const FlowPoint& point, double tolerance,
                                   long bound)
{
    if (point.levels.size() != areas.size()) throw InvalidArgument("flow point has the wrong number of factors");
    std::vector<double> active;
    for (std::size_t i = 0; i < areas.size(); ++i)
        if (point.levels[i] > kActiveLevel) active.push_back(areas[i]);
    if (active.empty()) throw InvalidArgument("orbit period of the origin is undefined");
    const double ref = *std::max_element(active.begin(), active.end());
    const double limit = static_cast<double>(bound) * *std::max_element(areas.begin(), areas.end());
    for (long k = 1; k * ref <= limit * (1.0 + 1e-12); ++k) {
        const double t = k * ref;
        const bool closed = std::all_of(active.begin(), active.end(), [&](double a) {
            const double q = t / a;
            return std::abs(q - std::round(q)) <= tolerance;
        });
        if (closed) return t;
    }
    return std::nullopt;
}

std::optional<double> orbit_period(std::span<const RadialProfile> factors, const FlowPoint& point,
                                   double tolerance, long bound)
{
    const auto a = areas_of(factors);
    return orbit_period(std::span<const double>(a), point, tolerance, bound);
}

Rational orbit_period_exact(std::span<const Rational> areas, const std::vector<bool>& active)
{
    if (active.size() != areas.size()) throw InvalidArgument("one activity flag per area expected");
    long long num = 0, den = 0;
    for (std::size_t i = 0; i < areas.size(); ++i) {
        if (!active[i]) continue;
        Rational r = areas[i];
        if (r.num <= 0 || r.den <= 0) throw InvalidArgument("areas must be positive rationals");
        const long long g = std::gcd(r.num, r.den);
        r.num /= g;
        r.den /= g;
        num = num == 0 ? r.num : std::lcm(num, r.num);
        den = den == 0 ? r.den : std::gcd(den, r.den);
    }
    if (num == 0) throw InvalidArgument("orbit period of the origin is undefined");
    return {num, den};
}

SystoleReport is_foliated_by_systoles(std::span<const RadialProfile> factors, std::size_t count,
                                      std::uint64_t seed, double tolerance)
{
    if (factors.empty()) throw InvalidArgument("no factors");
    const auto areas = areas_of(factors);
    const double a = areas.front();
    for (double x : areas)
        if (std::abs(x - a) > 1e-10 * a)
            throw PreconditionError("foliation by systoles needs equal factor areas");

    SystoleReport report;
    report.area = a;
    report.points = count;
    RandomStream rng(seed, 0x5a);
    for (std::size_t k = 0; k < count; ++k) {
        // Dirichlet levels and uniform angles give a boundary point.
        FlowPoint p;
        double sum = 0.0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            p.angles.push_back(kTwoPi * rng.uniform());
            const double e = rng.exponential();
            p.levels.push_back(e);
            sum += e;
        }
        for (double& l : p.levels) l = std::sqrt(l / sum);

        double deviation = 0.0;
        const auto period = orbit_period(std::span<const double>(areas), p, tolerance, 1000);
        if (!period) {
            deviation = std::numeric_limits<double>::infinity();
        } else {
            deviation = std::abs(*period - a);
            const PointN x = to_ambient(factors, p);
            deviation = std::max(deviation, (to_ambient(factors, product_flow(factors, p, a)) - x).norm());
        }
        report.worst_deviation = std::max(report.worst_deviation, deviation);
        if (deviation > tolerance) ++report.failures;
    }
    report.passed = report.failures == 0;
    return report;
}

}  // namespace symprod
