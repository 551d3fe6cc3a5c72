#include "symprod/presets.hpp"

#include <limits>
#include <string>

namespace symprod {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double cross(const Point2& u, const Point2& v) { return u(0) * v(1) - u(1) * v(0); }

/// Radius function of a star-shaped polygon: the single ray crossing per edge.
std::function<double(double)> polygon_radius(const PolygonSource& poly)
{
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    if (n < 3) throw InvalidArgument("polygon needs at least 3 vertices");
    double winding = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = v[i];
        const Point2& q = v[(i + 1) % n];
        if (p.norm() == 0.0) throw InvalidArgument("polygon vertex at the origin");
        if (!(cross(p, q) > 0.0))
            throw InvalidArgument("polygon is not star-shaped about the origin (edge " + std::to_string(i) +
                                  " is not seen counterclockwise)");
        winding += std::atan2(cross(p, q), p.dot(q));
    }
    if (std::abs(winding - kTwoPi) > 1e-9)
        throw InvalidArgument("polygon does not wind once around the origin");

    return [v](double theta) {
        const Point2 d = unit_direction(theta);
        const std::size_t n = v.size();
        // The edge whose angular span contains theta has the smallest positive crossing.
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2& p = v[i];
            const Point2 e = v[(i + 1) % n] - p;
            const double denom = cross(d, e);
            if (denom <= 0.0) continue;
            const double r = cross(p, e) / denom;
            // Parameter along the edge must lie in [0, 1].
            const double s = cross(p, d) / denom;
            if (s < -1e-12 || s > 1.0 + 1e-12) continue;
            if (r > 0.0 && r < best) best = r;
        }
        return best;
    };
}

double weierstrass_radius(const WeierstrassSource& w, const FractalFunction& f, double theta)
{
    return w.r0 * (1.0 + w.amplitude * f(wrap_angle(theta) / kTwoPi));
}

void check_weierstrass_source(const WeierstrassSource& w)
{
    if (!(w.r0 > 0.0)) throw InvalidArgument("r0 must be positive");
    if (w.b != std::floor(w.b) || w.b < 2.0)
        throw InvalidArgument("Weierstrass disk needs an integer b >= 2 for a periodic boundary");
}

}  // namespace

PolygonSource square(double half)
{
    return PolygonSource{{Point2(half, -half), Point2(half, half), Point2(-half, half), Point2(-half, -half)}};
}

std::optional<FractalFunction> preset_fractal(const ProfileSource& source)
{
    return std::visit(
        overloaded{
            [](const WeierstrassSource& w) -> std::optional<FractalFunction> {
                check_weierstrass_source(w);
                return FractalFunction::weierstrass(w.a, w.b, w.terms);
            },
            [](const HuntSource& h) -> std::optional<FractalFunction> {
                check_weierstrass_source(h.base);
                if (h.phases.empty())
                    return FractalFunction::weierstrass_phase(h.base.a, h.base.b, h.base.terms, h.phase_seed);
                return FractalFunction::weierstrass_phase(h.base.a, h.base.b, h.base.terms, h.phases);
            },
            [](const XiaoZhouSource& x) -> std::optional<FractalFunction> {
                if (!(x.r0 > 0.0)) throw InvalidArgument("r0 must be positive");
                return FractalFunction::xiao_zhou(x.a, x.alpha, x.beta, x.terms);
            },
            [](const auto&) -> std::optional<FractalFunction> { return std::nullopt; },
        },
        source);
}

bool is_fractal(const ProfileSource& source)
{
    return std::holds_alternative<WeierstrassSource>(source) || std::holds_alternative<HuntSource>(source) ||
           std::holds_alternative<XiaoZhouSource>(source);
}

std::function<double(double)> preset_radius(const ProfileSource& source)
{
    return std::visit(
        overloaded{
            [](const DiskSource& d) -> std::function<double(double)> {
                if (!(d.area > 0.0)) throw InvalidArgument("disk area must be positive");
                const double r = std::sqrt(d.area / kPi);
                return [r](double) { return r; };
            },
            [](const CosineSource& c) -> std::function<double(double)> {
                if (!(c.area > 0.0)) throw InvalidArgument("area must be positive");
                if (!(std::abs(c.modulation) < 1.0)) throw InvalidArgument("cosine modulation must lie in (-1, 1)");
                return [c](double theta) { return std::sqrt(c.area / kPi * (1.0 + c.modulation * std::cos(theta))); };
            },
            [](const PolygonSource& p) -> std::function<double(double)> { return polygon_radius(p); },
            [&](const WeierstrassSource& w) -> std::function<double(double)> {
                auto f = *preset_fractal(source);
                return [w, f](double theta) { return weierstrass_radius(w, f, theta); };
            },
            [&](const HuntSource& h) -> std::function<double(double)> {
                auto f = *preset_fractal(source);
                return [w = h.base, f](double theta) { return weierstrass_radius(w, f, theta); };
            },
            [&](const XiaoZhouSource& x) -> std::function<double(double)> {
                auto f = *preset_fractal(source);
                return [x, f](double theta) {
                    const double t = wrap_angle(theta);
                    const double arg = std::min(t, kTwoPi - t) / kTwoPi;
                    return x.r0 * (1.0 + x.amplitude * f(arg));
                };
            },
            [](const SampleSource&) -> std::function<double(double)> {
                throw InvalidArgument("sample profiles have no closed-form radius");
            },
        },
        source);
}

RadialProfile make_profile(const ProfileSource& source, const ProfileOptions& options)
{
    if (options.grid < RadialProfile::kMinSamples)
        throw InvalidArgument("grid size must be at least " + std::to_string(RadialProfile::kMinSamples));

    const bool smooth = std::holds_alternative<DiskSource>(source) || std::holds_alternative<CosineSource>(source);
    Interpolation interp = smooth ? Interpolation::cubic_periodic : Interpolation::linear;
    if (options.interpolation && !is_fractal(source)) interp = *options.interpolation;

    std::vector<double> samples;
    if (const auto* raw = std::get_if<SampleSource>(&source)) {
        samples = raw->radii;
    } else {
        const auto radius = preset_radius(source);
        const std::size_t n = static_cast<std::size_t>(options.grid);
        samples.resize(n);
        for (std::size_t j = 0; j < n; ++j)
            samples[j] = radius(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
    }
    RadialProfile profile(std::move(samples), interp, smooth && interp == Interpolation::cubic_periodic);
    if (options.normalize_area) return profile.with_area(*options.normalize_area);
    return profile;
}

}  // namespace symprod
