#pragma once

#include "symprod/fractal_function.hpp"
#include "symprod/radial_profile.hpp"

#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace symprod {

/// Disk of the given area.
struct DiskSource {
    double area = kPi;
};

/// R(theta)^2 = (area / pi) (1 + modulation cos theta); smooth for |modulation| < 1.
struct CosineSource {
    double area = kPi;
    double modulation = 0.5;
};

/// Polygon listed counterclockwise; must be star-shaped about the origin.
struct PolygonSource {
    std::vector<Point2> vertices;
};

/// R(theta) = r0 (1 + amplitude W_{a,b}(theta / 2 pi)), b an integer so R is periodic.
struct WeierstrassSource {
    double r0 = 1.0;
    double amplitude = 0.1;
    double a = 0.5;
    double b = 3.0;
    int terms = 20;
};

/// Weierstrass disk with phase-shifted terms; empty phases means "draw from phase_seed".
struct HuntSource {
    WeierstrassSource base;
    std::vector<double> phases;
    std::uint64_t phase_seed = 7;
};

/// R(theta) = r0 (1 + amplitude f(x(theta))) with the Xiao-Zhou series f evaluated at
/// the mirrored argument x(theta) = min(theta, 2 pi - theta) / 2 pi, which makes R
/// continuous and 2 pi-periodic for any frequencies.
struct XiaoZhouSource {
    double r0 = 1.0;
    double amplitude = 0.1;
    double a = 0.5;
    double alpha = 1.5;
    double beta = 2.0;
    int terms = 6;
};

/// Raw radius samples at uniform angles.
struct SampleSource {
    std::vector<double> radii;
};

using ProfileSource = std::variant<DiskSource, CosineSource, PolygonSource, WeierstrassSource, HuntSource,
                                   XiaoZhouSource, SampleSource>;

struct ProfileOptions {
    int grid = 4096;
    /// Defaults per preset: cubic for disk/cosine, linear otherwise.
    /// Fractal presets always use linear interpolation.
    std::optional<Interpolation> interpolation;
    /// Rescale the result to this area.
    std::optional<double> normalize_area;
};

RadialProfile make_profile(const ProfileSource& source, const ProfileOptions& options = {});

/// Exact radius function of a preset (before sampling). Not available for SampleSource.
std::function<double(double)> preset_radius(const ProfileSource& source);

/// Fractal series underlying a fractal preset, if any.
std::optional<FractalFunction> preset_fractal(const ProfileSource& source);

bool is_fractal(const ProfileSource& source);

/// Axis-aligned square with vertices (+-half, +-half).
PolygonSource square(double half = 1.0);

}  // namespace symprod
