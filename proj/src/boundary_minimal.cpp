#include "symprod/boundary_minimal.hpp"

#include "symprod/parallel.hpp"
#include "symprod/random.hpp"

#include <algorithm>

namespace symprod {

namespace {

double angular_distance(double a, double b)
{
    const double d = wrap_angle(a - b);
    return std::min(d, kTwoPi - d);
}

double gauge2(std::span<const RadialProfile> factors, const PointN& x)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const double g = factors[i].gauge(x.segment<2>(2 * i));
        sum += g * g;
    }
    return std::sqrt(sum);
}

struct ChunkResult {
    std::size_t outside_u = 0;
    std::size_t violations = 0;
    std::vector<PointN> offending;
};

constexpr std::size_t kChunk = 4096;
constexpr std::size_t kKeep = 8;

}  // namespace

BoundaryMinimalReport boundary_minimal_experiment(std::span<const RadialProfile> factors,
                                                  const BoundaryMinimalConfig& config)
{
    const std::size_t n = factors.size();
    if (n == 0) throw InvalidArgument("no factors");
    if (static_cast<std::size_t>(config.center.size()) != 2 * n)
        throw InvalidArgument("centre point has the wrong dimension");
    const double a = factors[0].area();
    for (const auto& w : factors)
        if (std::abs(w.area() - a) > 1e-10 * a) throw PreconditionError("factor areas must be equal");
    if (!(config.target_area < a)) throw PreconditionError("shrunk area a' must be below a (a' = a is degenerate)");
    if (!(config.target_area > 0.0)) throw PreconditionError("shrunk area a' must be positive");

    BoundaryMinimalReport report;
    report.area = a;
    report.shrunk_area = config.target_area;
    report.samples = config.samples;

    std::vector<RadialProfile> shrunk;
    double widen = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 zi = config.center.segment<2>(2 * i);
        if (factors[i].gauge(zi) <= 1e-12)
            throw PreconditionError("every factor of the centre point must be nonzero (z_" + std::to_string(i + 1) +
                                    " = 0)");
        const double direction = polar_angle(zi);
        auto result = shrink_profile_solve(factors[i], direction, config.width, config.target_area);
        report.directions.push_back(direction);
        report.amplitudes.push_back(result.amplitude);
        shrunk.push_back(std::move(result.profile));
        widen = std::max(widen, 2.0 * kTwoPi / static_cast<double>(factors[i].size() * RadialProfile::kRefine));
    }
    const double max_amp = *std::max_element(report.amplitudes.begin(), report.amplitudes.end());
    report.eta = config.eta > 0.0 ? config.eta : max_amp * (1.0 + 1e-9);
    const double window = config.width + widen;

    auto in_u = [&](const PointN& x, double g) {
        if (!(g > 1.0 - report.eta && g < 1.0 + report.eta)) return false;
        for (std::size_t i = 0; i < n; ++i) {
            const Point2 zi = x.segment<2>(2 * i);
            if (zi.isZero(0.0)) continue;
            if (angular_distance(polar_angle(zi), report.directions[i]) < window) return true;
        }
        return false;
    };

    std::vector<double> radii;
    for (const auto& w : factors)
        radii.push_back(w.max_radius() * (w.interpolation() == Interpolation::linear ? 1.0 : 1.01));

    const std::size_t chunks = (config.samples + kChunk - 1) / kChunk;
    std::vector<ChunkResult> results(2 * chunks);
    parallel_chunks(2 * chunks, config.threads, [&](std::size_t c) {
        const bool shell = c >= chunks;
        const std::size_t base = shell ? c - chunks : c;
        RandomStream rng(config.seed, c);
        const std::size_t count = std::min(kChunk, config.samples - base * kChunk);
        ChunkResult& out = results[c];
        PointN x(2 * n);
        for (std::size_t k = 0; k < count; ++k) {
            double g = 0.0;
            if (!shell) {
                do {
                    for (std::size_t i = 0; i < n; ++i) {
                        x(2 * i) = rng.uniform(-radii[i], radii[i]);
                        x(2 * i + 1) = rng.uniform(-radii[i], radii[i]);
                    }
                    g = gauge2(factors, x);
                } while (g > 1.0);
            } else {
                // Dirichlet levels, uniform angles, radial scale in [1 - eta, 1].
                double sum = 0.0;
                std::vector<double> t(n);
                for (auto& v : t) sum += (v = rng.exponential());
                const double s = 1.0 - report.eta * rng.uniform();
                for (std::size_t i = 0; i < n; ++i)
                    x.segment<2>(2 * i) = s * std::sqrt(t[i] / sum) * factors[i].boundary_point(kTwoPi * rng.uniform());
                g = gauge2(factors, x);
                if (g > 1.0) continue;
            }
            if (in_u(x, g)) continue;
            ++out.outside_u;
            if (gauge2(shrunk, x) > 1.0) {
                ++out.violations;
                if (out.offending.size() < kKeep) out.offending.push_back(x);
            }
        }
    });
    for (auto& r : results) {
        report.outside_u += r.outside_u;
        report.violations += r.violations;
        for (auto& x : r.offending)
            if (report.offending.size() < kKeep) report.offending.push_back(std::move(x));
    }

    std::vector<double> original(n, a), reduced(n, config.target_area);
    report.c1_original = gh_capacities(EllipsoidSpec(original), 1).values.front();
    report.c1_shrunk = gh_capacities(EllipsoidSpec(reduced), 1).values.front();
    report.gap = report.c1_original - report.c1_shrunk;
    return report;
}

}  // namespace symprod
