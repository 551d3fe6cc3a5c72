#include "symprod/sandwich.hpp"

#include "symprod/parallel.hpp"
#include "symprod/random.hpp"

#include <algorithm>
#include <memory>

namespace symprod {

namespace {

constexpr std::size_t kChunk = 2048;

struct ChunkResult {
    std::size_t violations = 0;
    double worst = 0.0;
    std::optional<PointN> first;
};

double product_gauge2(std::span<const RadialProfile> factors, const PointN& w)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const double g = factors[i].gauge(w.segment<2>(2 * i));
        sum += g * g;
    }
    return std::sqrt(sum);
}

}  // namespace

SandwichReport sandwich_check(std::span<const RadialProfile> factors, const SandwichConfig& config,
                              std::size_t samples, std::uint64_t seed, int threads)
{
    const double eps = config.epsilon;
    if (!(eps > 0.0 && eps < 1.0)) throw PreconditionError("sandwich check needs epsilon in (0, 1)");
    if (factors.empty()) throw InvalidArgument("sandwich check needs at least one factor");
    const std::size_t n = factors.size();
    if (!config.deltas.empty() && config.deltas.size() != n)
        throw InvalidArgument("one cut-off radius per factor expected");

    SandwichReport report;
    report.epsilon = eps;
    report.eps_prime = 0.9 * std::sqrt(eps / static_cast<double>(n));
    report.samples = samples;
    const double tolerance = config.tolerance > 0.0 ? config.tolerance : eps / 20.0;

    std::vector<double> areas(n);
    std::vector<CutoffDiskMap> maps;
    maps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        areas[i] = factors[i].area();
        const double delta = config.deltas.empty() ? scan_cutoff_delta(factors[i], report.eps_prime, config.steps)
                                                   : config.deltas[i];
        report.deltas.push_back(delta);
        maps.emplace_back(factors[i], CutoffMapConfig{delta, config.steps, tolerance, true});
    }

    const std::size_t chunks = (samples + kChunk - 1) / kChunk;
    std::vector<ChunkResult> upper(chunks), lower(chunks);

    // Forward: uniform points of E, rejection from the bounding box.
    parallel_chunks(chunks, threads, [&](std::size_t c) {
        RandomStream rng(seed, 2 * c);
        const std::size_t count = std::min(kChunk, samples - c * kChunk);
        ChunkResult& out = upper[c];
        PointN z(2 * n), w(2 * n);
        for (std::size_t k = 0; k < count; ++k) {
            do {
                for (std::size_t i = 0; i < n; ++i) {
                    const double r = std::sqrt(areas[i] / kPi);
                    z(2 * i) = rng.uniform(-r, r);
                    z(2 * i + 1) = rng.uniform(-r, r);
                }
            } while (ellipsoid_gauge(z, areas) > 1.0);
            for (std::size_t i = 0; i < n; ++i) w.segment<2>(2 * i) = maps[i](Point2(z.segment<2>(2 * i)));
            const double g = product_gauge2(factors, w);
            out.worst = std::max(out.worst, g);
            if (g > 1.0 + eps) {
                if (!out.first) out.first = z;
                ++out.violations;
            }
        }
    });

    // Backward: uniform points of (1 - eps) W_1 x_2 ... x_2 W_n.
    parallel_chunks(chunks, threads, [&](std::size_t c) {
        RandomStream rng(seed, 2 * c + 1);
        const std::size_t count = std::min(kChunk, samples - c * kChunk);
        ChunkResult& out = lower[c];
        PointN z(2 * n), w(2 * n);
        for (std::size_t k = 0; k < count; ++k) {
            do {
                for (std::size_t i = 0; i < n; ++i) {
                    const double r = (1.0 - eps) * factors[i].max_radius() * 1.001;
                    w(2 * i) = rng.uniform(-r, r);
                    w(2 * i + 1) = rng.uniform(-r, r);
                }
            } while (product_gauge2(factors, w) > 1.0 - eps);
            for (std::size_t i = 0; i < n; ++i) z.segment<2>(2 * i) = maps[i].inverse(Point2(w.segment<2>(2 * i)));
            const double g = ellipsoid_gauge(z, areas);
            out.worst = std::max(out.worst, g);
            if (g > 1.0) {
                if (!out.first) out.first = w;
                ++out.violations;
            }
        }
    });

    for (std::size_t c = 0; c < chunks; ++c) {
        report.upper_violations += upper[c].violations;
        report.worst_upper = std::max(report.worst_upper, upper[c].worst);
        if (!report.first_upper_violation && upper[c].first) report.first_upper_violation = upper[c].first;
        report.lower_violations += lower[c].violations;
        report.worst_lower = std::max(report.worst_lower, lower[c].worst);
        if (!report.first_lower_violation && lower[c].first) report.first_lower_violation = lower[c].first;
    }
    return report;
}

}  // namespace symprod
