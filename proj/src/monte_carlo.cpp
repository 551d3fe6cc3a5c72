#include "symprod/parallel.hpp"
#include "symprod/product_domain.hpp"
#include "symprod/random.hpp"

namespace symprod {

VolumeEstimate mc_volume(const ProductDomain& domain, std::size_t samples, std::uint64_t seed, int threads)
{
    if (samples < 1000) throw InvalidArgument("Monte Carlo volume needs at least 1000 samples");
    constexpr std::size_t kChunk = 8192;
    const auto radii = domain.bounding_radii();

    VolumeEstimate out;
    out.samples = samples;
    out.box_volume = 1.0;
    for (double r : radii) out.box_volume *= 4.0 * r * r;

    const std::size_t chunks = (samples + kChunk - 1) / kChunk;
    std::vector<std::size_t> hits(chunks, 0);
    parallel_chunks(chunks, threads, [&](std::size_t c) {
        RandomStream rng(seed, c);
        const std::size_t count = std::min(kChunk, samples - c * kChunk);
        PointN x(domain.dimension());
        std::size_t h = 0;
        for (std::size_t k = 0; k < count; ++k) {
            for (std::size_t j = 0; j < radii.size(); ++j) {
                x(2 * j) = rng.uniform(-radii[j], radii[j]);
                x(2 * j + 1) = rng.uniform(-radii[j], radii[j]);
            }
            if (domain.contains(x)) ++h;
        }
        hits[c] = h;
    });
    for (std::size_t h : hits) out.hits += h;

    const double frac = static_cast<double>(out.hits) / static_cast<double>(samples);
    out.estimate = out.box_volume * frac;
    out.standard_error = out.box_volume * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
    return out;
}

}  // namespace symprod
