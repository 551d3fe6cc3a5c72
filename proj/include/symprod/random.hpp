#pragma once

#include <cstdint>
#include <random>

namespace symprod {

/// splitmix64 finalizer; used to derive independent per-chunk seeds.
inline std::uint64_t mix_seed(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Random stream addressed by (seed, stream id). Streams for different ids are
/// independent of each other and of the order in which they are consumed, so
/// work split into fixed chunks gives identical results for any thread count.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream)
        : engine_(mix_seed(mix_seed(seed) ^ mix_seed(stream + 0x632be59bd9b4e019ULL)))
    {
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard exponential variate, used for Dirichlet-uniform simplex weights.
    double exponential()
    {
        double u = uniform();
        return -std::log1p(-u);
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace symprod
