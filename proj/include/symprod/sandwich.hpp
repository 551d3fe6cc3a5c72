#pragma once

#include "symprod/cutoff_map.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace symprod {

struct SandwichConfig {
    double epsilon = 0.05;
    int steps = 1000;
    /// Per-factor cut-off radii; empty means scan each with eps' = 0.9 sqrt(epsilon / n).
    std::vector<double> deltas;
    /// Step-doubling tolerance of the cut-off integrator; non-positive means epsilon / 20.
    double tolerance = 0.0;
};

struct SandwichReport {
    double epsilon = 0.0;
    double eps_prime = 0.0;
    std::vector<double> deltas;
    std::size_t samples = 0;
    std::size_t upper_violations = 0;  // image gauge above 1 + epsilon
    std::size_t lower_violations = 0;  // preimage outside E
    double worst_upper = 0.0;          // largest product gauge of an image
    double worst_lower = 0.0;          // largest ellipsoid gauge of a preimage
    std::optional<PointN> first_upper_violation;
    std::optional<PointN> first_lower_violation;
    bool passed() const { return upper_violations == 0 && lower_violations == 0; }
};

/// Checks (1 - eps) W_1 x_2 ... x_2 W_n  subset  Psi(E(a))  subset  (1 + eps) W_1 x_2 ... x_2 W_n
/// for the factor-wise cut-off map Psi on `samples` seeded points per direction.
SandwichReport sandwich_check(std::span<const RadialProfile> factors, const SandwichConfig& config,
                              std::size_t samples, std::uint64_t seed, int threads = 1);

}  // namespace symprod
