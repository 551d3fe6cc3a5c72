#pragma once

#include "symprod/capacities.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace symprod {

struct BoundaryMinimalConfig {
    /// Boundary point of the product with every z_i != 0; windows are centred at arg z_i.
    PointN center;
    double width = kPi / 4;       // angular half-width of every window
    double target_area = 0.0;     // a' < a
    /// Thickness of U around the boundary; non-positive means the largest bump amplitude.
    double eta = 0.0;
    std::size_t samples = 100000;
    std::uint64_t seed = 7;
    int threads = 1;
};

struct BoundaryMinimalReport {
    double area = 0.0;
    double shrunk_area = 0.0;
    double eta = 0.0;
    std::vector<double> directions;
    std::vector<double> amplitudes;
    std::size_t samples = 0;      // per sampling family (volume and boundary shell)
    std::size_t outside_u = 0;
    std::size_t violations = 0;
    std::vector<PointN> offending;  // first few violations
    double c1_original = 0.0;
    double c1_shrunk = 0.0;
    double gap = 0.0;
    bool passed() const { return violations == 0 && gap > 0.0; }
};

/// Shrinks every factor inside its window to area a', then checks that the product minus
///   U = union_i { z_i != 0, arg z_i within the window of factor i, 1 - eta < G < 1 + eta }
/// lies in the shrunk product, sampling M points uniformly in the product and M points in the
/// shell 1 - eta <= G <= 1. The window used for U is widened by two refined grid cells so that
/// it covers the support of the linearly interpolated bump.
BoundaryMinimalReport boundary_minimal_experiment(std::span<const RadialProfile> factors,
                                                  const BoundaryMinimalConfig& config);

}  // namespace symprod
