#pragma once

#include "symprod/boundary_minimal.hpp"
#include "symprod/boundary_graph.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace symprod {

/// Outcome of one invariant check. `detail` holds `key=value` pairs separated by `;` and
/// depends only on the seed, never on the thread count or on timings.
struct CheckResult {
    std::string id;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelftestCheck {
    const char* id;
    const char* name;
    CheckResult (*run)(std::uint64_t seed, int threads);
};

/// Checks in report order. Ids are the criterion numbers; criterion 10 is split into
/// 10a (graph), 10b (graph x interval) and 10c (boundary of a 2-product).
std::span<const SelftestCheck> selftest_checks();

using SelftestProgress = std::function<void(const CheckResult&, double seconds)>;

std::vector<CheckResult> run_selftest(std::uint64_t seed, int threads, const SelftestProgress& progress = {});

/// Two equal-area factors and the window centre used by the boundary-minimality check;
/// data/boundary_minimal.spec describes the same domain.
std::vector<RadialProfile> boundary_minimal_factors();
BoundaryMinimalConfig boundary_minimal_config(std::span<const RadialProfile> factors, std::uint64_t seed,
                                              int threads);

/// Boundary patch of W x_2 E(a_2) used for the n = 2 dimension estimate, with W the
/// Weierstrass disk (fractal) or the disk of the same mean radius.
BoundaryGraphSampler boundary_patch(bool fractal);
std::vector<double> boundary_patch_scales();

}  // namespace symprod
