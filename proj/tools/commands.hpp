#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace symprod::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

struct AreaOptions {
    std::string spec;
};

struct MapOptions {
    std::string spec;
    std::size_t factor = 0;
    int grid = 21;
    double extent = 1.5;  // half-width of the grid in units of sqrt(a / pi)
};

struct VolumeOptions {
    std::string spec;
    std::size_t samples = 1000000;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct FlowOptions {
    std::string spec;
    std::vector<double> point;
    std::vector<double> t_range{0.0, 1.0};
    int steps = 100;
};

struct ConjugacyOptions {
    std::string spec;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    double t_max = 0.0;  // non-positive: twice the largest factor area
    double tolerance = 1e-6;
};

struct CapacitiesOptions {
    std::vector<double> areas;
    std::string spec;
    std::size_t count = 4;
};

struct BoundaryMinimalOptions {
    std::string spec;
    std::vector<double> center_angles;  // default pi/3, 5pi/4, repeated
    std::vector<double> levels;         // default 1/sqrt(n) each
    double width = 0.0;                 // non-positive: pi/4
    double target_ratio = 0.9;
    double eta = 0.0;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct SandwichOptions {
    std::string spec;
    double epsilon = 0.05;
    int steps = 1000;
    std::vector<double> deltas;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct BoxdimOptions {
    std::string target = "function";  // function | interval | boundary
    std::vector<std::string> params;   // key=value
    std::vector<int> scales;           // dyadic exponents from, to
    std::uint64_t seed = 0;
    int threads = 1;
    int trials = 4;
};

struct SelftestOptions {
    std::uint64_t seed = 7;
    int threads = 1;
    bool timings = false;
};

int run_area(const AreaOptions& o, std::ostream& out);
int run_map(const MapOptions& o, std::ostream& out);
int run_volume(const VolumeOptions& o, std::ostream& out);
int run_flow(const FlowOptions& o, std::ostream& out);
int run_conjugacy(const ConjugacyOptions& o, std::ostream& out);
int run_capacities(const CapacitiesOptions& o, std::ostream& out);
int run_boundary_minimal(const BoundaryMinimalOptions& o, std::ostream& out);
int run_sandwich(const SandwichOptions& o, std::ostream& out);
int run_boxdim(const BoxdimOptions& o, std::ostream& out);
int run_selftest(const SelftestOptions& o, std::ostream& out, std::ostream& log);

}  // namespace symprod::cli
