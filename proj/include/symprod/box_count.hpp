#pragma once

#include "symprod/core.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace symprod {

/// Receives a batch of points packed as consecutive d-tuples.
using PointSink = std::function<void(std::span<const double>)>;

/// A set in R^d given by a point generator. emit(pitch, piece, sink) writes the points of one
/// of `pieces` disjoint parts of the parametrization; consecutive points of a chain are at
/// most `pitch` apart and every point of the set is within pitch of an emitted point.
struct PointSampler {
    std::size_t dimension = 0;
    std::size_t pieces = 1;
    std::function<void(double pitch, std::size_t piece, const PointSink& sink)> emit;
};

/// Per-axis counting grid: a positive period wraps cell indices (period / eps must be an
/// integer), dither = false keeps the axis aligned with 0 in every trial.
struct AxisGrid {
    double period = 0.0;
    bool dither = true;
};

struct BoxCountOptions {
    int trials = 4;            // random grid offsets averaged
    std::uint64_t seed = 7;
    int threads = 1;
    std::vector<AxisGrid> axes;  // empty: every axis free and dithered
};

/// Occupied cells of eps Z^d + offset, averaged over the dithered offsets.
/// Rejects pitch > eps / 4.
double box_count(const PointSampler& sampler, double eps, double pitch, const BoxCountOptions& options = {});

/// box_count at every scale with pitch eps / 4.
std::vector<double> box_counts(const PointSampler& sampler, std::span<const double> scales,
                               const BoxCountOptions& options = {});

/// 2^-from, 2^-(from+1), ..., 2^-to.
std::vector<double> dyadic_scales(int from, int to);

struct DimensionEstimate {
    std::vector<double> scales;
    std::vector<double> counts;
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    double residual = 0.0;        // root mean square of the fit residuals
    double ci_half_width = 0.0;   // 95% pairs-bootstrap half width
    bool degenerate = false;      // counts constant across the window
    bool window_ok = false;       // at least 5 scales spanning 2 decades
};

/// Ordinary least squares slope of log N against log(1 / eps).
DimensionEstimate estimate_dimension(std::span<const double> scales, std::span<const double> counts,
                                     std::uint64_t seed = 7, int bootstrap = 400);

/// Graph {(x, f(x)) : x in [x0, x1]}; vertical jumps between samples are filled along chords.
PointSampler function_graph_sampler(std::function<double(double)> f, double x0, double x1);
/// Graph of f times [z0, z1] in R^3.
PointSampler graph_interval_sampler(std::function<double(double)> f, double x0, double x1, double z0, double z1);
PointSampler segment_sampler(PointN from, PointN to);
/// Boundary of [0, side]^2.
PointSampler square_boundary_sampler(double side = 1.0);
/// Graph of f over [0, 1]^2 in R^3; lipschitz bounds |grad f|.
PointSampler smooth_surface_sampler(std::function<double(double, double)> f, double lipschitz);

}  // namespace symprod
