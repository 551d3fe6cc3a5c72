#include "symprod/boundary_graph.hpp"

#include <algorithm>

namespace symprod {

namespace {

constexpr std::size_t kPieces = 16;

std::size_t node_count(double length, double step) { return std::max<std::size_t>(1, std::ceil(length / step)); }

}  // namespace

BoundaryGraphSampler::BoundaryGraphSampler(RadialProfile first, std::vector<double> areas,
                                           std::vector<std::pair<double, double>> radius_box,
                                           std::vector<std::pair<double, double>> turn_box, double margin)
    : first_(std::move(first)), areas_(std::move(areas)), box_(std::move(radius_box)), turns_(std::move(turn_box)),
      margin_(margin)
{
    if (turns_.empty()) turns_.assign(areas_.size() + 1, {0.0, 1.0});
    if (turns_.size() != areas_.size() + 1) throw InvalidArgument("one angle range per factor expected");
    for (const auto& [lo, hi] : turns_)
        if (!(lo >= 0.0 && hi > lo && hi <= 1.0)) throw InvalidArgument("angle ranges must lie in [0, 1] turns");
    if (areas_.empty()) throw InvalidArgument("boundary graph needs at least one ellipsoid factor");
    if (box_.size() != areas_.size())
        throw InvalidArgument("one radius range per factor except the last expected");
    for (double a : areas_)
        if (!(a > 0.0)) throw InvalidArgument("ellipsoid areas must be positive");
    for (std::size_t j = 0; j < box_.size(); ++j) {
        const auto [lo, hi] = box_[j];
        if (!(lo > 0.0))
            throw PreconditionError("parameter box touches r_" + std::to_string(j + 1) + " = 0");
        if (!(hi > lo)) throw InvalidArgument("empty radius range");
    }
    const double rmin = first_.min_radius();
    min_radicand_ = 1.0 - box_[0].second * box_[0].second / (rmin * rmin);
    for (std::size_t j = 1; j < box_.size(); ++j)
        min_radicand_ -= kPi * box_[j].second * box_[j].second / areas_[j - 1];
    if (!(min_radicand_ >= margin_))
        throw PreconditionError("parameter box reaches z_n = 0: radicand " + std::to_string(min_radicand_) +
                                " below margin " + std::to_string(margin_));
}

double BoundaryGraphSampler::radicand(std::span<const double> radii, double theta1) const
{
    const double r1 = first_.radius(theta1);
    double v = 1.0 - radii[0] * radii[0] / (r1 * r1);
    for (std::size_t j = 1; j < box_.size(); ++j) v -= kPi * radii[j] * radii[j] / areas_[j - 1];
    return v;
}

double BoundaryGraphSampler::last_radius(std::span<const double> radii, double theta1) const
{
    return std::sqrt(areas_.back() / kPi * std::max(0.0, radicand(radii, theta1)));
}

PointN BoundaryGraphSampler::to_ambient(const PointN& graph) const
{
    const std::size_t n = factors();
    if (static_cast<std::size_t>(graph.size()) != 2 * n) throw InvalidArgument("dimension mismatch");
    PointN z(2 * n);
    for (std::size_t j = 0; j + 1 < n; ++j)
        z.segment<2>(2 * j) = graph(2 * j) * unit_direction(kTwoPi * graph(2 * j + 1));
    z.segment<2>(2 * n - 2) = graph(2 * n - 1) * unit_direction(kTwoPi * graph(2 * n - 2));
    return z;
}

double BoundaryGraphSampler::product_gauge(const PointN& ambient) const
{
    const double g = first_.gauge(ambient.segment<2>(0));
    double sum = g * g;
    for (std::size_t j = 0; j < areas_.size(); ++j)
        sum += kPi * ambient.segment<2>(2 * j + 2).squaredNorm() / areas_[j];
    return std::sqrt(sum);
}

std::vector<AxisGrid> BoundaryGraphSampler::grid() const
{
    const std::size_t n = factors();
    std::vector<AxisGrid> axes;
    auto angle_axis = [&](std::size_t j) -> AxisGrid {
        const bool full = turns_[j].first == 0.0 && turns_[j].second == 1.0;
        return full ? AxisGrid{1.0, true} : AxisGrid{0.0, false};
    };
    for (std::size_t j = 0; j + 1 < n; ++j) {
        axes.push_back({0.0, false});  // r_j
        axes.push_back(angle_axis(j));
    }
    axes.push_back(angle_axis(n - 1));
    axes.push_back({0.0, true});  // r_n
    return axes;
}

PointSampler BoundaryGraphSampler::sampler() const
{
    PointSampler s;
    s.dimension = dimension();
    s.pieces = kPieces;
    s.emit = [self = *this](double pitch, std::size_t piece, const PointSink& sink) {
        const std::size_t n = self.factors();
        const std::size_t m = n - 1;  // free radii
        const double k = self.areas_.back() / kPi;
        const double rmin = self.first_.min_radius();

        // Bound on |d r_n / d r_j| at radius r, using the largest radii elsewhere in the box.
        auto slope = [&](std::size_t j, double r) {
            double rest = 1.0;
            for (std::size_t i = 0; i < m; ++i) {
                if (i == j) continue;
                const double hi = self.box_[i].second;
                rest -= i == 0 ? hi * hi / (rmin * rmin) : kPi * hi * hi / self.areas_[i - 1];
            }
            const double w = j == 0 ? 1.0 / (rmin * rmin) : kPi / self.areas_[j - 1];
            const double f = std::sqrt(k * std::max(self.min_radicand_, rest - w * r * r));
            return k * w * r / f;
        };
        // Radius grids, spaced so that neighbouring rows stay within pitch.
        std::vector<std::vector<double>> rgrid(m);
        for (std::size_t j = 0; j < m; ++j) {
            const auto [lo, hi] = self.box_[j];
            for (double r = lo; r < hi;) {
                rgrid[j].push_back(r);
                const double s = slope(j, std::min(hi, r + pitch));
                r += pitch / std::sqrt(1.0 + s * s);
            }
        }
        // Angle grids of factors 2..n (half-open ranges).
        std::vector<std::vector<double>> ugrid(m);
        for (std::size_t j = 0; j < m; ++j) {
            const auto [lo, hi] = self.turns_[j + 1];
            const std::size_t cnt = node_count(hi - lo, pitch);
            for (std::size_t i = 0; i < cnt; ++i)
                ugrid[j].push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cnt));
        }
        // Walk over u_1 (closed range) no coarser than the profile samples.
        const auto [u_lo, u_hi] = self.turns_[0];
        const double fine = std::min(0.5 * pitch, 1.0 / static_cast<double>(self.first_.size()));
        const std::size_t walk_nodes = node_count(u_hi - u_lo, fine);

        const std::size_t rows = rgrid[0].size();
        const std::size_t i0 = rows * piece / kPieces, i1 = rows * (piece + 1) / kPieces;
        std::vector<double> radii(m), chain, point(2 * n);
        std::vector<std::size_t> ridx(m, 0), uidx(m, 0);  // u_2 .. u_n
        std::vector<long> bins;
        const double side = pitch / std::sqrt(2.0);
        std::vector<double> buffer;
        buffer.reserve(4096 * 2 * n);
        auto flush = [&] {
            if (!buffer.empty()) sink(buffer);
            buffer.clear();
        };

        for (std::size_t i = i0; i < i1; ++i) {
            radii[0] = rgrid[0][i];
            std::fill(ridx.begin(), ridx.end(), 0);
            for (;;) {
                for (std::size_t j = 1; j < m; ++j) radii[j] = rgrid[j][ridx[j]];
                // Exact curve points over u_1, subdivided where r_n jumps. A point is kept only if
                // its (u_1, r_n) bin of side pitch / sqrt 2 is new within the current u_1 column, so
                // every curve point lies within pitch of a kept one.
                chain.clear();
                long column = -1;
                bins.clear();
                auto visit = [&](double u, double r) {
                    const auto col = static_cast<long>(std::floor((u - u_lo) / side));
                    if (col != column) {
                        column = col;
                        bins.clear();
                    }
                    const auto bin = static_cast<long>(std::floor(r / side));
                    if (std::find(bins.begin(), bins.end(), bin) != bins.end()) return;
                    bins.push_back(bin);
                    chain.insert(chain.end(), {u, r});
                };
                double pu = u_lo, pr = self.last_radius(radii, kTwoPi * u_lo);
                visit(pu, pr);
                for (std::size_t c = 1; c <= walk_nodes; ++c) {
                    const double u = u_lo + (u_hi - u_lo) * static_cast<double>(c) / static_cast<double>(walk_nodes);
                    const double r = self.last_radius(radii, kTwoPi * u);
                    const auto sub = static_cast<std::size_t>(std::ceil(std::abs(r - pr) / side));
                    for (std::size_t q = 1; q < sub; ++q) {
                        const double v = pu + (u - pu) * static_cast<double>(q) / static_cast<double>(sub);
                        visit(v, self.last_radius(radii, kTwoPi * v));
                    }
                    visit(u, r);
                    pu = u;
                    pr = r;
                }
                // Repeat short runs of the chain for every angle grid point of the other
                // factors, so that repeated cells arrive close together.
                constexpr std::size_t kRun = 128;
                for (std::size_t b = 0; b < chain.size(); b += 2 * kRun) {
                    const std::size_t e = std::min(chain.size(), b + 2 * kRun);
                    std::fill(uidx.begin(), uidx.end(), 0);
                    for (;;) {
                        for (std::size_t j = 1; j < m; ++j) {
                            point[2 * j] = radii[j];
                            point[2 * j + 1] = ugrid[j - 1][uidx[j - 1]];
                        }
                        point[0] = radii[0];
                        point[2 * n - 2] = ugrid[m - 1][uidx[m - 1]];
                        for (std::size_t c = b; c < e; c += 2) {
                            point[1] = chain[c];
                            point[2 * n - 1] = chain[c + 1];
                            buffer.insert(buffer.end(), point.begin(), point.end());
                            if (buffer.size() >= 4096 * 2 * n) flush();
                        }
                        std::size_t j = 0;
                        while (j < m && ++uidx[j] == ugrid[j].size()) uidx[j++] = 0;
                        if (j == m) break;
                    }
                }
                std::size_t j = 1;
                while (j < m && ++ridx[j] == rgrid[j].size()) ridx[j++] = 0;
                if (j >= m) break;
            }
        }
        flush();
    };
    return s;
}

}  // namespace symprod
