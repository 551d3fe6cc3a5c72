#include "symprod/box_count.hpp"

#include "symprod/parallel.hpp"
#include "symprod/random.hpp"

#include <algorithm>

namespace symprod {

namespace {

constexpr std::size_t kBatch = 4096;

// Buffers points and hands them to the sink in batches.
class Emitter {
public:
    Emitter(const PointSink& sink, std::size_t dimension) : sink_(sink), d_(dimension) { buf_.reserve(kBatch * d_); }
    ~Emitter() { flush(); }

    template <typename... Coords>
    void operator()(Coords... x)
    {
        (buf_.push_back(x), ...);
        if (buf_.size() >= kBatch * d_) flush();
    }
    void push(std::span<const double> p)
    {
        buf_.insert(buf_.end(), p.begin(), p.end());
        if (buf_.size() >= kBatch * d_) flush();
    }
    void flush()
    {
        if (!buf_.empty()) sink_(buf_);
        buf_.clear();
    }

private:
    const PointSink& sink_;
    std::size_t d_;
    std::vector<double> buf_;
};

// Graph chain of f on [x0, x1] with consecutive Euclidean gaps <= pitch, for node indices [j0, j1].
void graph_chain(const std::function<double(double)>& f, double x0, double h, std::size_t j0, std::size_t j1,
                 double pitch, const std::function<void(double, double)>& out)
{
    double px = x0 + h * static_cast<double>(j0);
    double py = f(px);
    out(px, py);
    for (std::size_t j = j0 + 1; j <= j1; ++j) {
        const double x = x0 + h * static_cast<double>(j);
        const double y = f(x);
        const double gap = std::hypot(x - px, y - py);
        const auto sub = static_cast<std::size_t>(std::ceil(gap / pitch));
        for (std::size_t k = 1; k < sub; ++k) {
            const double s = static_cast<double>(k) / static_cast<double>(sub);
            out(px + s * (x - px), py + s * (y - py));
        }
        out(x, y);
        px = x;
        py = y;
    }
}

// Distinct 64-bit keys, kept as a vector that is sorted and deduplicated whenever it has
// doubled since the last compaction. Sequential access beats a hash table here.
class KeySet {
public:
    void insert(std::uint64_t key)
    {
        keys_.push_back(key);
        if (keys_.size() >= limit_) compact();
    }
    void merge(KeySet& other)
    {
        keys_.insert(keys_.end(), other.keys_.begin(), other.keys_.end());
        other.keys_.clear();
        compact();
    }
    std::size_t size()
    {
        compact();
        return keys_.size();
    }

private:
    void compact()
    {
        std::sort(keys_.begin(), keys_.end());
        keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
        limit_ = std::max<std::size_t>(limit_, 2 * keys_.size());
    }

    std::vector<std::uint64_t> keys_;
    std::size_t limit_ = std::size_t{1} << 20;
};

// Maps points to packed cell keys for every trial grid and records them. A small
// direct-mapped filter in front of each set absorbs the many repeats of a chain.
class CellCounter {
public:
    CellCounter(std::size_t d, int trials, double inv, const std::vector<double>& shift,
                const std::vector<long long>& wrap, std::vector<KeySet>& sets)
        : d_(d), trials_(trials), bits_(std::min(63u, 64 / static_cast<unsigned>(d))), inv_(inv), shift_(shift), wrap_(wrap),
          sets_(sets), recent_(static_cast<std::size_t>(trials) * kFilter, ~std::uint64_t{0})
    {
        half_ = 1LL << (bits_ - 1);
        any_wrap_ = std::any_of(wrap.begin(), wrap.end(), [](long long m) { return m > 0; });
    }

    void add(std::span<const double> pts)
    {
        double v[8];
        for (std::size_t i = 0; i + d_ <= pts.size(); i += d_) {
            for (std::size_t k = 0; k < d_; ++k) v[k] = pts[i + k] * inv_;
            for (int t = 0; t < trials_; ++t) {
                const double* sh = &shift_[t * d_];
                std::uint64_t key = 0;
                std::uint64_t overflow = 0;
                for (std::size_t k = 0; k < d_; ++k) {
                    const double x = v[k] - sh[k];
                    long long c = static_cast<long long>(x);
                    c -= x < static_cast<double>(c);
                    if (any_wrap_ && wrap_[k] > 0) c = ((c % wrap_[k]) + wrap_[k]) % wrap_[k];
                    const auto u = static_cast<std::uint64_t>(c + half_);
                    overflow |= (u >> bits_) | ((u + 1) >> bits_);
                    key |= u << (bits_ * k % 64);
                }
                if (overflow) throw InvalidArgument("point outside the addressable counting range");
                std::uint64_t& slot = recent_[t * kFilter + ((key * 0x9e3779b97f4a7c15ULL) >> (64 - kFilterBits))];
                if (slot != key) {
                    slot = key;
                    sets_[t].insert(key);
                }
            }
        }
    }

private:
    static constexpr unsigned kFilterBits = 12;
    static constexpr std::size_t kFilter = std::size_t{1} << kFilterBits;
    std::size_t d_;
    int trials_;
    unsigned bits_;
    long long half_ = 0;
    double inv_;
    const std::vector<double>& shift_;
    const std::vector<long long>& wrap_;
    bool any_wrap_ = false;
    std::vector<KeySet>& sets_;
    std::vector<std::uint64_t> recent_;
};

std::size_t node_count(double length, double step) { return std::max<std::size_t>(1, std::ceil(length / step)); }

}  // namespace

double box_count(const PointSampler& sampler, double eps, double pitch, const BoxCountOptions& options)
{
    const std::size_t d = sampler.dimension;
    if (d == 0 || d > 8) throw InvalidArgument("box counting supports dimensions 1 to 8");
    if (!(eps > 0.0)) throw InvalidArgument("box size must be positive");
    if (!(pitch > 0.0) || pitch > 0.25 * eps * (1.0 + 1e-12))
        throw InvalidArgument("sampling pitch " + std::to_string(pitch) + " too coarse for box size " +
                              std::to_string(eps) + " (need pitch <= eps / 4)");
    if (options.trials < 1) throw InvalidArgument("at least one grid offset is needed");
    std::vector<AxisGrid> axes = options.axes.empty() ? std::vector<AxisGrid>(d) : options.axes;
    if (axes.size() != d) throw InvalidArgument("one grid axis per dimension expected");

    std::vector<long long> wrap(d, 0);
    for (std::size_t k = 0; k < d; ++k) {
        if (axes[k].period <= 0.0) continue;
        const double cells = axes[k].period / eps;
        wrap[k] = std::llround(cells);
        if (wrap[k] < 1 || std::abs(cells - static_cast<double>(wrap[k])) > 1e-9 * cells)
            throw InvalidArgument("axis period must be a whole number of boxes");
    }

    const int trials = options.trials;
    std::vector<std::vector<double>> offsets(trials, std::vector<double>(d, 0.0));
    for (int t = 0; t < trials; ++t) {
        RandomStream rng(options.seed, static_cast<std::uint64_t>(t));
        for (std::size_t k = 0; k < d; ++k) offsets[t][k] = axes[k].dither ? eps * rng.uniform() : 0.0;
    }

    // Offsets in units of eps, trial-major.
    std::vector<double> shift(static_cast<std::size_t>(trials) * d);
    for (int t = 0; t < trials; ++t)
        for (std::size_t k = 0; k < d; ++k) shift[t * d + k] = offsets[t][k] / eps;

    using Shard = std::vector<KeySet>;
    const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(1, sampler.pieces));
    std::vector<Shard> shards(workers, Shard(trials));

    parallel_chunks(workers, static_cast<int>(workers), [&](std::size_t w) {
        CellCounter counter(d, trials, 1.0 / eps, shift, wrap, shards[w]);
        const PointSink sink = [&](std::span<const double> pts) { counter.add(pts); };
        for (std::size_t p = w; p < sampler.pieces; p += workers) sampler.emit(pitch, p, sink);
    });

    double total = 0.0;
    for (int t = 0; t < trials; ++t) {
        auto& merged = shards[0][t];
        for (std::size_t w = 1; w < workers; ++w) merged.merge(shards[w][t]);
        total += static_cast<double>(merged.size());
    }
    return total / trials;
}

std::vector<double> box_counts(const PointSampler& sampler, std::span<const double> scales,
                               const BoxCountOptions& options)
{
    std::vector<double> out;
    for (double eps : scales) out.push_back(box_count(sampler, eps, 0.25 * eps, options));
    return out;
}

std::vector<double> dyadic_scales(int from, int to)
{
    if (to < from) throw InvalidArgument("empty dyadic scale range");
    std::vector<double> out;
    for (int k = from; k <= to; ++k) out.push_back(std::ldexp(1.0, -k));
    return out;
}

DimensionEstimate estimate_dimension(std::span<const double> scales, std::span<const double> counts,
                                     std::uint64_t seed, int bootstrap)
{
    const std::size_t m = scales.size();
    if (m != counts.size()) throw InvalidArgument("one count per scale expected");
    if (m < 2) throw InvalidArgument("at least two scales are needed");
    DimensionEstimate est;
    est.scales.assign(scales.begin(), scales.end());
    est.counts.assign(counts.begin(), counts.end());
    std::vector<double> x(m), y(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!(scales[i] > 0.0) || !(counts[i] > 0.0)) throw InvalidArgument("scales and counts must be positive");
        x[i] = std::log(1.0 / scales[i]);
        y[i] = std::log(counts[i]);
    }
    const auto [smin, smax] = std::minmax_element(scales.begin(), scales.end());
    est.window_ok = m >= 5 && std::log10(*smax / *smin) >= 2.0 - 1e-9;

    auto fit = [](const std::vector<double>& xs, const std::vector<double>& ys, double& slope, double& icept) {
        const double n = static_cast<double>(xs.size());
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= n;
        my /= n;
        double sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxx += (xs[i] - mx) * (xs[i] - mx);
            sxy += (xs[i] - mx) * (ys[i] - my);
        }
        if (sxx == 0.0) return false;
        slope = sxy / sxx;
        icept = my - slope * mx;
        return true;
    };
    if (!fit(x, y, est.slope, est.intercept)) throw InvalidArgument("scales must not all coincide");

    double my = 0.0;
    for (double v : y) my += v;
    my /= static_cast<double>(m);
    double ss_tot = 0.0, ss_res = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = y[i] - (est.intercept + est.slope * x[i]);
        ss_res += r * r;
        ss_tot += (y[i] - my) * (y[i] - my);
    }
    est.residual = std::sqrt(ss_res / static_cast<double>(m));
    if (ss_tot == 0.0) {
        est.degenerate = true;
        est.slope = 0.0;
        est.r2 = 0.0;
        return est;
    }
    est.r2 = 1.0 - ss_res / ss_tot;

    if (bootstrap > 0) {
        RandomStream rng(seed, 0xb007);
        std::vector<double> slopes, bx(m), by(m);
        for (int b = 0; b < bootstrap; ++b) {
            for (std::size_t i = 0; i < m; ++i) {
                const auto j = static_cast<std::size_t>(rng.uniform() * static_cast<double>(m));
                bx[i] = x[std::min(j, m - 1)];
                by[i] = y[std::min(j, m - 1)];
            }
            double s, c;
            if (fit(bx, by, s, c)) slopes.push_back(s);
        }
        if (!slopes.empty()) {
            std::sort(slopes.begin(), slopes.end());
            auto quantile = [&](double q) {
                const double pos = q * static_cast<double>(slopes.size() - 1);
                const auto lo = static_cast<std::size_t>(pos);
                const std::size_t hi = std::min(lo + 1, slopes.size() - 1);
                return slopes[lo] + (pos - static_cast<double>(lo)) * (slopes[hi] - slopes[lo]);
            };
            est.ci_half_width = 0.5 * (quantile(0.975) - quantile(0.025));
        }
    }
    return est;
}

PointSampler function_graph_sampler(std::function<double(double)> f, double x0, double x1)
{
    if (!(x1 > x0)) throw InvalidArgument("empty graph domain");
    constexpr std::size_t kPieces = 16;
    PointSampler s;
    s.dimension = 2;
    s.pieces = kPieces;
    s.emit = [f = std::move(f), x0, x1](double pitch, std::size_t piece, const PointSink& sink) {
        const std::size_t nodes = node_count(x1 - x0, 0.5 * pitch);
        const double h = (x1 - x0) / static_cast<double>(nodes);
        const std::size_t j0 = nodes * piece / kPieces, j1 = nodes * (piece + 1) / kPieces;
        Emitter out(sink, 2);
        graph_chain(f, x0, h, j0, j1, pitch, [&](double x, double y) { out(x, y); });
    };
    return s;
}

PointSampler graph_interval_sampler(std::function<double(double)> f, double x0, double x1, double z0, double z1)
{
    if (!(x1 > x0) || !(z1 > z0)) throw InvalidArgument("empty parameter box");
    constexpr std::size_t kPieces = 16;
    PointSampler s;
    s.dimension = 3;
    s.pieces = kPieces;
    s.emit = [f = std::move(f), x0, x1, z0, z1](double pitch, std::size_t piece, const PointSink& sink) {
        const std::size_t layers = node_count(z1 - z0, pitch);
        const std::size_t l0 = (layers + 1) * piece / kPieces, l1 = (layers + 1) * (piece + 1) / kPieces;
        if (l1 <= l0) return;
        const std::size_t nodes = node_count(x1 - x0, 0.5 * pitch);
        const double h = (x1 - x0) / static_cast<double>(nodes);
        std::vector<double> chain;
        graph_chain(f, x0, h, 0, nodes, pitch, [&](double x, double y) {
            chain.push_back(x);
            chain.push_back(y);
        });
        const double hz = (z1 - z0) / static_cast<double>(layers);
        // Short runs of the chain are repeated across all layers so that the
        // same cells come back while they are still in the counter's filter.
        constexpr std::size_t kRun = 128;
        Emitter out(sink, 3);
        for (std::size_t b = 0; b < chain.size(); b += 2 * kRun) {
            const std::size_t e = std::min(chain.size(), b + 2 * kRun);
            for (std::size_t l = l0; l < l1; ++l) {
                const double z = z0 + hz * static_cast<double>(l);
                for (std::size_t i = b; i < e; i += 2) out(chain[i], chain[i + 1], z);
            }
        }
    };
    return s;
}

PointSampler segment_sampler(PointN from, PointN to)
{
    if (from.size() != to.size() || from.size() == 0) throw InvalidArgument("segment endpoints must share a dimension");
    PointSampler s;
    s.dimension = static_cast<std::size_t>(from.size());
    s.emit = [from = std::move(from), to = std::move(to)](double pitch, std::size_t, const PointSink& sink) {
        const std::size_t nodes = node_count((to - from).norm(), pitch);
        Emitter out(sink, static_cast<std::size_t>(from.size()));
        PointN p(from.size());
        for (std::size_t j = 0; j <= nodes; ++j) {
            p = from + (to - from) * (static_cast<double>(j) / static_cast<double>(nodes));
            out.push({p.data(), static_cast<std::size_t>(p.size())});
        }
    };
    return s;
}

PointSampler square_boundary_sampler(double side)
{
    if (!(side > 0.0)) throw InvalidArgument("square side must be positive");
    PointSampler s;
    s.dimension = 2;
    s.pieces = 4;
    s.emit = [side](double pitch, std::size_t piece, const PointSink& sink) {
        const Point2 corners[5] = {{0, 0}, {side, 0}, {side, side}, {0, side}, {0, 0}};
        const Point2 a = corners[piece], b = corners[piece + 1];
        const std::size_t nodes = node_count(side, pitch);
        Emitter out(sink, 2);
        for (std::size_t j = 0; j <= nodes; ++j) {
            const Point2 p = a + (b - a) * (static_cast<double>(j) / static_cast<double>(nodes));
            out(p.x(), p.y());
        }
    };
    return s;
}

PointSampler smooth_surface_sampler(std::function<double(double, double)> f, double lipschitz)
{
    if (!(lipschitz >= 0.0)) throw InvalidArgument("Lipschitz bound must be nonnegative");
    constexpr std::size_t kPieces = 16;
    PointSampler s;
    s.dimension = 3;
    s.pieces = kPieces;
    s.emit = [f = std::move(f), lipschitz](double pitch, std::size_t piece, const PointSink& sink) {
        const std::size_t nodes = node_count(1.0, pitch / std::sqrt(2.0 * (1.0 + lipschitz * lipschitz)));
        const double h = 1.0 / static_cast<double>(nodes);
        const std::size_t i0 = (nodes + 1) * piece / kPieces, i1 = (nodes + 1) * (piece + 1) / kPieces;
        Emitter out(sink, 3);
        for (std::size_t i = i0; i < i1; ++i) {
            const double x = h * static_cast<double>(i);
            for (std::size_t j = 0; j <= nodes; ++j) {
                const double y = h * static_cast<double>(j);
                out(x, y, f(x, y));
            }
        }
    };
    return s;
}

}  // namespace symprod
