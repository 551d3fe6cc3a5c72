#include "symprod/product_domain.hpp"

#include "symprod/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace symprod {

namespace {

std::size_t block_dimension(const ProductFactor& f)
{
    if (const auto* e = std::get_if<EllipsoidSpec>(&f)) return 2 * e->size();
    if (const auto* d = std::get_if<std::shared_ptr<const ProductDomain>>(&f)) return (*d)->dimension();
    return 2;
}

bool is_round(const RadialProfile& w)
{
    const auto s = w.samples();
    const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
    return *hi - *lo <= 1e-12 * *hi;
}

double gaussian(RandomStream& rng)
{
    const double u = 1.0 - rng.uniform();
    const double v = rng.uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(kTwoPi * v);
}

std::vector<double> dirichlet(RandomStream& rng, std::size_t n)
{
    std::vector<double> t(n);
    double sum = 0.0;
    for (auto& v : t) sum += (v = rng.exponential());
    for (auto& v : t) v /= sum;
    return t;
}

// Point with block gauge exactly one, written into x at the given offset.
void block_boundary_point(const ProductFactor& f, RandomStream& rng, PointN& x, std::size_t offset)
{
    if (const auto* w = std::get_if<RadialProfile>(&f)) {
        x.segment<2>(offset) = w->boundary_point(kTwoPi * rng.uniform());
    } else if (const auto* e = std::get_if<EllipsoidSpec>(&f)) {
        PointN z(2 * e->size());
        double g = 0.0;
        do {
            for (Eigen::Index k = 0; k < z.size(); ++k) z(k) = gaussian(rng);
            g = ellipsoid_gauge(z, e->areas);
        } while (g == 0.0);
        x.segment(offset, z.size()) = z / g;
    } else {
        const ProductDomain& d = *std::get<std::shared_ptr<const ProductDomain>>(f);
        const auto t = dirichlet(rng, d.factor_count());
        for (std::size_t i = 0; i < d.factor_count(); ++i) {
            const std::size_t at = offset + d.offset(i);
            block_boundary_point(d.factor(i), rng, x, at);
            x.segment(at, d.factor_dimension(i)) *= std::pow(t[i], 1.0 / d.p());
        }
    }
}

}  // namespace

ProductDomain::ProductDomain(std::vector<ProductFactor> factors, double p) : factors_(std::move(factors)), p_(p)
{
    if (factors_.empty()) throw InvalidArgument("product needs at least one factor");
    if (!(p_ >= 1.0) || !std::isfinite(p_)) throw InvalidArgument("exponent p must be a finite number >= 1");
    for (const auto& f : factors_) {
        if (const auto* d = std::get_if<std::shared_ptr<const ProductDomain>>(&f); d && !*d)
            throw InvalidArgument("null nested product");
        offsets_.push_back(dimension_);
        dimension_ += block_dimension(f);
    }
}

std::size_t ProductDomain::factor_dimension(std::size_t i) const { return block_dimension(factors_.at(i)); }

double ProductDomain::factor_gauge(std::size_t i, const PointN& x) const
{
    const ProductFactor& f = factors_[i];
    const std::size_t at = offsets_[i];
    if (const auto* w = std::get_if<RadialProfile>(&f)) return w->gauge(x.segment<2>(at));
    if (const auto* e = std::get_if<EllipsoidSpec>(&f)) return ellipsoid_gauge(x.segment(at, 2 * e->size()), e->areas);
    const ProductDomain& d = *std::get<std::shared_ptr<const ProductDomain>>(f);
    return d.gauge(x.segment(at, d.dimension()));
}

double ProductDomain::gauge(const PointN& x) const
{
    if (static_cast<std::size_t>(x.size()) != dimension_)
        throw InvalidArgument("point of dimension " + std::to_string(x.size()) + " for a product of dimension " +
                              std::to_string(dimension_));
    if (p_ == 2.0) {
        double sum = 0.0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            const double g = factor_gauge(i, x);
            sum += g * g;
        }
        return std::sqrt(sum);
    }
    // Scale by the largest term so large p does not overflow.
    std::vector<double> g(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) g[i] = factor_gauge(i, x);
    const double top = *std::max_element(g.begin(), g.end());
    if (top == 0.0) return 0.0;
    double sum = 0.0;
    for (double v : g) sum += std::pow(v / top, p_);
    return top * std::pow(sum, 1.0 / p_);
}

std::vector<double> ProductDomain::bounding_radii() const
{
    std::vector<double> out;
    for (const auto& f : factors_) {
        if (const auto* w = std::get_if<RadialProfile>(&f)) {
            // Cubic splines may overshoot the refined-grid maximum slightly.
            const double slack = w->interpolation() == Interpolation::linear ? 1.0 : 1.01;
            out.push_back(w->max_radius() * slack);
        } else if (const auto* e = std::get_if<EllipsoidSpec>(&f)) {
            for (double a : e->areas) out.push_back(std::sqrt(a / kPi));
        } else {
            const auto inner = std::get<std::shared_ptr<const ProductDomain>>(f)->bounding_radii();
            out.insert(out.end(), inner.begin(), inner.end());
        }
    }
    return out;
}

std::vector<double> ProductDomain::plane_areas() const
{
    std::vector<double> out;
    for (const auto& f : factors_) {
        if (const auto* w = std::get_if<RadialProfile>(&f)) {
            out.push_back(w->area());
        } else if (const auto* e = std::get_if<EllipsoidSpec>(&f)) {
            out.insert(out.end(), e->areas.begin(), e->areas.end());
        } else {
            const auto inner = std::get<std::shared_ptr<const ProductDomain>>(f)->plane_areas();
            out.insert(out.end(), inner.begin(), inner.end());
        }
    }
    return out;
}

std::vector<const RadialProfile*> ProductDomain::profiles() const
{
    std::vector<const RadialProfile*> out;
    for (const auto& f : factors_) {
        const auto* w = std::get_if<RadialProfile>(&f);
        if (!w) return {};
        out.push_back(w);
    }
    return out;
}

bool ProductDomain::is_ellipsoid() const
{
    if (p_ != 2.0) return false;
    for (const auto& f : factors_) {
        if (const auto* w = std::get_if<RadialProfile>(&f)) {
            if (!is_round(*w)) return false;
        } else if (const auto* d = std::get_if<std::shared_ptr<const ProductDomain>>(&f)) {
            if (!(*d)->is_ellipsoid()) return false;
        }
    }
    return true;
}

double ellipsoid_volume(const EllipsoidSpec& spec)
{
    double v = 1.0;
    for (std::size_t i = 0; i < spec.size(); ++i) v *= spec.areas[i] / static_cast<double>(i + 1);
    return v;
}

std::vector<PointN> boundary_sample(const ProductDomain& domain, std::span<const double> weights,
                                    std::size_t count, std::uint64_t seed)
{
    const std::size_t n = domain.factor_count();
    if (weights.size() != n) throw InvalidArgument("one simplex weight per factor expected");
    double sum = 0.0;
    for (double t : weights) {
        if (!(t >= 0.0)) throw InvalidArgument("simplex weights must be nonnegative");
        sum += t;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw InvalidArgument("simplex weights must sum to 1");

    std::vector<PointN> out;
    out.reserve(count);
    RandomStream rng(seed, 0xb0);
    for (std::size_t k = 0; k < count; ++k) {
        PointN x(domain.dimension());
        for (std::size_t i = 0; i < n; ++i) {
            block_boundary_point(domain.factor(i), rng, x, domain.offset(i));
            x.segment(domain.offset(i), domain.factor_dimension(i)) *= std::pow(weights[i], 1.0 / domain.p());
        }
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<PointN> boundary_sample(const ProductDomain& domain, std::size_t count, std::uint64_t seed)
{
    std::vector<PointN> out;
    out.reserve(count);
    RandomStream rng(seed, 0xb1);
    for (std::size_t k = 0; k < count; ++k) {
        const auto t = dirichlet(rng, domain.factor_count());
        out.push_back(boundary_sample(domain, t, 1, rng.next()).front());
    }
    return out;
}

}  // namespace symprod
