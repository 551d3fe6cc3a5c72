#pragma once

#include "symprod/radial_profile.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace symprod {

class ProductDomain;

/// One block of a product: a planar domain, an ellipsoid, or another product.
using ProductFactor = std::variant<RadialProfile, EllipsoidSpec, std::shared_ptr<const ProductDomain>>;

/// Symplectic p-product  K x_p T = union over t of t^{1/p} K x (1 - t)^{1/p} T,
/// realized through its gauge G = (sum g_i^p)^{1/p}. Coordinates are laid out
/// (x_1, y_1, x_2, y_2, ...) with the blocks in factor order.
class ProductDomain {
public:
    explicit ProductDomain(std::vector<ProductFactor> factors, double p = 2.0);

    std::size_t dimension() const { return dimension_; }
    std::size_t factor_count() const { return factors_.size(); }
    double p() const { return p_; }
    const ProductFactor& factor(std::size_t i) const { return factors_.at(i); }
    std::size_t offset(std::size_t i) const { return offsets_.at(i); }
    std::size_t factor_dimension(std::size_t i) const;

    /// Gauge of block i evaluated on its coordinates inside the full vector x.
    double factor_gauge(std::size_t i, const PointN& x) const;
    double gauge(const PointN& x) const;
    bool contains(const PointN& x) const { return gauge(x) <= 1.0; }

    /// Half-widths of a box containing the domain, one per complex coordinate.
    std::vector<double> bounding_radii() const;

    /// Areas of the planar blocks in coordinate order (ellipsoid blocks contribute
    /// their axes). This is the ellipsoid model of a 2-product.
    std::vector<double> plane_areas() const;
    /// Planar profiles in coordinate order, or nothing if some block is not a planar profile
    /// at the top level.
    std::vector<const RadialProfile*> profiles() const;
    /// True when every block is (recursively) a 2-product of disks and ellipsoids.
    bool is_ellipsoid() const;

private:
    std::vector<ProductFactor> factors_;
    std::vector<std::size_t> offsets_;
    double p_;
    std::size_t dimension_ = 0;
};

inline double product_gauge(const ProductDomain& domain, const PointN& x) { return domain.gauge(x); }
inline bool contains(const ProductDomain& domain, const PointN& x) { return domain.contains(x); }

/// a_1 ... a_n / n!
double ellipsoid_volume(const EllipsoidSpec& spec);

/// Points x = (t_1^{1/p} w_1, ..., t_n^{1/p} w_n) with w_i on the boundary of block i,
/// boundary directions drawn from the seeded stream.
std::vector<PointN> boundary_sample(const ProductDomain& domain, std::span<const double> weights,
                                    std::size_t count, std::uint64_t seed);
/// Same with weights drawn Dirichlet-uniform on the simplex, independently per point.
std::vector<PointN> boundary_sample(const ProductDomain& domain, std::size_t count, std::uint64_t seed);

struct VolumeEstimate {
    double estimate = 0.0;
    double standard_error = 0.0;
    std::size_t samples = 0;
    std::size_t hits = 0;
    double box_volume = 0.0;
};

/// Rejection sampling in the bounding box; chunked streams make the result
/// independent of the thread count.
VolumeEstimate mc_volume(const ProductDomain& domain, std::size_t samples, std::uint64_t seed, int threads = 1);

}  // namespace symprod
