#include "symprod/cutoff_map.hpp"
#include "symprod/disk_map.hpp"
#include "symprod/presets.hpp"
#include "symprod/random.hpp"
#include "symprod/sandwich.hpp"

#include <doctest.h>

using namespace symprod;

TEST_CASE("disk map of a disk is the identity")
{
    const RadialProfile d = make_profile(DiskSource{3.0});
    for (const Point2 z : {Point2(0.3, 0.1), Point2(-1.0, 0.5), Point2(0.0, -2.0)})
        CHECK((disk_to_domain(d, z) - z).norm() < 1e-12);
}

TEST_CASE("angle map of the cosine profile")
{
    const RadialProfile w = make_profile(CosineSource{kPi, 0.5});
    const MonotoneCircleMap phi(w);
    CHECK(phi.forward(kPi / 2) == doctest::Approx(1.120612715500023).epsilon(1e-9));
    for (double th : {0.2, 1.9, 4.4}) CHECK(phi.inverse(phi.forward(th)) == doctest::Approx(th).epsilon(1e-12));
}

TEST_CASE("disk map is area preserving and exact on levels")
{
    const RadialProfile w = make_profile(CosineSource{kPi, 0.5});
    RandomStream rng(3, 0);
    for (int i = 0; i < 200; ++i) {
        const Point2 z = rng.uniform(0.1, 2.0) * unit_direction(rng.uniform(0.0, kTwoPi));
        const auto j = numerical_jacobian([&](const Point2& x) { return disk_to_domain(w, x); }, z);
        CHECK(std::abs(j.determinant() - 1.0) < 1e-6);
        const double g = w.gauge(disk_to_domain(w, z));
        CHECK(std::abs(g * g - z.squaredNorm()) < 1e-12);
        CHECK((domain_to_disk(w, disk_to_domain(w, z)) - z).norm() < 1e-12);
    }
    CHECK(disk_to_domain(w, Point2::Zero()).norm() == 0.0);
}

TEST_CASE("product map sends the ellipsoid boundary to the product boundary")
{
    const std::vector<RadialProfile> f{make_profile(WeierstrassSource{}), make_profile(square())};
    PointN z(4);
    const double a1 = f[0].area(), a2 = f[1].area();
    z << std::sqrt(0.3 * a1 / kPi), 0.0, 0.0, -std::sqrt(0.7 * a2 / kPi);
    const PointN w = product_map(f, z);
    const double g1 = f[0].gauge(w.segment<2>(0)), g2 = f[1].gauge(w.segment<2>(2));
    CHECK(g1 * g1 + g2 * g2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((product_map_inverse(f, w) - z).norm() < 1e-12);
}

TEST_CASE("cut-off map: identity inside, closed form outside")
{
    const RadialProfile w = make_profile(CosineSource{kPi, 0.5});
    const CutoffDiskMap m(w, {0.05, 1000, 1e-6, true});
    CHECK(m.kappa() >= 1.0);
    CHECK(m.cutoff(0.05 / (2 * kPi)) == 0.0);
    CHECK(m.cutoff(0.05 / kPi) == 1.0);
    const Point2 inner = std::sqrt(0.4 * m.frozen_area() / kPi) * unit_direction(1.0);
    CHECK((m(inner) - inner).norm() == 0.0);
    double worst = 0.0;
    for (int k = 0; k < 30; ++k) {
        const double rho = std::sqrt(m.exact_area() * (1.0 + 0.02 * k) / kPi);
        const Point2 z = rho * unit_direction(0.3 + 0.2 * k);
        worst = std::max(worst, (m.integrate(z, 1000) - disk_to_domain(w, z)).norm());
    }
    CHECK(worst < 1e-8);
    // The annulus in between round-trips.
    const Point2 mid = std::sqrt(0.5 * (m.frozen_area() + m.exact_area()) / kPi) * unit_direction(2.0);
    CHECK((m.inverse(m(mid)) - mid).norm() < 1e-8);
}

TEST_CASE("cut-off flow is Hamiltonian")
{
    const RadialProfile w = make_profile(CosineSource{kPi, 0.5});
    const CutoffDiskMap m(w, {0.2, 200, 1e-6, false});
    const Point2 z = 0.22 * unit_direction(0.8);
    const double h = 1e-6;
    const Point2 grad((m.hamiltonian(0.4, z + Point2(h, 0)) - m.hamiltonian(0.4, z - Point2(h, 0))) / (2 * h),
                      (m.hamiltonian(0.4, z + Point2(0, h)) - m.hamiltonian(0.4, z - Point2(0, h))) / (2 * h));
    CHECK((m.velocity(0.4, z) - rotate_quarter(grad)).norm() < 1e-7);
}

TEST_CASE("sandwich preconditions and a small run")
{
    const std::vector<RadialProfile> f{make_profile(CosineSource{kPi, 0.5}), make_profile(DiskSource{kPi})};
    SandwichConfig bad;
    bad.epsilon = 1.5;
    CHECK_THROWS_AS(sandwich_check(f, bad, 100, 7), PreconditionError);
    SandwichConfig c;
    c.epsilon = 0.1;
    const auto r = sandwich_check(f, c, 2000, 7, 2);
    CHECK(r.passed());
    CHECK(r.deltas.size() == 2);
    CHECK(r.worst_upper <= 1.1);
}
