#include "symprod/selftest.hpp"

#include "symprod/box_count.hpp"
#include "symprod/capacities.hpp"
#include "symprod/disk_map.hpp"
#include "symprod/dynamics.hpp"
#include "symprod/presets.hpp"
#include "symprod/random.hpp"
#include "symprod/sandwich.hpp"

#include <chrono>
#include <cstdio>

namespace symprod {

namespace {

std::string kv(const char* key, double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%.6g", key, value);
    return buf;
}

std::string join(std::initializer_list<std::string> parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ';';
        out += p;
    }
    return out;
}

CheckResult result(const char* id, const char* name, bool passed, std::string detail)
{
    return {id, name, passed, std::move(detail)};
}

struct NamedPreset {
    const char* name;
    ProfileSource source;
};

std::vector<NamedPreset> presets()
{
    return {{"disk", DiskSource{}},
            {"cosine", CosineSource{}},
            {"square", square()},
            {"weierstrass", WeierstrassSource{}},
            {"hunt", HuntSource{}},
            {"xiao_zhou", XiaoZhouSource{}}};
}

RadialProfile weierstrass_disk() { return make_profile(WeierstrassSource{}); }

std::vector<RadialProfile> weierstrass_square()
{
    const RadialProfile w = weierstrass_disk();
    return {w, make_profile(square())};
}

std::vector<RadialProfile> weierstrass_square_equal()
{
    const RadialProfile w = weierstrass_disk();
    return {w, make_profile(square()).with_area(w.area())};
}

CheckResult check_symplectic(std::uint64_t seed, int)
{
    const double a = kPi;
    const RadialProfile w = make_profile(CosineSource{a, 0.5});
    RandomStream rng(seed, 0x101);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double rho = rng.uniform(0.1, 2.0) * std::sqrt(a / kPi);
        const Point2 z = rho * unit_direction(rng.uniform(0.0, kTwoPi));
        const auto j = numerical_jacobian([&](const Point2& x) { return disk_to_domain(w, x); }, z);
        worst = std::max(worst, std::abs(j.determinant() - 1.0));
    }
    return result("1", "disk map jacobian determinant", worst <= 1e-6,
                  join({kv("points", 1000), kv("max_det_error", worst)}));
}

CheckResult check_boundary_mapping(std::uint64_t seed, int)
{
    double worst = 0.0;
    std::uint64_t stream = 0x200;
    for (const auto& p : presets()) {
        const RadialProfile w = make_profile(p.source);
        const double a = w.area();
        RandomStream rng(seed, stream++);
        for (int i = 0; i < 10000; ++i) {
            const Point2 z = rng.uniform(0.0, 2.0) * std::sqrt(a / kPi) * unit_direction(rng.uniform(0.0, kTwoPi));
            const double g = w.gauge(disk_to_domain(w, z));
            worst = std::max(worst, std::abs(g * g - kPi * z.squaredNorm() / a));
        }
    }
    return result("2", "exact boundary mapping", worst <= 1e-10,
                  join({kv("presets", static_cast<double>(presets().size())), kv("points_each", 10000),
                        kv("max_level_error", worst)}));
}

CheckResult check_sandwich(std::uint64_t seed, int threads)
{
    const auto factors = weierstrass_square_equal();
    SandwichConfig config;
    config.epsilon = 0.05;
    const SandwichReport r = sandwich_check(factors, config, 100000, seed, threads);
    return result("3", "epsilon sandwich", r.passed(),
                  join({kv("epsilon", r.epsilon), kv("delta_1", r.deltas[0]), kv("delta_2", r.deltas[1]),
                        kv("samples", static_cast<double>(r.samples)),
                        kv("upper_violations", static_cast<double>(r.upper_violations)),
                        kv("lower_violations", static_cast<double>(r.lower_violations)),
                        kv("worst_upper", r.worst_upper), kv("worst_lower", r.worst_lower)}));
}

CheckResult check_volume(std::uint64_t seed, int threads)
{
    const RadialProfile w = weierstrass_disk().with_area(1.0);
    const RadialProfile s = make_profile(square()).with_area(1.0);
    const ProductDomain domain({w, s});
    const VolumeEstimate v = mc_volume(domain, 1000000, seed, threads);
    const double z = std::abs(v.estimate - 0.5) / v.standard_error;
    return result("4", "product volume", z <= 3.0,
                  join({kv("estimate", v.estimate), kv("exact", 0.5), kv("standard_error", v.standard_error),
                        kv("z", z), kv("samples", static_cast<double>(v.samples))}));
}

CheckResult check_period(std::uint64_t seed, int)
{
    double worst = 0.0;
    std::uint64_t stream = 0x500;
    for (const auto& p : presets()) {
        const RadialProfile w = make_profile(p.source);
        RandomStream rng(seed, stream++);
        for (int i = 0; i < 20; ++i) {
            const Point2 z = w.boundary_point(rng.uniform(0.0, kTwoPi));
            worst = std::max(worst, (char_flow_2d(w, z, w.area()) - z).norm());
        }
    }
    return result("5", "period equals area", worst <= 1e-8,
                  join({kv("presets", static_cast<double>(presets().size())), kv("points_each", 20),
                        kv("max_return_error", worst)}));
}

CheckResult check_conjugacy(std::uint64_t seed, int)
{
    const auto factors = weierstrass_square();
    const double a1 = factors[0].area(), a2 = factors[1].area();
    RandomStream rng(seed, 0x600);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform();
        PointN z(4);
        z.segment<2>(0) = std::sqrt(a1 / kPi * u) * unit_direction(rng.uniform(0.0, kTwoPi));
        z.segment<2>(2) = std::sqrt(a2 / kPi * (1.0 - u)) * unit_direction(rng.uniform(0.0, kTwoPi));
        const double t = rng.uniform(0.0, 2.0 * std::max(a1, a2));
        worst = std::max(worst, conjugacy_residual(factors, z, t));
    }
    return result("6", "conjugacy to the ellipsoid flow", worst <= 1e-6,
                  join({kv("pairs", 1000), kv("max_residual", worst)}));
}

CheckResult check_systoles(std::uint64_t seed, int)
{
    const auto factors = weierstrass_square_equal();
    const SystoleReport r = is_foliated_by_systoles(factors, 1000, seed);

    const std::vector<double> areas{1.0, std::sqrt(2.0)};
    RandomStream rng(seed, 0x700);
    std::size_t closed = 0;
    for (int i = 0; i < 100; ++i) {
        const double u = rng.uniform(0.05, 0.95);
        FlowPoint p{{rng.uniform(0.0, kTwoPi), rng.uniform(0.0, kTwoPi)}, {std::sqrt(u), std::sqrt(1.0 - u)}};
        if (orbit_period(areas, p, 1e-8, 1000)) ++closed;
    }
    return result("7", "foliation by systoles", r.passed && closed == 0,
                  join({kv("equal_points", static_cast<double>(r.points)),
                        kv("equal_failures", static_cast<double>(r.failures)),
                        kv("worst_deviation", r.worst_deviation), kv("unequal_points", 100),
                        kv("unequal_closed", static_cast<double>(closed))}));
}

CheckResult check_capacities(std::uint64_t, int)
{
    const auto table = gh_capacities(EllipsoidSpec({1.0, 2.0}), 4);
    const bool table_ok = table.values == std::vector<double>{1.0, 2.0, 2.0, 3.0};
    const bool ball_ok = gh_capacities(EllipsoidSpec({kPi, kPi}), 1).values[0] == kPi;
    const auto factors = weierstrass_square_equal();
    const ZollResult equal = zoll_check(ProductDomain({factors[0], factors[1]}));
    const ZollResult unequal = zoll_check(EllipsoidSpec({1.0, 1.0, 2.0}));
    std::string values;
    for (double v : table.values) values += (values.empty() ? "" : " ") + kv("c", v).substr(2);
    return result("8", "capacity table", table_ok && ball_ok && equal.zoll && !unequal.zoll,
                  join({"E(1,2)=" + values, kv("equal_c1", equal.c1), kv("equal_cn", equal.cn),
                        kv("equal_zoll", equal.zoll), kv("E(1,1,2)_zoll", unequal.zoll)}));
}

CheckResult check_boundary_minimal(std::uint64_t seed, int threads)
{
    const auto factors = boundary_minimal_factors();
    const auto r = boundary_minimal_experiment(factors, boundary_minimal_config(factors, seed, threads));
    const bool area_ok = std::abs(r.shrunk_area - 0.9 * r.area) <= 1e-9 * r.area;
    const bool gap_ok = std::abs(r.gap - 0.1 * r.area) <= 1e-9 * r.area;
    return result("9", "boundary minimality", r.passed() && area_ok && gap_ok,
                  join({kv("area", r.area), kv("shrunk_area", r.shrunk_area), kv("eta", r.eta),
                        kv("samples", static_cast<double>(r.samples)),
                        kv("outside_u", static_cast<double>(r.outside_u)),
                        kv("violations", static_cast<double>(r.violations)), kv("c1", r.c1_original),
                        kv("c1_shrunk", r.c1_shrunk), kv("gap", r.gap)}));
}

FractalFunction graph_function() { return FractalFunction::weierstrass(0.5, 3.0, 30); }

const double kGraphDimension = 2.0 - std::log(2.0) / std::log(3.0);

std::string estimate_detail(const DimensionEstimate& e, double target)
{
    return join({kv("estimate", e.slope), kv("target", target), kv("r2", e.r2), kv("ci95", e.ci_half_width),
                 kv("eps_max", e.scales.front()), kv("eps_min", e.scales.back()),
                 kv("n_min", e.counts.front()), kv("n_max", e.counts.back())});
}

CheckResult check_graph_dimension(std::uint64_t seed, int threads)
{
    const auto f = graph_function();
    BoxCountOptions options;
    options.seed = seed;
    options.threads = threads;
    const auto scales = dyadic_scales(4, 14);
    const auto counts = box_counts(function_graph_sampler([f](double x) { return f(x); }, 0.0, 1.0), scales, options);
    const auto e = estimate_dimension(scales, counts, seed);
    return result("10a", "graph dimension", !e.degenerate && std::abs(e.slope - kGraphDimension) <= 0.08,
                  estimate_detail(e, kGraphDimension));
}

CheckResult check_product_rule(std::uint64_t seed, int threads)
{
    const auto f = graph_function();
    BoxCountOptions options;
    options.seed = seed;
    options.threads = threads;
    const auto scales = dyadic_scales(4, 8);
    auto fn = [f](double x) { return f(x); };
    const auto prism = estimate_dimension(scales, box_counts(graph_interval_sampler(fn, 0.0, 1.0, 0.0, 1.0), scales, options), seed);
    const auto graph = estimate_dimension(scales, box_counts(function_graph_sampler(fn, 0.0, 1.0), scales, options), seed);
    const double target = kGraphDimension + 1.0;
    const double diff = prism.slope - graph.slope;
    const bool ok = std::abs(prism.slope - target) <= 0.15 && std::abs(diff - 1.0) <= 0.1;
    return result("10b", "graph x interval dimension", ok,
                  join({estimate_detail(prism, target), kv("graph_estimate", graph.slope), kv("difference", diff)}));
}

CheckResult check_boundary_dimension(std::uint64_t seed, int threads)
{
    BoxCountOptions options;
    options.seed = seed;
    options.threads = threads;
    const auto scales = boundary_patch_scales();
    auto estimate = [&](bool fractal) {
        const BoundaryGraphSampler patch = boundary_patch(fractal);
        options.axes = patch.grid();
        return estimate_dimension(scales, box_counts(patch.sampler(), scales, options), seed);
    };
    const auto rough = estimate(true);
    const auto smooth = estimate(false);
    const double target = 2.0 + kGraphDimension;  // 2n - 1 + alpha with 1 + alpha the graph dimension
    const bool ok = std::abs(rough.slope - target) <= 0.2 && std::abs(smooth.slope - 3.0) <= 0.1;
    return result("10c", "product boundary dimension", ok,
                  join({estimate_detail(rough, target), kv("disk_estimate", smooth.slope), kv("disk_target", 3.0)}));
}

CheckResult check_determinism(std::uint64_t seed, int)
{
    std::size_t mismatches = 0;

    const ProductDomain domain({weierstrass_disk().with_area(1.0), make_profile(square()).with_area(1.0)});
    const auto v1 = mc_volume(domain, 100000, seed, 1), v8 = mc_volume(domain, 100000, seed, 8);
    mismatches += v1.hits != v8.hits || v1.estimate != v8.estimate;

    const auto f = graph_function();
    const auto sampler = function_graph_sampler([f](double x) { return f(x); }, 0.0, 1.0);
    const auto scales = dyadic_scales(4, 10);
    BoxCountOptions options;
    options.seed = seed;
    options.threads = 1;
    const auto c1 = box_counts(sampler, scales, options);
    options.threads = 8;
    mismatches += c1 != box_counts(sampler, scales, options);

    const auto factors = boundary_minimal_factors();
    auto config = boundary_minimal_config(factors, seed, 1);
    config.samples = 20000;
    const auto b1 = boundary_minimal_experiment(factors, config);
    config.threads = 8;
    const auto b8 = boundary_minimal_experiment(factors, config);
    mismatches += b1.outside_u != b8.outside_u || b1.violations != b8.violations;

    const auto sw = weierstrass_square_equal();
    const auto s1 = sandwich_check(sw, {}, 5000, seed, 1), s8 = sandwich_check(sw, {}, 5000, seed, 8);
    mismatches += s1.worst_upper != s8.worst_upper || s1.worst_lower != s8.worst_lower;

    return result("11", "thread-count independence", mismatches == 0,
                  join({kv("comparisons", 4), kv("mismatches", static_cast<double>(mismatches))}));
}

constexpr SelftestCheck kChecks[] = {
    {"1", "disk map jacobian determinant", check_symplectic},
    {"2", "exact boundary mapping", check_boundary_mapping},
    {"3", "epsilon sandwich", check_sandwich},
    {"4", "product volume", check_volume},
    {"5", "period equals area", check_period},
    {"6", "conjugacy to the ellipsoid flow", check_conjugacy},
    {"7", "foliation by systoles", check_systoles},
    {"8", "capacity table", check_capacities},
    {"9", "boundary minimality", check_boundary_minimal},
    {"10a", "graph dimension", check_graph_dimension},
    {"10b", "graph x interval dimension", check_product_rule},
    {"10c", "product boundary dimension", check_boundary_dimension},
    {"11", "thread-count independence", check_determinism},
};

}  // namespace

std::span<const SelftestCheck> selftest_checks() { return kChecks; }

std::vector<CheckResult> run_selftest(std::uint64_t seed, int threads, const SelftestProgress& progress)
{
    std::vector<CheckResult> out;
    for (const auto& check : kChecks) {
        const auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = check.run(seed, threads);
        } catch (const std::exception& e) {
            r = {check.id, check.name, false, std::string("error=") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (progress) progress(r, seconds);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<RadialProfile> boundary_minimal_factors()
{
    ProfileOptions options;
    options.normalize_area = kPi;
    return {make_profile(WeierstrassSource{}, options), make_profile(square(), options)};
}

BoundaryMinimalConfig boundary_minimal_config(std::span<const RadialProfile> factors, std::uint64_t seed,
                                              int threads)
{
    const double angles[] = {kPi / 3.0, 5.0 * kPi / 4.0};
    BoundaryMinimalConfig config;
    config.center = PointN(2 * factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        config.center.segment<2>(2 * i) = std::sqrt(1.0 / static_cast<double>(factors.size())) *
                                          factors[i].boundary_point(angles[i % 2]);
    config.width = kPi / 4.0;
    config.target_area = 0.9 * factors[0].area();
    config.samples = 100000;
    config.seed = seed;
    config.threads = threads;
    return config;
}

BoundaryGraphSampler boundary_patch(bool fractal)
{
    constexpr double r0 = 4.0;
    WeierstrassSource w;
    w.r0 = r0;
    w.amplitude = 0.2;
    w.terms = 30;
    const RadialProfile first = fractal ? make_profile(w) : make_profile(DiskSource{kPi * r0 * r0});
    return BoundaryGraphSampler(first, {4.0 * kPi * r0 * r0}, {{1.75, 2.0}}, {{0.0, 1.0}, {0.0, 0.25}});
}

std::vector<double> boundary_patch_scales() { return dyadic_scales(2, 6); }

}  // namespace symprod
