#include "commands.hpp"

#include "symprod/boundary_graph.hpp"
#include "symprod/boundary_minimal.hpp"
#include "symprod/box_count.hpp"
#include "symprod/capacities.hpp"
#include "symprod/disk_map.hpp"
#include "symprod/dynamics.hpp"
#include "symprod/presets.hpp"
#include "symprod/random.hpp"
#include "symprod/sandwich.hpp"
#include "symprod/selftest.hpp"
#include "symprod/spec_file.hpp"

#include <cstdio>
#include <map>

namespace symprod::cli {

namespace {

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

void header(std::ostream& out, std::initializer_list<std::string> columns)
{
    out << "# symprod " << kVersion << '\n';
    bool first = true;
    for (const auto& c : columns) {
        out << (first ? "" : ",") << c;
        first = false;
    }
    out << '\n';
}

void row(std::ostream& out, std::initializer_list<std::string> cells)
{
    bool first = true;
    for (const auto& c : cells) {
        out << (first ? "" : ",") << c;
        first = false;
    }
    out << '\n';
}

std::string coords(const PointN& x)
{
    std::string s;
    for (Eigen::Index i = 0; i < x.size(); ++i) s += (i ? "," : "") + num(x(i));
    return s;
}

std::string coord_names(std::size_t n)
{
    std::string s;
    for (std::size_t i = 1; i <= n; ++i)
        s += (i > 1 ? "," : "") + std::string("x") + std::to_string(i) + ",y" + std::to_string(i);
    return s;
}

/// Planar factors of a 2-product spec.
std::vector<RadialProfile> planar_factors(const DomainSpec& spec)
{
    if (spec.p != 2.0) throw InvalidArgument("this command needs a 2-product (p = 2)");
    return build_profiles(spec);
}

double gauge_of(std::span<const RadialProfile> factors, const PointN& x)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const double g = factors[i].gauge(x.segment<2>(2 * i));
        sum += g * g;
    }
    return std::sqrt(sum);
}

double parse_value(const std::string& key, const std::string& text)
{
    if (text == "pi") return kPi;
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidArgument("parameter " + key + ": not a number: " + text);
}

struct Params {
    std::map<std::string, std::string> values;
    std::string target;

    Params(const std::vector<std::string>& items, std::string target_, std::initializer_list<const char*> allowed)
        : target(std::move(target_))
    {
        for (const auto& item : items) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw InvalidArgument("parameter must be key=value: " + item);
            const std::string key = item.substr(0, eq);
            if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) ==
                allowed.end())
                throw InvalidArgument("unknown parameter for target " + target + ": " + key);
            if (!values.emplace(key, item.substr(eq + 1)).second)
                throw InvalidArgument("duplicate parameter: " + key);
        }
    }
    double number(const std::string& key, double fallback) const
    {
        const auto it = values.find(key);
        return it == values.end() ? fallback : parse_value(key, it->second);
    }
    std::string text(const std::string& key, const std::string& fallback) const
    {
        const auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    }
};

FractalFunction fractal_from(const Params& p)
{
    const std::string family = p.text("family", "weierstrass");
    const double a = p.number("a", 0.5);
    const int terms = static_cast<int>(p.number("terms", family == "xz" ? 6 : 30));
    if (family == "weierstrass") return FractalFunction::weierstrass(a, p.number("b", 3.0), terms);
    if (family == "hunt")
        return FractalFunction::weierstrass_phase(a, p.number("b", 3.0), terms,
                                                  static_cast<std::uint64_t>(p.number("phase_seed", 7)));
    if (family == "xz") return FractalFunction::xiao_zhou(a, p.number("alpha", 1.5), p.number("beta", 2.0), terms);
    throw InvalidArgument("unknown function family: " + family);
}

}  // namespace

int run_area(const AreaOptions& o, std::ostream& out)
{
    const DomainSpec spec = load_spec(o.spec);
    header(out, {"factor", "type", "area", "min_radius", "max_radius"});
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        const auto& f = spec.factors[i];
        if (const auto* e = std::get_if<EllipsoidSpec>(&f.source)) {
            for (double a : e->areas) {
                const double r = std::sqrt(a / kPi);
                row(out, {std::to_string(i + 1), f.type, num(a), num(r), num(r)});
            }
            continue;
        }
        const RadialProfile w = build_profile(f);
        row(out, {std::to_string(i + 1), f.type, num(w.area()), num(w.min_radius()), num(w.max_radius())});
    }
    return kOk;
}

int run_map(const MapOptions& o, std::ostream& out)
{
    const auto factors = build_profiles(load_spec(o.spec));
    if (o.factor >= factors.size()) throw InvalidArgument("factor index out of range");
    if (o.grid < 1) throw InvalidArgument("grid must be positive");
    const RadialProfile& w = factors[o.factor];
    const double half = o.extent * std::sqrt(w.area() / kPi);
    header(out, {"x", "y", "u", "v", "jacobian_det"});
    for (int i = 0; i < o.grid; ++i) {
        for (int j = 0; j < o.grid; ++j) {
            // Cell centres, so the origin (where the map is only continuous) is never sampled.
            const Point2 z(-half + (j + 0.5) * 2.0 * half / o.grid, -half + (i + 0.5) * 2.0 * half / o.grid);
            const Point2 image = disk_to_domain(w, z);
            const double det =
                numerical_jacobian([&](const Point2& x) { return disk_to_domain(w, x); }, z).determinant();
            row(out, {num(z(0)), num(z(1)), num(image(0)), num(image(1)), num(det)});
        }
    }
    return kOk;
}

int run_volume(const VolumeOptions& o, std::ostream& out)
{
    const DomainSpec spec = load_spec(o.spec);
    const ProductDomain domain = build_domain(spec);
    const VolumeEstimate v = mc_volume(domain, o.samples, o.seed, o.threads);
    bool planar = domain.p() == 2.0;
    for (std::size_t i = 0; i < domain.factor_count(); ++i)
        planar = planar && !std::holds_alternative<std::shared_ptr<const ProductDomain>>(domain.factor(i));
    header(out, {"estimate", "standard_error", "samples", "hits", "exact", "z"});
    if (planar) {
        const double exact = ellipsoid_volume(EllipsoidSpec(domain.plane_areas()));
        row(out, {num(v.estimate), num(v.standard_error), std::to_string(v.samples), std::to_string(v.hits),
                  num(exact), num((v.estimate - exact) / v.standard_error)});
    } else {
        row(out, {num(v.estimate), num(v.standard_error), std::to_string(v.samples), std::to_string(v.hits), "",
                  ""});
    }
    return kOk;
}

int run_flow(const FlowOptions& o, std::ostream& out)
{
    const auto factors = planar_factors(load_spec(o.spec));
    const std::size_t n = factors.size();
    if (o.point.size() != 2 * n)
        throw InvalidArgument("--point needs " + std::to_string(2 * n) + " coordinates");
    if (o.t_range.size() != 2) throw InvalidArgument("--t-range needs two values");
    if (o.steps < 1) throw InvalidArgument("--steps must be positive");
    const PointN x = Eigen::Map<const PointN>(o.point.data(), static_cast<Eigen::Index>(o.point.size()));
    const FlowPoint start = to_flow_point(factors, x);
    header(out, {"t", coord_names(n), "gauge"});
    for (int k = 0; k <= o.steps; ++k) {
        const double t = o.t_range[0] + (o.t_range[1] - o.t_range[0]) * k / o.steps;
        const PointN y = to_ambient(factors, product_flow(factors, start, t));
        row(out, {num(t), coords(y), num(gauge_of(factors, y))});
    }
    return kOk;
}

int run_conjugacy(const ConjugacyOptions& o, std::ostream& out)
{
    const auto factors = planar_factors(load_spec(o.spec));
    const std::size_t n = factors.size();
    double a_max = 0.0;
    for (const auto& f : factors) a_max = std::max(a_max, f.area());
    const double t_max = o.t_max > 0.0 ? o.t_max : 2.0 * a_max;
    RandomStream rng(o.seed, 0xc0);
    double worst = 0.0, total = 0.0;
    for (std::size_t s = 0; s < o.samples; ++s) {
        // Uniform point of the simplex of squared levels, uniform angles.
        std::vector<double> w(n);
        double sum = 0.0;
        for (double& v : w) sum += v = rng.exponential();
        PointN z(2 * n);
        for (std::size_t i = 0; i < n; ++i)
            z.segment<2>(2 * i) =
                std::sqrt(factors[i].area() / kPi * w[i] / sum) * unit_direction(rng.uniform(0.0, kTwoPi));
        const double r = conjugacy_residual(factors, z, rng.uniform(0.0, t_max));
        worst = std::max(worst, r);
        total += r;
    }
    header(out, {"samples", "t_max", "max_residual", "mean_residual", "tolerance", "passed"});
    const bool ok = worst <= o.tolerance;
    row(out, {std::to_string(o.samples), num(t_max), num(worst), num(o.samples ? total / o.samples : 0.0),
              num(o.tolerance), ok ? "yes" : "no"});
    return ok ? kOk : kCheckFailed;
}

int run_capacities(const CapacitiesOptions& o, std::ostream& out)
{
    if (o.areas.empty() == o.spec.empty()) throw InvalidArgument("give exactly one of --areas and --spec");
    const std::vector<double> areas = o.spec.empty() ? o.areas : build_domain(load_spec(o.spec)).plane_areas();
    const CapacityTable table = gh_capacities(EllipsoidSpec(areas), o.count);
    header(out, {"k", "capacity"});
    for (std::size_t k = 0; k < table.values.size(); ++k) row(out, {std::to_string(k + 1), num(table.values[k])});
    return kOk;
}

int run_boundary_minimal(const BoundaryMinimalOptions& o, std::ostream& out)
{
    const auto factors = planar_factors(load_spec(o.spec));
    const std::size_t n = factors.size();
    std::vector<double> angles = o.center_angles;
    if (angles.empty())
        for (std::size_t i = 0; i < n; ++i) angles.push_back(i % 2 == 0 ? kPi / 3.0 : 5.0 * kPi / 4.0);
    std::vector<double> levels = o.levels;
    if (levels.empty()) levels.assign(n, std::sqrt(1.0 / static_cast<double>(n)));
    if (angles.size() != n || levels.size() != n)
        throw InvalidArgument("--center-angles and --levels need one value per factor");

    BoundaryMinimalConfig config;
    config.center = PointN(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        config.center.segment<2>(2 * i) = levels[i] * factors[i].boundary_point(angles[i]);
    if (o.width > 0.0) config.width = o.width;
    config.target_area = o.target_ratio * factors[0].area();
    config.eta = o.eta;
    config.samples = o.samples;
    config.seed = o.seed;
    config.threads = o.threads;
    const BoundaryMinimalReport r = boundary_minimal_experiment(factors, config);

    out << "# symprod " << kVersion << '\n';
    out << "area: " << num(r.area) << '\n';
    out << "shrunk_area: " << num(r.shrunk_area) << '\n';
    out << "eta: " << num(r.eta) << '\n';
    for (std::size_t i = 0; i < r.directions.size(); ++i)
        out << "factor_" << i + 1 << ": direction=" << num(r.directions[i]) << " amplitude=" << num(r.amplitudes[i])
            << '\n';
    out << "samples: " << r.samples << " uniform + " << r.samples << " shell\n";
    out << "outside_u: " << r.outside_u << '\n';
    out << "violations: " << r.violations << '\n';
    out << "c1_original: " << num(r.c1_original) << '\n';
    out << "c1_shrunk: " << num(r.c1_shrunk) << '\n';
    out << "gap: " << num(r.gap) << '\n';
    out << "passed: " << (r.passed() ? "yes" : "no") << '\n';
    out << "violation," << coord_names(n) << '\n';
    for (std::size_t i = 0; i < r.offending.size(); ++i) out << i + 1 << ',' << coords(r.offending[i]) << '\n';
    return r.passed() ? kOk : kCheckFailed;
}

int run_sandwich(const SandwichOptions& o, std::ostream& out)
{
    const auto factors = planar_factors(load_spec(o.spec));
    SandwichConfig config;
    config.epsilon = o.epsilon;
    config.steps = o.steps;
    config.deltas = o.deltas;
    const SandwichReport r = sandwich_check(factors, config, o.samples, o.seed, o.threads);
    out << "# symprod " << kVersion << '\n';
    out << "epsilon: " << num(r.epsilon) << '\n';
    out << "eps_prime: " << num(r.eps_prime) << '\n';
    for (std::size_t i = 0; i < r.deltas.size(); ++i) out << "delta_" << i + 1 << ": " << num(r.deltas[i]) << '\n';
    out << "samples: " << r.samples << " per direction\n";
    out << "upper_violations: " << r.upper_violations << '\n';
    out << "lower_violations: " << r.lower_violations << '\n';
    out << "worst_upper_gauge: " << num(r.worst_upper) << '\n';
    out << "worst_lower_gauge: " << num(r.worst_lower) << '\n';
    if (r.first_upper_violation) out << "first_upper_violation: " << coords(*r.first_upper_violation) << '\n';
    if (r.first_lower_violation) out << "first_lower_violation: " << coords(*r.first_lower_violation) << '\n';
    out << "passed: " << (r.passed() ? "yes" : "no") << '\n';
    return r.passed() ? kOk : kCheckFailed;
}

int run_boxdim(const BoxdimOptions& o, std::ostream& out)
{
    BoxCountOptions options;
    options.seed = o.seed;
    options.threads = o.threads;
    options.trials = o.trials;
    PointSampler sampler;
    std::pair<int, int> window;
    double target = 0.0;
    if (o.target == "function" || o.target == "interval") {
        const Params p(o.params, o.target, {"family", "a", "b", "terms", "alpha", "beta", "phase_seed", "x0", "x1"});
        const FractalFunction f = fractal_from(p);
        auto fn = [f](double x) { return f(x); };
        const double x0 = p.number("x0", 0.0), x1 = p.number("x1", 1.0);
        if (o.target == "function") {
            sampler = function_graph_sampler(fn, x0, x1);
            window = {4, 14};
            target = f.graph_dimension();
        } else {
            sampler = graph_interval_sampler(fn, x0, x1, 0.0, 1.0);
            window = {4, 9};
            target = f.graph_dimension() + 1.0;
        }
    } else if (o.target == "boundary") {
        const Params p(o.params, o.target,
                       {"profile", "r0", "amplitude", "terms", "a2", "r1_lo", "r1_hi", "turn1_lo", "turn1_hi",
                        "turn2_lo", "turn2_hi"});
        const std::string profile = p.text("profile", "weierstrass");
        const double r0 = p.number("r0", 4.0);
        RadialProfile first = make_profile(DiskSource{kPi * r0 * r0});
        if (profile == "weierstrass") {
            WeierstrassSource w;
            w.r0 = r0;
            w.amplitude = p.number("amplitude", 0.2);
            w.terms = static_cast<int>(p.number("terms", 30));
            first = make_profile(w);
            target = 3.0 + (FractalFunction::weierstrass(w.a, w.b, w.terms).graph_dimension() - 1.0);
        } else if (profile == "disk") {
            target = 3.0;
        } else {
            throw InvalidArgument("unknown boundary profile: " + profile);
        }
        const BoundaryGraphSampler patch(
            first, {p.number("a2", 4.0 * kPi * r0 * r0)},
            {{p.number("r1_lo", 1.75), p.number("r1_hi", 2.0)}},
            {{p.number("turn1_lo", 0.0), p.number("turn1_hi", 1.0)}, {p.number("turn2_lo", 0.0), p.number("turn2_hi", 0.25)}});
        sampler = patch.sampler();
        options.axes = patch.grid();
        window = {2, 6};
    } else {
        throw InvalidArgument("unknown --target: " + o.target + " (function, interval or boundary)");
    }
    if (!o.scales.empty()) {
        if (o.scales.size() != 2 || o.scales[0] > o.scales[1])
            throw InvalidArgument("--scales needs two exponents from,to with from <= to");
        window = {o.scales[0], o.scales[1]};
    }
    const auto scales = dyadic_scales(window.first, window.second);
    const auto counts = box_counts(sampler, scales, options);
    const DimensionEstimate e = estimate_dimension(scales, counts, o.seed);
    header(out, {"eps", "count", "log2_inv_eps", "log2_count"});
    for (std::size_t i = 0; i < scales.size(); ++i)
        row(out, {num(scales[i]), num(counts[i]), num(-std::log2(scales[i])), num(std::log2(counts[i]))});
    out << "# estimate=" << num(e.slope) << ";target=" << num(target) << ";intercept=" << num(e.intercept)
        << ";r2=" << num(e.r2) << ";residual=" << num(e.residual) << ";ci95=" << num(e.ci_half_width)
        << ";window_ok=" << (e.window_ok ? "yes" : "no") << ";degenerate=" << (e.degenerate ? "yes" : "no")
        << '\n';
    return e.degenerate ? kCheckFailed : kOk;
}

int run_selftest(const SelftestOptions& o, std::ostream& out, std::ostream& log)
{
    header(out, {"criterion", "name", "result", "detail"});
    bool ok = true;
    symprod::run_selftest(o.seed, o.threads, [&](const CheckResult& r, double seconds) {
        row(out, {r.id, r.name, r.passed ? "pass" : "FAIL", r.detail});
        out.flush();
        if (o.timings) log << "# " << r.id << " seconds=" << num(seconds) << std::endl;
        ok = ok && r.passed;
    });
    return ok ? kOk : kCheckFailed;
}

}  // namespace symprod::cli
