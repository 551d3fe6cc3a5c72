#include "symprod/spec_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace symprod {

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

struct Entry {
    std::string value;
    int line;
};

struct Section {
    int line = 0;
    std::map<std::string, Entry> keys;
};

class Reader {
public:
    Reader(const std::string& name, const Section& section) : name_(name), section_(section) {}

    bool has(const std::string& key) const { return section_.keys.count(key) > 0; }

    double number(const std::string& key, double fallback) const
    {
        if (!has(key)) return fallback;
        return parse_number(section_.keys.at(key));
    }
    int integer(const std::string& key, int fallback) const
    {
        const double v = number(key, fallback);
        if (v != std::floor(v) || std::abs(v) > 1e9) fail(key, "expected an integer");
        return static_cast<int>(v);
    }
    std::vector<double> list(const std::string& key) const
    {
        if (!has(key)) throw SpecError(name_, section_.line, "missing key '" + key + "'");
        const Entry& e = section_.keys.at(key);
        std::vector<double> out;
        std::stringstream ss(e.value);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(parse_number({trim(item), e.line}));
        if (out.empty()) fail(key, "empty list");
        return out;
    }
    std::string text(const std::string& key) const { return has(key) ? section_.keys.at(key).value : ""; }

    [[noreturn]] void fail(const std::string& key, const std::string& what) const
    {
        const int line = has(key) ? section_.keys.at(key).line : section_.line;
        throw SpecError(name_, line, key + ": " + what);
    }

private:
    double parse_number(const Entry& e) const
    {
        double v = 0.0;
        const char* first = e.value.data();
        const char* last = first + e.value.size();
        if (e.value == "pi") return kPi;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || !std::isfinite(v))
            throw SpecError(name_, e.line, "not a number: '" + e.value + "'");
        return v;
    }

    const std::string& name_;
    const Section& section_;
};

const std::map<std::string, std::set<std::string>>& allowed_keys()
{
    static const std::map<std::string, std::set<std::string>> keys = {
        {"disk", {"area"}},
        {"cosine", {"area", "modulation"}},
        {"polygon", {"vertices"}},
        {"weierstrass", {"r0", "amplitude", "a", "b", "terms"}},
        {"hunt", {"r0", "amplitude", "a", "b", "terms", "phases", "phase_seed"}},
        {"xz", {"r0", "amplitude", "a", "alpha", "beta", "terms"}},
        {"samples", {"radii"}},
        {"ellipsoid", {"areas"}},
    };
    return keys;
}

FactorSpec make_factor(const std::string& name, const Section& section)
{
    Reader r(name, section);
    if (!r.has("type")) throw SpecError(name, section.line, "factor without 'type'");
    FactorSpec f;
    f.type = r.text("type");
    f.line = section.line;
    const auto& table = allowed_keys();
    const auto it = table.find(f.type);
    if (it == table.end()) r.fail("type", "unknown factor type '" + f.type + "'");

    const bool planar = f.type != "ellipsoid";
    for (const auto& [key, entry] : section.keys) {
        if (key == "type") continue;
        const bool common = planar && (key == "grid" || key == "interpolation" || key == "normalize_area");
        if (!common && !it->second.count(key))
            throw SpecError(name, entry.line, "unknown key '" + key + "' for factor type '" + f.type + "'");
    }

    if (planar) {
        f.options.grid = r.integer("grid", 4096);
        if (r.has("interpolation")) {
            const std::string v = r.text("interpolation");
            if (v == "linear") f.options.interpolation = Interpolation::linear;
            else if (v == "cubic") f.options.interpolation = Interpolation::cubic_periodic;
            else r.fail("interpolation", "expected 'linear' or 'cubic'");
        }
        if (r.has("normalize_area")) f.options.normalize_area = r.number("normalize_area", 0.0);
    }

    auto weierstrass = [&] {
        WeierstrassSource w;
        w.r0 = r.number("r0", w.r0);
        w.amplitude = r.number("amplitude", w.amplitude);
        w.a = r.number("a", w.a);
        w.b = r.number("b", w.b);
        w.terms = r.integer("terms", w.terms);
        return w;
    };

    if (f.type == "disk") {
        f.source = ProfileSource{DiskSource{r.number("area", kPi)}};
    } else if (f.type == "cosine") {
        f.source = ProfileSource{CosineSource{r.number("area", kPi), r.number("modulation", 0.5)}};
    } else if (f.type == "polygon") {
        if (!r.has("vertices")) r.fail("vertices", "missing");
        PolygonSource poly;
        std::stringstream ss(r.text("vertices"));
        std::string item;
        while (std::getline(ss, item, ';')) {
            std::stringstream ps(item);
            std::string xs, ys;
            if (!std::getline(ps, xs, ',') || !std::getline(ps, ys))
                r.fail("vertices", "expected 'x, y; x, y; ...'");
            Section tmp;
            tmp.line = section.line;
            tmp.keys["x"] = {trim(xs), section.keys.at("vertices").line};
            tmp.keys["y"] = {trim(ys), section.keys.at("vertices").line};
            Reader pr(name, tmp);
            poly.vertices.emplace_back(pr.number("x", 0.0), pr.number("y", 0.0));
        }
        f.source = ProfileSource{poly};
    } else if (f.type == "weierstrass") {
        f.source = ProfileSource{weierstrass()};
    } else if (f.type == "hunt") {
        HuntSource h;
        h.base = weierstrass();
        if (r.has("phases")) h.phases = r.list("phases");
        h.phase_seed = static_cast<std::uint64_t>(r.integer("phase_seed", 7));
        f.source = ProfileSource{h};
    } else if (f.type == "xz") {
        XiaoZhouSource x;
        x.r0 = r.number("r0", x.r0);
        x.amplitude = r.number("amplitude", x.amplitude);
        x.a = r.number("a", x.a);
        x.alpha = r.number("alpha", x.alpha);
        x.beta = r.number("beta", x.beta);
        x.terms = r.integer("terms", x.terms);
        f.source = ProfileSource{x};
    } else if (f.type == "samples") {
        f.source = ProfileSource{SampleSource{r.list("radii")}};
    } else {
        try {
            f.source = EllipsoidSpec(r.list("areas"));
        } catch (const SpecError&) {
            throw;
        } catch (const InvalidArgument& e) {
            r.fail("areas", e.what());
        }
    }
    return f;
}

}  // namespace

DomainSpec parse_spec(std::istream& in, const std::string& name)
{
    DomainSpec spec;
    Section global;
    std::vector<Section> sections;
    Section* current = &global;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string text = trim(std::string_view(raw).substr(0, hash));
        if (text.empty()) continue;
        if (text.front() == '[') {
            if (text != "[factor]") throw SpecError(name, line, "unknown section '" + text + "'");
            sections.push_back({line, {}});
            current = &sections.back();
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw SpecError(name, line, "expected 'key = value'");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty() || value.empty()) throw SpecError(name, line, "expected 'key = value'");
        if (!std::all_of(key.begin(), key.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
            throw SpecError(name, line, "bad key '" + key + "'");
        if (current->keys.count(key)) throw SpecError(name, line, "duplicate key '" + key + "'");
        current->keys[key] = {value, line};
    }

    for (const auto& [key, entry] : global.keys)
        if (key != "p") throw SpecError(name, entry.line, "unknown key '" + key + "' outside a [factor] section");
    Reader g(name, global);
    spec.p = g.number("p", 2.0);
    if (!(spec.p >= 1.0)) g.fail("p", "exponent must be >= 1");
    if (sections.empty()) throw SpecError(name, line, "no [factor] sections");
    for (const auto& s : sections) spec.factors.push_back(make_factor(name, s));
    return spec;
}

DomainSpec load_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open spec file '" + path + "'");
    return parse_spec(in, path);
}

RadialProfile build_profile(const FactorSpec& factor)
{
    if (const auto* src = std::get_if<ProfileSource>(&factor.source)) {
        try {
            return make_profile(*src, factor.options);
        } catch (const InvalidArgument& e) {
            throw InvalidArgument("factor at line " + std::to_string(factor.line) + ": " + e.what());
        }
    }
    const auto& e = std::get<EllipsoidSpec>(factor.source);
    if (e.size() != 1) throw InvalidArgument("factor at line " + std::to_string(factor.line) +
                                             ": a multi-axis ellipsoid is not a planar profile");
    return make_profile(DiskSource{e.areas[0]}, factor.options);
}

ProductDomain build_domain(const DomainSpec& spec)
{
    std::vector<ProductFactor> factors;
    for (const auto& f : spec.factors) {
        if (const auto* e = std::get_if<EllipsoidSpec>(&f.source)) factors.emplace_back(*e);
        else factors.emplace_back(build_profile(f));
    }
    return ProductDomain(std::move(factors), spec.p);
}

std::vector<RadialProfile> build_profiles(const DomainSpec& spec)
{
    std::vector<RadialProfile> out;
    for (const auto& f : spec.factors) {
        if (const auto* e = std::get_if<EllipsoidSpec>(&f.source)) {
            for (double a : e->areas) out.push_back(make_profile(DiskSource{a}, f.options));
        } else {
            out.push_back(build_profile(f));
        }
    }
    return out;
}

}  // namespace symprod
