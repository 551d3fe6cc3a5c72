#pragma once

#include "symprod/presets.hpp"
#include "symprod/product_domain.hpp"

#include <istream>
#include <string>
#include <variant>
#include <vector>

namespace symprod {

/// Malformed domain spec; message carries "name:line:".
struct SpecError : InvalidArgument {
    SpecError(const std::string& where, int line, const std::string& what)
        : InvalidArgument(where + ":" + std::to_string(line) + ": " + what), line(line)
    {
    }
    int line;
};

struct FactorSpec {
    std::string type;
    int line = 0;
    std::variant<ProfileSource, EllipsoidSpec> source;
    ProfileOptions options;
};

struct DomainSpec {
    double p = 2.0;
    std::vector<FactorSpec> factors;
};

/// Grammar: `key = value` lines, `#` comments, a global `p`, and one `[factor]` section per
/// factor whose first key is `type`. See docs/formats.md.
DomainSpec parse_spec(std::istream& in, const std::string& name = "<input>");
DomainSpec load_spec(const std::string& path);

RadialProfile build_profile(const FactorSpec& factor);
ProductDomain build_domain(const DomainSpec& spec);
/// All factors as planar profiles; ellipsoid factors become disks of the same areas.
std::vector<RadialProfile> build_profiles(const DomainSpec& spec);

}  // namespace symprod
