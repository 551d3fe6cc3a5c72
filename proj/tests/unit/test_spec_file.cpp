#include "symprod/spec_file.hpp"

#include <doctest.h>

#include <sstream>

using namespace symprod;

namespace {

DomainSpec parse(const std::string& text)
{
    std::istringstream in(text);
    return parse_spec(in, "t.spec");
}

int error_line(const std::string& text)
{
    try {
        parse(text);
    } catch (const SpecError& e) {
        return e.line;
    }
    return 0;
}

}  // namespace

TEST_CASE("spec files parse")
{
    const auto s = parse("# two factors\np = 3\n\n[factor]\ntype = disk\narea = pi\n\n[factor]\n"
                         "type = polygon\nvertices = 1, -1; 1, 1; -1, 1; -1, -1\nnormalize_area = 2\n");
    CHECK(s.p == 3.0);
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0].type == "disk");
    const auto profiles = build_profiles(s);
    CHECK(profiles[0].area() == doctest::Approx(kPi).epsilon(1e-9));
    CHECK(profiles[1].area() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(build_domain(s).p() == 3.0);
}

TEST_CASE("ellipsoid factors")
{
    const auto s = parse("[factor]\ntype = ellipsoid\nareas = 1, 2\n[factor]\ntype = cosine\n");
    const auto d = build_domain(s);
    CHECK(d.dimension() == 6);
    CHECK(d.plane_areas().size() == 3);
    CHECK(build_profiles(s).size() == 3);
}

TEST_CASE("errors carry line numbers")
{
    CHECK(error_line("[factor]\ntype = disk\n\narea = 1\nradius = 2\n") == 5);
    CHECK(error_line("[factor]\ntype = disk\narea = 1\narea = 2\n") == 4);
    CHECK(error_line("q = 1\n") == 1);
    CHECK(error_line("[factor]\ntype = blob\n") == 2);
    CHECK(error_line("[factor]\ntype = disk\narea = x\n") == 3);
    CHECK(error_line("[factor]\narea = 1\n") == 1);
    CHECK_THROWS_AS(load_spec("/nonexistent.spec"), InvalidArgument);
}
