#include "commands.hpp"

#include "symprod/parallel.hpp"
#include "symprod/spec_file.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

using namespace symprod;
using namespace symprod::cli;

int main(int argc, char** argv)
{
    CLI::App app{"symprod: star-shaped domains, their symplectic 2-products, and fractal boundaries"};
    app.set_version_flag("--version", std::string("symprod ") + kVersion);
    app.require_subcommand(1);

    std::string output;
    int threads = default_threads();
    app.add_option("-o,--output", output, "Write results to this file instead of stdout");
    app.add_option("--threads", threads, "Worker threads (default: SYMPROD_THREADS or hardware)")
        ->check(CLI::PositiveNumber);

    std::function<int(std::ostream&)> command;

    AreaOptions area;
    auto* c_area = app.add_subcommand("area", "Factor areas and radius bounds of a domain spec");
    c_area->add_option("--spec", area.spec, "Domain spec file")->required();
    c_area->callback([&] { command = [&](std::ostream& out) { return run_area(area, out); }; });

    MapOptions map;
    auto* c_map = app.add_subcommand("map", "Disk map of one factor on a grid, with Jacobian determinants");
    c_map->add_option("--spec", map.spec, "Domain spec file")->required();
    c_map->add_option("--factor", map.factor, "Factor index, from 1")->default_val(1)->check(CLI::PositiveNumber);
    c_map->add_option("--grid", map.grid, "Points per side")->default_val(map.grid);
    c_map->add_option("--extent", map.extent, "Grid half-width in units of sqrt(a/pi)")->default_val(map.extent);
    c_map->callback([&] {
        --map.factor;
        command = [&](std::ostream& out) { return run_map(map, out); };
    });

    VolumeOptions volume;
    auto* c_volume = app.add_subcommand("volume", "Monte Carlo volume of a product domain");
    c_volume->add_option("--spec", volume.spec, "Domain spec file")->required();
    c_volume->add_option("--samples", volume.samples, "Sample count")->default_val(volume.samples);
    c_volume->add_option("--seed", volume.seed, "Random seed")->required();
    c_volume->callback([&] {
        volume.threads = threads;
        command = [&](std::ostream& out) { return run_volume(volume, out); };
    });

    FlowOptions flow;
    auto* c_flow = app.add_subcommand("flow", "Characteristic flow trajectory on the boundary of a 2-product");
    c_flow->add_option("--spec", flow.spec, "Domain spec file")->required();
    c_flow->add_option("--point", flow.point, "Start point x1,y1,x2,y2,...")->required()->delimiter(',');
    c_flow->add_option("--t-range", flow.t_range, "Time range t0,t1")->delimiter(',');
    c_flow->add_option("--steps", flow.steps, "Number of time steps")->default_val(flow.steps);
    c_flow->callback([&] { command = [&](std::ostream& out) { return run_flow(flow, out); }; });

    ConjugacyOptions conj;
    auto* c_conj = app.add_subcommand("conjugacy", "Residual of the conjugacy to the ellipsoid Reeb flow");
    c_conj->add_option("--spec", conj.spec, "Domain spec file")->required();
    c_conj->add_option("--samples", conj.samples, "Number of (z, t) pairs")->default_val(conj.samples);
    c_conj->add_option("--seed", conj.seed, "Random seed")->required();
    c_conj->add_option("--t-max", conj.t_max, "Largest flow time (default: twice the largest area)");
    c_conj->add_option("--tolerance", conj.tolerance, "Allowed residual")->default_val(conj.tolerance);
    c_conj->callback([&] { command = [&](std::ostream& out) { return run_conjugacy(conj, out); }; });

    CapacitiesOptions caps;
    auto* c_caps = app.add_subcommand("capacities", "Capacities of an ellipsoid or of a 2-product's model");
    c_caps->add_option("--areas", caps.areas, "Ellipsoid areas a1,a2,...")->delimiter(',');
    c_caps->add_option("--spec", caps.spec, "Domain spec file (uses its plane areas)");
    c_caps->add_option("--count", caps.count, "Number of capacities")->default_val(caps.count);
    c_caps->callback([&] { command = [&](std::ostream& out) { return run_capacities(caps, out); }; });

    BoundaryMinimalOptions bm;
    auto* c_bm = app.add_subcommand("boundary-minimal", "Shrink every factor near a boundary point and check containment");
    c_bm->add_option("--spec", bm.spec, "Domain spec file (equal-area factors)")->required();
    c_bm->add_option("--center-angles", bm.center_angles, "Window centre angle per factor")->delimiter(',');
    c_bm->add_option("--levels", bm.levels, "Level of the centre point per factor")->delimiter(',');
    c_bm->add_option("--width", bm.width, "Angular half-width of the windows (default pi/4)");
    c_bm->add_option("--target-ratio", bm.target_ratio, "a' / a")->default_val(bm.target_ratio);
    c_bm->add_option("--eta", bm.eta, "Thickness of U (default: largest bump amplitude)");
    c_bm->add_option("--samples", bm.samples, "Samples per family")->default_val(bm.samples);
    c_bm->add_option("--seed", bm.seed, "Random seed")->required();
    c_bm->callback([&] {
        bm.threads = threads;
        command = [&](std::ostream& out) { return run_boundary_minimal(bm, out); };
    });

    SandwichOptions sw;
    auto* c_sw = app.add_subcommand("sandwich", "Check (1-eps) W  in  Psi(E)  in  (1+eps) W for the cut-off map");
    c_sw->add_option("--spec", sw.spec, "Domain spec file")->required();
    c_sw->add_option("--epsilon", sw.epsilon, "Sandwich width")->default_val(sw.epsilon);
    c_sw->add_option("--steps", sw.steps, "RK4 steps of the cut-off flow")->default_val(sw.steps);
    c_sw->add_option("--deltas", sw.deltas, "Cut-off radii per factor (default: scanned)")->delimiter(',');
    c_sw->add_option("--samples", sw.samples, "Samples per direction")->default_val(sw.samples);
    c_sw->add_option("--seed", sw.seed, "Random seed")->required();
    c_sw->callback([&] {
        sw.threads = threads;
        command = [&](std::ostream& out) { return run_sandwich(sw, out); };
    });

    BoxdimOptions box;
    auto* c_box = app.add_subcommand("boxdim", "Box-counting dimension of a fractal graph or product boundary");
    c_box->add_option("--target", box.target, "function, interval or boundary")->default_val(box.target);
    c_box->add_option("--params", box.params, "key=value,... parameters of the target")->delimiter(',');
    c_box->add_option("--scales", box.scales, "Dyadic exponents from,to (eps = 2^-k)")->delimiter(',');
    c_box->add_option("--trials", box.trials, "Grid offsets averaged")->default_val(box.trials);
    c_box->add_option("--seed", box.seed, "Random seed")->required();
    c_box->callback([&] {
        box.threads = threads;
        command = [&](std::ostream& out) { return run_boxdim(box, out); };
    });

    SelftestOptions st;
    auto* c_st = app.add_subcommand("selftest", "Run the invariant suite");
    c_st->add_option("--seed", st.seed, "Random seed")->default_val(st.seed);
    c_st->add_flag("--timings", st.timings, "Print per-check seconds to stderr");
    c_st->callback([&] {
        st.threads = threads;
        command = [&](std::ostream& out) { return run_selftest(st, out, std::cerr); };
    });

    // Global options may also follow the subcommand.
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (output.empty()) return command(std::cout);
        std::ofstream file(output);
        if (!file) throw InvalidArgument("cannot write " + output);
        return command(file);
    } catch (const InvalidArgument& e) {
        std::cerr << "symprod: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "symprod: precondition failed: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "symprod: " << e.what() << '\n';
        return kCheckFailed;
    }
}
