#include <iostream>

#include <CLI11.hpp>

#include "knotpack/errors.hpp"
#include "knotpack/version.hpp"
#include "commands.hpp"

namespace {

void add_common(CLI::App* cmd, knotpack::cli::CommonOptions& common) {
    cmd->add_option("--out-dir", common.out_dir, "Directory for output files");
    cmd->add_option("--seed", common.seed, "Seed for all randomness (deterministic runs)");
    cmd->add_option("--threads", common.threads, "Worker threads (annealing chains)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Density / compression-radius / packing-ratio analysis of polygonal knots"};
    app.set_version_flag("--version", knotpack::kVersion);
    app.require_subcommand(1);

    knotpack::cli::AnalyzeOptions analyze;
    CLI::App* cmd_analyze = app.add_subcommand(
        "analyze", "Invariant reports, thickness breakdown, comparison and distortion bounds");
    cmd_analyze->add_option("curve", analyze.curve_path, "Curve JSON file")->required();
    cmd_analyze->add_option("--functional", analyze.functionals,
                            "Comma list: diam|rmin|rp:<p>|dp:<p>|conv:<eta>|gyr|star");
    cmd_analyze->add_option("--quad-points", analyze.quad_points, "Quadrature points per edge");
    cmd_analyze->add_option("--distortion-samples", analyze.distortion_samples,
                            "Distortion samples per edge");
    add_common(cmd_analyze, analyze.common);

    knotpack::cli::ProbeOptions probe;
    CLI::App* cmd_probe =
        app.add_subcommand("probe", "Trunk direction sweep and distortion report");
    cmd_probe->add_option("curve", probe.curve_path, "Curve JSON file")->required();
    cmd_probe->add_option("--grid", probe.grid, "Fibonacci sphere grid size");
    cmd_probe->add_option("--distortion-samples", probe.distortion_samples,
                          "Distortion samples per edge");
    cmd_probe->add_option("--refine-iters", probe.refine_iters, "Distortion refinement iterations");
    add_common(cmd_probe, probe.common);

    knotpack::cli::OptimizeOptions optimize;
    CLI::App* cmd_optimize = app.add_subcommand(
        "optimize", "Isotopy-preserving simulated annealing of rop, rho, or crad");
    cmd_optimize->add_option("curve", optimize.curve_path, "Starting curve JSON file")->required();
    cmd_optimize->add_option("--objective", optimize.objective, "rop|rho|crad");
    cmd_optimize->add_option("--functional", optimize.functional, "Size functional spec");
    cmd_optimize->add_option("--steps", optimize.steps, "Proposals per chain");
    cmd_optimize->add_option("--chains", optimize.chains, "Independent chains (best wins)");
    cmd_optimize->add_option("--temp0", optimize.temp0,
                             "Initial temperature (0 = 0.1 * initial objective)");
    cmd_optimize->add_option("--cooling", optimize.cooling, "Cooling rate per epoch");
    cmd_optimize->add_option("--sigma", optimize.sigma, "Move stddev as fraction of diameter");
    cmd_optimize->add_option("--renormalize-every", optimize.renormalize_every,
                             "Rescale to thickness 1 every k steps (0 = off)");
    cmd_optimize->add_option("--out", optimize.out_curve, "Best curve output path");
    cmd_optimize->add_option("--trace", optimize.trace_csv, "Trace CSV output path");
    cmd_optimize->add_flag("--knot-level", optimize.knot_level,
                           "Also run the three-objective knot-level estimate");
    add_common(cmd_optimize, optimize.common);

    knotpack::cli::ConvergeOptions converge;
    CLI::App* cmd_converge = app.add_subcommand(
        "converge", "Inscribed-polygon convergence study for a parametric model curve");
    cmd_converge->add_option("--curve", converge.curve_spec, "circle|circle:<r>|torus:p,q,R,r")
        ->required();
    cmd_converge->add_option("--functional", converge.functional, "Size functional spec");
    cmd_converge->add_option("--n", converge.n_values, "Comma list of edge counts, increasing")
        ->required();
    cmd_converge->add_option("--quad-points", converge.quad_points, "Quadrature points per edge");
    add_common(cmd_converge, converge.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_analyze) return knotpack::cli::cmd_analyze(analyze);
        if (*cmd_probe) return knotpack::cli::cmd_probe(probe);
        if (*cmd_optimize) return knotpack::cli::cmd_optimize(optimize);
        if (*cmd_converge) return knotpack::cli::cmd_converge(converge);
    } catch (const knotpack::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const knotpack::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
