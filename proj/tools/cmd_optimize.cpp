#include <iostream>
#include <sstream>

#include <json.hpp>

#include "knotpack/anneal.hpp"
#include "knotpack/csv.hpp"
#include "common.hpp"

namespace knotpack::cli {

int cmd_optimize(const OptimizeOptions& opt) {
    PolygonalCurve curve = load_curve(opt.curve_path);
    SizeFunctionalSpec functional = SizeFunctionalSpec::parse(opt.functional);

    AnnealConfig cfg;
    cfg.objective = parse_objective(opt.objective);
    cfg.steps = opt.steps;
    cfg.initial_temperature = opt.temp0;
    cfg.cooling_rate = opt.cooling;
    cfg.step_sigma = opt.sigma;
    cfg.seed = opt.common.seed;
    cfg.renormalize_every = opt.renormalize_every;
    cfg.chains = opt.chains;
    cfg.threads = opt.common.threads;
    cfg.validate();

    AnnealResult result = anneal(curve, functional, cfg);
    if (result.frozen_warning)
        std::cerr << "warning: frozen: a full temperature epoch saw zero accepted moves\n";

    std::string curve_out =
        opt.out_curve.empty() ? out_path(opt.common, "optimized.json") : opt.out_curve;
    save_curve(curve_out, result.best_curve);

    std::string trace_out =
        opt.trace_csv.empty() ? out_path(opt.common, "trace.csv") : opt.trace_csv;
    {
        std::ostringstream csv;
        csv << "chain,step,value,temperature,accepted\n";
        for (std::size_t c = 0; c < result.chains.size(); ++c)
            for (const TraceRow& row : result.chains[c].trace)
                csv << c << ',' << row.step << ',' << format_double(row.value) << ','
                    << format_double(row.temperature) << ',' << (row.accepted ? 1 : 0) << "\n";
        write_text(trace_out, csv.str());
    }

    nlohmann::json summary;
    summary["objective"] = opt.objective;
    summary["functional"] = functional.to_string();
    summary["best_value"] = result.best_value;
    summary["winning_chain"] = result.winning_chain;
    summary["moves_rejected_isotopy"] = result.moves_rejected_isotopy;
    summary["frozen_warning"] = result.frozen_warning;
    summary["final_report"] = {{"len", result.final_report.len},
                               {"d", result.final_report.d_value},
                               {"thi", result.final_report.thickness},
                               {"rho", result.final_report.rho},
                               {"crad", result.final_report.crad},
                               {"pack", result.final_report.pack},
                               {"rop", result.final_report.rop},
                               {"residual", result.final_report.factorization_residual}};
    if (opt.knot_level) {
        KnotLevelEstimate est = estimate_knot_level(curve, functional, cfg);
        summary["knot_level"] = {{"rho_n_hat", est.rho_n_hat},
                                 {"crad_n_hat", est.crad_n_hat},
                                 {"rop_n_hat", est.rop_n_hat},
                                 {"slack", est.slack}};
    }
    std::string summary_str = summary.dump(2) + "\n";
    write_text(out_path(opt.common, "optimize_summary.json"), summary_str);
    std::cout << summary_str;

    RunManifest manifest = make_manifest("optimize", opt.common, opt.curve_path);
    manifest.flags["objective"] = opt.objective;
    manifest.flags["functional"] = opt.functional;
    manifest.flags["steps"] = std::to_string(opt.steps);
    manifest.flags["chains"] = std::to_string(opt.chains);
    manifest.flags["temp0"] = format_double(opt.temp0);
    manifest.flags["cooling"] = format_double(opt.cooling);
    manifest.flags["sigma"] = format_double(opt.sigma);
    manifest.flags["renormalize-every"] = std::to_string(opt.renormalize_every);
    manifest.flags["out"] = curve_out;
    manifest.flags["trace"] = trace_out;
    manifest.flags["knot-level"] = opt.knot_level ? "true" : "false";
    manifest.write(out_path(opt.common, "manifest.json"));
    return 0;
}

}  // namespace knotpack::cli
