#include <iostream>
#include <sstream>

#include <json.hpp>

#include "knotpack/csv.hpp"
#include "knotpack/probe.hpp"
#include "knotpack/size.hpp"
#include "common.hpp"

namespace knotpack::cli {

int cmd_probe(const ProbeOptions& opt) {
    PolygonalCurve curve = load_curve(opt.curve_path);

    DirectionGrid grid = DirectionGrid::fibonacci(opt.grid);
    TrunkProfile profile = trunk_sweep(curve, grid);
    DistortionBounds dist = distortion_bounds_report(curve, opt.distortion_samples);

    std::ostringstream csv;
    csv << "direction_x,direction_y,direction_z,trunk_v\n";
    for (const auto& entry : profile.entries)
        csv << format_double(entry.direction.x) << ',' << format_double(entry.direction.y) << ','
            << format_double(entry.direction.z) << ',' << entry.trunk_v << "\n";
    write_text(out_path(opt.common, "trunk_profile.csv"), csv.str());

    double rmin = min_enclosing_radius(curve).radius;
    double thi = polygonal_thickness(curve).thickness;
    double crad_rmin = rmin / thi;

    nlohmann::json summary;
    summary["curve"] = curve.name.empty() ? opt.curve_path : curve.name;
    summary["trunk_min_v"] = profile.min_v;  // upper bound on trunk
    summary["strunk_lower_bound"] = profile.max_v;
    summary["distortion_estimate"] = dist.distortion_est;
    summary["len_over_2diam"] = dist.len_over_2diam;
    summary["len_over_4rmin"] = dist.len_over_4rmin;
    summary["crad_rmin"] = crad_rmin;
    // Reported side by side as data only; no inequality between them is
    // asserted anywhere in the tool.
    summary["strunk_vs_crad_squared"] = {profile.max_v, crad_rmin * crad_rmin};
    std::string summary_str = summary.dump(2) + "\n";
    write_text(out_path(opt.common, "probe_summary.json"), summary_str);
    std::cout << summary_str;

    RunManifest manifest = make_manifest("probe", opt.common, opt.curve_path);
    manifest.flags["grid"] = std::to_string(opt.grid);
    manifest.flags["distortion-samples"] = std::to_string(opt.distortion_samples);
    manifest.flags["refine-iters"] = std::to_string(opt.refine_iters);
    manifest.write(out_path(opt.common, "manifest.json"));
    return 0;
}

}  // namespace knotpack::cli
