#include <iostream>
#include <sstream>

#include "knotpack/csv.hpp"
#include "knotpack/invariants.hpp"
#include "knotpack/probe.hpp"
#include "knotpack/thickness.hpp"
#include "common.hpp"

namespace knotpack::cli {

namespace {

std::string describe_point(const EdgePoint& p) {
    std::ostringstream out;
    out << "(edge " << p.edge << ", t=" << format_double(p.t) << ")";
    return out.str();
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& opt) {
    PolygonalCurve curve = load_curve(opt.curve_path);
    QuadratureConfig quad;
    quad.points_per_edge = opt.quad_points;

    std::vector<InvariantReport> reports;
    for (const std::string& spec_text : split_list(opt.functionals))
        reports.push_back(
            compute_invariants(curve, SizeFunctionalSpec::parse(spec_text), quad));

    ThicknessBreakdown thick = polygonal_thickness(curve);
    ComparisonReport cmp = comparison_check(curve, quad);
    DistortionBounds dist = distortion_bounds_report(curve, opt.distortion_samples);

    std::ostringstream csv;
    csv << invariant_csv_header() << "\n";
    for (const InvariantReport& r : reports) csv << invariant_csv_row(r) << "\n";
    write_text(out_path(opt.common, "analyze_reports.csv"), csv.str());

    std::ostringstream text;
    text << "curve: " << (curve.name.empty() ? opt.curve_path : curve.name) << " ("
         << curve.vertex_count() << " vertices";
    if (!curve.claimed_knot_type.empty()) text << ", claimed type " << curve.claimed_knot_type;
    text << ")\n\n";
    text << "thickness breakdown\n";
    text << "  min_rad        " << format_double(thick.min_rad) << " at vertex "
         << thick.min_rad_vertex << "\n";
    if (thick.dcsd_found) {
        text << "  dcsd           " << format_double(thick.dcsd) << " between "
             << describe_point(thick.dcsd_witness[0]) << " and "
             << describe_point(thick.dcsd_witness[1]) << "\n";
    } else {
        text << "  dcsd           +inf (no doubly critical pair; MinRad governs)\n";
    }
    text << "  min pair dist  " << format_double(thick.min_pair_dist)
         << " (unconstrained non-adjacent, diagnostic)\n";
    text << "  thickness      " << format_double(thick.thickness) << "\n\n";
    text << "comparison chain (Len/diam <= Len/Rmin <= 2 Len/diam)\n";
    text << "  " << format_double(cmp.len_over_diam) << " <= " << format_double(cmp.len_over_rmin)
         << " <= " << format_double(cmp.two_len_over_diam) << "\n";
    text << "comparison chain (diam/2Thi <= Rmin/Thi <= diam/Thi)\n";
    text << "  " << format_double(cmp.half_diam_over_thi) << " <= "
         << format_double(cmp.rmin_over_thi) << " <= " << format_double(cmp.diam_over_thi)
         << "\n\n";
    text << "distortion lower-bound estimate\n";
    text << "  estimate       " << format_double(dist.distortion_est) << "\n";
    text << "  Len/(2 diam)   " << format_double(dist.len_over_2diam) << "\n";
    text << "  Len/(4 Rmin)   " << format_double(dist.len_over_4rmin) << "\n\n";
    text << "invariant reports\n";
    text << "  " << invariant_csv_header() << "\n";
    for (const InvariantReport& r : reports) text << "  " << invariant_csv_row(r) << "\n";
    std::string text_str = text.str();
    write_text(out_path(opt.common, "analyze.txt"), text_str);
    std::cout << text_str;

    RunManifest manifest = make_manifest("analyze", opt.common, opt.curve_path);
    manifest.flags["functional"] = opt.functionals;
    manifest.flags["quad-points"] = std::to_string(opt.quad_points);
    manifest.flags["distortion-samples"] = std::to_string(opt.distortion_samples);
    manifest.write(out_path(opt.common, "manifest.json"));
    return 0;
}

}  // namespace knotpack::cli
