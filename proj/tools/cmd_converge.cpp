#include <iostream>
#include <sstream>

#include "knotpack/approx.hpp"
#include "knotpack/csv.hpp"
#include "common.hpp"

namespace knotpack::cli {

int cmd_converge(const ConvergeOptions& opt) {
    ParamCurveSpec spec = ParamCurveSpec::parse(opt.curve_spec);
    SizeFunctionalSpec functional = SizeFunctionalSpec::parse(opt.functional);
    std::vector<int> n_list;
    for (const std::string& item : split_list(opt.n_values)) n_list.push_back(std::stoi(item));
    if (n_list.empty()) throw ValidationError("converge needs --n with at least one value");

    QuadratureConfig quad;
    quad.points_per_edge = opt.quad_points;
    ConvergenceTable table = convergence_study(spec, functional, n_list, quad);
    std::vector<double> increments = table.cauchy_increments();

    std::ostringstream csv;
    csv << "n,d_value,thickness,crad,pack,rho,rop,crad_cauchy_increment\n";
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        const ConvergenceRow& row = table.rows[k];
        csv << row.n << ',' << format_double(row.d_value) << ',' << format_double(row.thickness)
            << ',' << format_double(row.crad) << ',' << format_double(row.pack) << ','
            << format_double(row.rho) << ',' << format_double(row.rop) << ',';
        if (k > 0) csv << format_double(increments[k - 1]);
        csv << "\n";
    }
    std::string csv_str = csv.str();
    write_text(out_path(opt.common, "convergence.csv"), csv_str);
    std::cout << csv_str;

    RunManifest manifest = make_manifest("converge", opt.common, "");
    manifest.flags["curve"] = opt.curve_spec;
    manifest.flags["functional"] = opt.functional;
    manifest.flags["n"] = opt.n_values;
    manifest.flags["quad-points"] = std::to_string(opt.quad_points);
    manifest.write(out_path(opt.common, "manifest.json"));
    return 0;
}

}  // namespace knotpack::cli
