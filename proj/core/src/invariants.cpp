#include "knotpack/invariants.hpp"

#include <cmath>
#include <sstream>

#include "knotpack/csv.hpp"
#include "knotpack/errors.hpp"
#include "knotpack/thickness.hpp"

namespace knotpack {

double artificial_size(const PolygonalCurve& curve) {
    double thi = thickness_value(curve);
    if (!(thi > 0.0)) throw NumericError("artificial size needs positive thickness");
    double rop = length(curve) / thi;
    return thi * (1.0 + std::exp(-rop));
}

InvariantReport compute_invariants(const PolygonalCurve& curve,
                                   const SizeFunctionalSpec& functional,
                                   const QuadratureConfig& cfg) {
    functional.validate();
    InvariantReport r;
    r.curve_name = curve.name;
    r.functional = functional;
    r.len = length(curve);
    r.thickness = polygonal_thickness(curve).thickness;
    if (!(r.thickness > 0.0)) throw NumericError("curve has nonpositive thickness");
    r.d_value = evaluate_size(functional, curve, cfg);
    if (!(r.d_value > 0.0)) throw NumericError("size functional returned a nonpositive value");
    r.rho = r.len / r.d_value;
    r.crad = r.d_value / r.thickness;
    r.pack = r.thickness / r.d_value;
    r.rop = r.len / r.thickness;
    r.factorization_residual = std::abs(r.rop - r.rho * r.crad) / r.rop;
    if (!(r.factorization_residual <= 1e-12)) {
        std::ostringstream msg;
        msg << "factorization residual " << r.factorization_residual
            << " exceeds 1e-12 (non-finite input?)";
        throw NumericError(msg.str());
    }
    if (!(std::abs(r.pack * r.crad - 1.0) <= 1e-12))
        throw NumericError("pack * crad deviates from 1 beyond 1e-12");
    return r;
}

ComparisonReport comparison_check(const PolygonalCurve& curve, const QuadratureConfig& cfg) {
    (void)cfg;
    double len = length(curve);
    double diam = diameter(curve);
    double rmin = min_enclosing_radius(curve).radius;
    double thi = polygonal_thickness(curve).thickness;
    ComparisonReport r;
    r.len_over_diam = len / diam;
    r.len_over_rmin = len / rmin;
    r.two_len_over_diam = 2.0 * len / diam;
    r.half_diam_over_thi = 0.5 * diam / thi;
    r.rmin_over_thi = rmin / thi;
    r.diam_over_thi = diam / thi;
    const double tol = 1e-12;
    bool ok = r.len_over_diam <= r.len_over_rmin * (1.0 + tol) &&
              r.len_over_rmin <= r.two_len_over_diam * (1.0 + tol) &&
              r.half_diam_over_thi <= r.rmin_over_thi * (1.0 + tol) &&
              r.rmin_over_thi <= r.diam_over_thi * (1.0 + tol);
    if (!ok) throw NumericError("diameter / enclosing-radius comparison chain violated");
    return r;
}

EnsembleCheck ensemble_inequality_check(std::span<const InvariantReport> reports) {
    if (reports.empty()) throw ValidationError("ensemble check needs at least one report");
    const SizeFunctionalSpec& functional = reports.front().functional;
    EnsembleCheck out;
    out.min_rop = reports.front().rop;
    out.min_rho = reports.front().rho;
    out.min_crad = reports.front().crad;
    for (const InvariantReport& r : reports) {
        if (!(r.functional == functional))
            throw ValidationError("ensemble mixes different size functionals");
        out.min_rop = std::min(out.min_rop, r.rop);
        out.min_rho = std::min(out.min_rho, r.rho);
        out.min_crad = std::min(out.min_crad, r.crad);
    }
    out.slack = out.min_rop - out.min_rho * out.min_crad;
    if (out.slack < -1e-9)
        throw NumericError("ensemble slack below -1e-9: inconsistent measurements");
    return out;
}

std::string invariant_csv_header() {
    return "name,functional,len,d,thi,rho,crad,pack,rop,residual";
}

std::string invariant_csv_row(const InvariantReport& r) {
    std::ostringstream row;
    row << r.curve_name << ',' << r.functional.to_string() << ',' << format_double(r.len) << ','
        << format_double(r.d_value) << ',' << format_double(r.thickness) << ','
        << format_double(r.rho) << ',' << format_double(r.crad) << ',' << format_double(r.pack)
        << ',' << format_double(r.rop) << ',' << format_double(r.factorization_residual);
    return row.str();
}

}  // namespace knotpack
