#ifndef KNOTPACK_INVARIANTS_HPP
#define KNOTPACK_INVARIANTS_HPP

#include <span>
#include <string>

#include "knotpack/size.hpp"

namespace knotpack {

// The density / compression-radius / packing-ratio decomposition of the
// ropelength of one representative, for one size functional. All ratios are
// computed from a single (len, d_value, thickness) triple, so the
// factorization residual isolates float cancellation, not recomputation.
struct InvariantReport {
    std::string curve_name;
    SizeFunctionalSpec functional;
    double len = 0.0;
    double d_value = 0.0;
    double thickness = 0.0;
    double rho = 0.0;    // len / d_value
    double crad = 0.0;   // d_value / thickness
    double pack = 0.0;   // thickness / d_value
    double rop = 0.0;    // len / thickness
    double factorization_residual = 0.0;  // |rop - rho*crad| / rop
};

// Computes the full report. Throws NumericError if the exact identities
// rop = rho*crad and pack*crad = 1 fail beyond 1e-12 (which would indicate
// non-finite inputs rather than a mathematical violation).
InvariantReport compute_invariants(const PolygonalCurve& curve, const SizeFunctionalSpec& functional,
                                   const QuadratureConfig& cfg = {});

// D*(curve) = Thi * (1 + exp(-Rop)). A valid size functional whose
// compression radius is 1 + exp(-Rop), strictly between 1 and 2; used to
// probe strictness of the optimized product inequality.
double artificial_size(const PolygonalCurve& curve);

// The diameter vs. enclosing-radius comparison chain:
//   Len/diam <= Len/R_min <= 2*Len/diam
//   diam/(2*Thi) <= R_min/Thi <= diam/Thi
// Returns all six numbers; throws NumericError if an inequality fails beyond
// 1e-12 relative slack (that would be a size-functional bug).
struct ComparisonReport {
    double len_over_diam = 0.0;
    double len_over_rmin = 0.0;
    double two_len_over_diam = 0.0;
    double half_diam_over_thi = 0.0;
    double rmin_over_thi = 0.0;
    double diam_over_thi = 0.0;
};
ComparisonReport comparison_check(const PolygonalCurve& curve, const QuadratureConfig& cfg = {});

// Empirical minima over an ensemble of reports sharing one functional.
// slack = min_rop - min_rho * min_crad must be >= -1e-9: each report
// satisfies rop = rho*crad >= min_rho*min_crad, so the minimum does too.
// A larger negative slack signals inconsistent measurements and throws.
struct EnsembleCheck {
    double min_rop = 0.0;
    double min_rho = 0.0;
    double min_crad = 0.0;
    double slack = 0.0;
};
EnsembleCheck ensemble_inequality_check(std::span<const InvariantReport> reports);

// CSV row per report: name,functional,len,d,thi,rho,crad,pack,rop,residual
std::string invariant_csv_header();
std::string invariant_csv_row(const InvariantReport& report);

}  // namespace knotpack

#endif  // KNOTPACK_INVARIANTS_HPP
