#ifndef KNOTPACK_APPROX_HPP
#define KNOTPACK_APPROX_HPP

#include <string>
#include <vector>

#include "knotpack/invariants.hpp"

namespace knotpack {

// Parametric model curves whose inscribed polygons drive the convergence
// studies. The torus knot parametrization is
//   t -> ((R + r cos(q t)) cos(p t), (R + r cos(q t)) sin(p t), r sin(q t)),
// embedded for gcd(p,q) = 1 and R > r > 0.
struct ParamCurveSpec {
    enum class Kind { Circle, TorusKnot };
    Kind kind = Kind::Circle;
    double radius = 1.0;  // Circle
    int p = 2, q = 3;     // TorusKnot winding numbers
    double big_r = 2.0, small_r = 1.0;

    static ParamCurveSpec circle(double r = 1.0);
    static ParamCurveSpec torus(int p, int q, double big_r, double small_r);

    // "circle" | "circle:<r>" | "torus:<p>,<q>,<R>,<r>"
    static ParamCurveSpec parse(const std::string& text);

    void validate() const;
    Vec3 at(double t) const;
    Vec3 at_param(long double t) const;
    std::string label() const;
    std::string knot_type() const;
};

// Polygon with vertices at uniform parameter values t_k = 2 pi k / n.
// The result is validated; failure of the embeddedness check throws
// ValidationError("too coarse: ...").
PolygonalCurve inscribed_polygon(const ParamCurveSpec& spec, int n);

struct ConvergenceRow {
    int n = 0;
    double d_value = 0.0;
    double thickness = 0.0;
    double crad = 0.0;
    double pack = 0.0;
    double rho = 0.0;
    double rop = 0.0;
};

struct ConvergenceTable {
    SizeFunctionalSpec functional;
    std::vector<ConvergenceRow> rows;

    // |crad(n_{k+1}) - crad(n_k)| for trend reporting; size rows-1.
    std::vector<double> cauchy_increments() const;
};

// One row per n (strictly increasing), full invariant set per inscribed
// polygon. Propagates "too coarse" from inscribed_polygon.
ConvergenceTable convergence_study(const ParamCurveSpec& spec, const SizeFunctionalSpec& functional,
                                   const std::vector<int>& n_list,
                                   const QuadratureConfig& cfg = {});

}  // namespace knotpack

#endif  // KNOTPACK_APPROX_HPP
