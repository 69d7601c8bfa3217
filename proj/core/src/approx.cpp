#include "knotpack/approx.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "knotpack/errors.hpp"
#include "knotpack/thickness.hpp"

namespace knotpack {

namespace {

constexpr long double kTwoPiL = 6.283185307179586476925286766559L;

}  // namespace

ParamCurveSpec ParamCurveSpec::circle(double r) {
    ParamCurveSpec spec;
    spec.kind = Kind::Circle;
    spec.radius = r;
    return spec;
}

ParamCurveSpec ParamCurveSpec::torus(int p, int q, double big_r, double small_r) {
    ParamCurveSpec spec;
    spec.kind = Kind::TorusKnot;
    spec.p = p;
    spec.q = q;
    spec.big_r = big_r;
    spec.small_r = small_r;
    return spec;
}

ParamCurveSpec ParamCurveSpec::parse(const std::string& text) {
    ParamCurveSpec spec;
    if (text == "circle") {
        spec = circle(1.0);
    } else if (text.rfind("circle:", 0) == 0) {
        spec = circle(std::stod(text.substr(7)));
    } else if (text.rfind("torus:", 0) == 0) {
        std::istringstream in(text.substr(6));
        int p = 0, q = 0;
        double big_r = 0.0, small_r = 0.0;
        char c1 = 0, c2 = 0, c3 = 0;
        if (!(in >> p >> c1 >> q >> c2 >> big_r >> c3 >> small_r) || c1 != ',' || c2 != ',' ||
            c3 != ',')
            throw ValidationError("cannot parse torus spec \"" + text +
                                  "\" (expected torus:p,q,R,r)");
        spec = torus(p, q, big_r, small_r);
    } else {
        throw ValidationError("unknown curve spec \"" + text +
                              "\" (expected circle, circle:<r>, or torus:p,q,R,r)");
    }
    spec.validate();
    return spec;
}

void ParamCurveSpec::validate() const {
    if (kind == Kind::Circle) {
        if (!(radius > 0.0)) throw ValidationError("circle radius must be positive");
        return;
    }
    if (p < 1 || q < 1) throw ValidationError("torus knot winding numbers must be positive");
    if (std::gcd(p, q) != 1) throw ValidationError("torus knot needs gcd(p,q) = 1");
    if (!(big_r > small_r && small_r > 0.0))
        throw ValidationError("torus knot needs R > r > 0");
}

Vec3 ParamCurveSpec::at(double t) const { return at_param(static_cast<long double>(t)); }

// Extended-precision parameter evaluation: the inscribed-polygon closed-form
// identities (thickness of the n-gon = cos(pi/n)) hold to ~1e-12 only when
// the vertex coordinates carry no argument-reduction error beyond their final
// double rounding.
Vec3 ParamCurveSpec::at_param(long double t) const {
    if (kind == Kind::Circle)
        return {static_cast<double>(radius * cosl(t)), static_cast<double>(radius * sinl(t)),
                0.0};
    long double w = big_r + small_r * cosl(q * t);
    return {static_cast<double>(w * cosl(p * t)), static_cast<double>(w * sinl(p * t)),
            static_cast<double>(small_r * sinl(q * t))};
}

std::string ParamCurveSpec::label() const {
    std::ostringstream out;
    if (kind == Kind::Circle)
        out << "circle-r" << radius;
    else
        out << "torus-" << p << "-" << q;
    return out.str();
}

std::string ParamCurveSpec::knot_type() const {
    if (kind == Kind::Circle) return "unknot";
    if ((p == 2 && q == 3) || (p == 3 && q == 2)) return "trefoil";
    std::ostringstream out;
    out << "torus(" << p << "," << q << ")";
    return out.str();
}

PolygonalCurve inscribed_polygon(const ParamCurveSpec& spec, int n) {
    spec.validate();
    if (n < 3) throw ValidationError("inscribed polygon needs n >= 3");
    PolygonalCurve curve;
    curve.vertices.reserve(n);
    for (int k = 0; k < n; ++k) curve.vertices.push_back(spec.at_param(kTwoPiL * k / n));
    std::ostringstream name;
    name << spec.label() << "-n" << n;
    curve.name = name.str();
    curve.claimed_knot_type = spec.knot_type();
    try {
        validate_curve(curve);
    } catch (const ValidationError& e) {
        std::ostringstream msg;
        msg << "too coarse: inscribed polygon n=" << n << " for " << spec.label()
            << " fails validation (" << e.what() << ")";
        throw ValidationError(msg.str());
    }
    return curve;
}

std::vector<double> ConvergenceTable::cauchy_increments() const {
    std::vector<double> out;
    for (std::size_t k = 0; k + 1 < rows.size(); ++k)
        out.push_back(std::abs(rows[k + 1].crad - rows[k].crad));
    return out;
}

ConvergenceTable convergence_study(const ParamCurveSpec& spec, const SizeFunctionalSpec& functional,
                                   const std::vector<int>& n_list, const QuadratureConfig& cfg) {
    if (n_list.empty()) throw ValidationError("convergence study needs a nonempty n list");
    for (std::size_t k = 0; k + 1 < n_list.size(); ++k)
        if (n_list[k + 1] <= n_list[k])
            throw ValidationError("convergence study needs strictly increasing n values");
    ConvergenceTable table;
    table.functional = functional;
    for (int n : n_list) {
        PolygonalCurve curve = inscribed_polygon(spec, n);
        InvariantReport r = compute_invariants(curve, functional, cfg);
        table.rows.push_back({n, r.d_value, r.thickness, r.crad, r.pack, r.rho, r.rop});
    }
    return table;
}

}  // namespace knotpack
