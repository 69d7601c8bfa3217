#include "knotpack/size.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "knotpack/errors.hpp"
#include "knotpack/hull.hpp"
#include "knotpack/invariants.hpp"
#include "knotpack/miniball.hpp"
#include "knotpack/quadrature.hpp"

namespace knotpack {

namespace {

std::string format_p(double v) {
    if (std::isinf(v)) return "inf";
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_number(const std::string& text, const std::string& what) {
    if (text == "inf") return kPinf;
    double v = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw ValidationError("cannot parse " + what + ": \"" + text + "\"");
    return v;
}

// |x|^p for the supported orders; integer p up to 4 avoids pow().
inline double pow_p(double d, double p) {
    if (p == 2.0) return d * d;
    if (p == 1.0) return d;
    if (p == 3.0) return d * d * d;
    if (p == 4.0) {
        double s = d * d;
        return s * s;
    }
    return std::pow(d, p);
}

struct WeightedPoints {
    std::vector<Vec3> pts;
    std::vector<double> wts;  // per-point weight, includes edge length; sums to Len
    double len = 0.0;
};

WeightedPoints quadrature_points(const PolygonalCurve& curve, int points_per_edge) {
    const auto& rule = gauss_legendre_unit(points_per_edge);
    WeightedPoints out;
    out.pts.reserve(curve.edge_count() * rule.size());
    out.wts.reserve(curve.edge_count() * rule.size());
    for (std::size_t e = 0; e < curve.edge_count(); ++e) {
        double el = curve.edge_length(e);
        out.len += el;
        for (const auto& node : rule) {
            out.pts.push_back(curve.point_at(e, node.t));
            out.wts.push_back(node.w * el);
        }
    }
    return out;
}

// ((1/Len) sum w |x-a|^p)^(1/p), factored by the max distance so large p
// stays in range.
double radial_objective(const WeightedPoints& q, const Vec3& a, double p) {
    double m = 0.0;
    for (const Vec3& x : q.pts) m = std::max(m, distance2(x, a));
    m = std::sqrt(m);
    if (m <= 0.0) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < q.pts.size(); ++i)
        acc += q.wts[i] * pow_p(distance(q.pts[i], a) / m, p);
    return m * std::pow(acc / q.len, 1.0 / p);
}

}  // namespace

void SizeFunctionalSpec::validate() const {
    if (kind == SizeKind::RadialP || kind == SizeKind::PairwiseP) {
        if (std::isinf(p)) return;
        if (!(p >= 1.0)) throw ValidationError("functional order p must satisfy p >= 1 or p = inf");
        if (p > 64.0) throw ValidationError("finite functional order p is capped at 64");
    }
    if (kind == SizeKind::ConvHullEta && !(eta > 0.0))
        throw ValidationError("convex-hull regularization eta must be positive");
}

std::string SizeFunctionalSpec::to_string() const {
    switch (kind) {
        case SizeKind::Diam: return "diam";
        case SizeKind::RMin: return "rmin";
        case SizeKind::RadialP: return "rp:" + format_p(p);
        case SizeKind::PairwiseP: return "dp:" + format_p(p);
        case SizeKind::ConvHullEta: return "conv:" + format_p(eta);
        case SizeKind::Gyration: return "gyr";
        case SizeKind::ArtificialStar: return "star";
    }
    return "diam";
}

SizeFunctionalSpec SizeFunctionalSpec::parse(const std::string& text) {
    SizeFunctionalSpec spec;
    if (text == "diam") {
        spec = diam();
    } else if (text == "rmin") {
        spec = rmin();
    } else if (text == "gyr") {
        spec = gyration();
    } else if (text == "star") {
        spec = star();
    } else if (text.rfind("rp:", 0) == 0) {
        spec = radial(parse_number(text.substr(3), "radial order p"));
    } else if (text.rfind("dp:", 0) == 0) {
        spec = pairwise(parse_number(text.substr(3), "pairwise order p"));
    } else if (text.rfind("conv:", 0) == 0) {
        spec = conv(parse_number(text.substr(5), "eta"));
    } else {
        throw ValidationError("unknown functional spec \"" + text +
                              "\" (expected diam|rmin|rp:<p>|dp:<p>|conv:<eta>|gyr|star)");
    }
    spec.validate();
    return spec;
}

void QuadratureConfig::validate() const {
    if (points_per_edge < 2) throw ValidationError("points_per_edge must be >= 2");
    if (!(center_solver_tol > 0.0)) throw ValidationError("center_solver_tol must be positive");
    if (center_solver_max_iter < 1) throw ValidationError("center_solver_max_iter must be >= 1");
}

double diameter(const PolygonalCurve& curve) {
    return max_pairwise_distance(curve.vertices);
}

EnclosingBall min_enclosing_radius(const PolygonalCurve& curve) {
    Ball b = smallest_enclosing_ball(curve.vertices);
    return {b.radius, b.center};
}

double gyration_radius(const PolygonalCurve& curve) {
    Vec3 c = arclength_barycenter(curve);
    double acc = 0.0, total = 0.0;
    for (std::size_t e = 0; e < curve.edge_count(); ++e) {
        Vec3 u = curve.edge_start(e) - c;
        Vec3 v = curve.edge_end(e) - c;
        double el = curve.edge_length(e);
        acc += el * (norm2(u) + norm2(v) + dot(u, v)) / 3.0;
        total += el;
    }
    return std::sqrt(acc / total);
}

RadialSize radial_size_p(const PolygonalCurve& curve, double p, const QuadratureConfig& cfg) {
    cfg.validate();
    if (std::isinf(p)) {
        EnclosingBall ball = min_enclosing_radius(curve);
        return {ball.radius, ball.center, 0};
    }
    if (!(p >= 1.0)) throw ValidationError("radial size needs p >= 1 or p = inf");
    if (p == 2.0) return {gyration_radius(curve), arclength_barycenter(curve), 0};

    WeightedPoints q = quadrature_points(curve, cfg.points_per_edge);
    double scale = diameter(curve);

    // Cyclic coordinate descent with golden-section line minimization, seeded
    // at the arclength barycenter. The objective is convex for p >= 1, so the
    // stationary point found is the global minimum.
    Vec3 a = arclength_barycenter(curve);
    constexpr double kGolden = 0.6180339887498949;
    const double line_tol = std::max(1e-11 * scale, 1e-300);
    double f_prev = radial_objective(q, a, p);
    int cycle = 0;
    for (; cycle < cfg.center_solver_max_iter; ++cycle) {
        double moved = 0.0;
        for (int c = 0; c < 3; ++c) {
            double lo = a[c] - scale, hi = a[c] + scale;
            double x1 = hi - kGolden * (hi - lo);
            double x2 = lo + kGolden * (hi - lo);
            Vec3 probe = a;
            probe[c] = x1;
            double f1 = radial_objective(q, probe, p);
            probe[c] = x2;
            double f2 = radial_objective(q, probe, p);
            while (hi - lo > line_tol) {
                if (f1 < f2) {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - kGolden * (hi - lo);
                    probe[c] = x1;
                    f1 = radial_objective(q, probe, p);
                } else {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + kGolden * (hi - lo);
                    probe[c] = x2;
                    f2 = radial_objective(q, probe, p);
                }
            }
            double next = 0.5 * (lo + hi);
            moved = std::max(moved, std::abs(next - a[c]));
            a[c] = next;
        }
        if (moved < cfg.center_solver_tol * scale) break;
        // Golden-section cannot localize the minimizer beyond ~sqrt(eps) in
        // x, so also stop once a full cycle no longer changes the value.
        double f_now = radial_objective(q, a, p);
        if (f_prev - f_now <= 1e-14 * (1.0 + std::abs(f_now))) break;
        f_prev = f_now;
    }
    if (cycle >= cfg.center_solver_max_iter) {
        std::ostringstream msg;
        msg << "radial center solver did not converge after " << cycle << " cycles";
        throw NumericError(msg.str());
    }
    return {radial_objective(q, a, p), a, cycle + 1};
}

double pairwise_spread_p(const PolygonalCurve& curve, double p, const QuadratureConfig& cfg) {
    cfg.validate();
    if (std::isinf(p)) return diameter(curve);
    if (!(p > 0.0)) throw ValidationError("pairwise spread needs p > 0");

    // Work in bbox-normalized coordinates so d^p stays in range for large p.
    double s0 = bounding_box_diagonal(curve.vertices);
    if (s0 <= 0.0) return 0.0;
    const int ppe = cfg.points_per_edge;
    WeightedPoints q = quadrature_points(curve, ppe);
    const std::size_t m = q.pts.size();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const Vec3 xi = q.pts[i];
        const double wi = q.wts[i];
        // Same-edge pairs are handled by the closed form below: |x-y|^p has a
        // kink on the diagonal that Gauss-Legendre integrates poorly.
        std::size_t j0 = (i / ppe + 1) * ppe;
        double row = 0.0;
        for (std::size_t j = j0; j < m; ++j)
            row += q.wts[j] * pow_p(distance(xi, q.pts[j]) / s0, p);
        acc += wi * row;
    }
    acc *= 2.0;
    // Exact same-edge contribution: on a straight edge of length L,
    // IntInt |x(s)-y(t)|^p ds dt = L^(p+2) * 2/((p+1)(p+2)). Distances are
    // normalized by s0 to match the accumulator; the ds dt measure is not.
    for (std::size_t e = 0; e < curve.edge_count(); ++e) {
        double el = curve.edge_length(e);
        acc += pow_p(el / s0, p) * el * el * 2.0 / ((p + 1.0) * (p + 2.0));
    }
    return s0 * std::pow(acc / (q.len * q.len), 1.0 / p);
}

double convex_hull_size(const PolygonalCurve& curve, double eta) {
    if (!(eta > 0.0)) throw ValidationError("convex-hull regularization eta must be positive");
    double d = diameter(curve);
    double vol = convex_hull_volume(curve.vertices);
    return std::cbrt(vol + eta * d * d * d);
}

double evaluate_size(const SizeFunctionalSpec& spec, const PolygonalCurve& curve,
                     const QuadratureConfig& cfg) {
    spec.validate();
    switch (spec.kind) {
        case SizeKind::Diam: return diameter(curve);
        case SizeKind::RMin: return min_enclosing_radius(curve).radius;
        case SizeKind::RadialP: return radial_size_p(curve, spec.p, cfg).value;
        case SizeKind::PairwiseP: return pairwise_spread_p(curve, spec.p, cfg);
        case SizeKind::ConvHullEta: return convex_hull_size(curve, spec.eta);
        case SizeKind::Gyration: return gyration_radius(curve);
        case SizeKind::ArtificialStar: return artificial_size(curve);
    }
    throw ValidationError("unknown size functional kind");
}

}  // namespace knotpack
