#ifndef KNOTPACK_SIZE_HPP
#define KNOTPACK_SIZE_HPP

#include <limits>
#include <string>

#include "knotpack/curve.hpp"

namespace knotpack {

// The supported size functionals. Every kind is Euclidean-invariant,
// scale-covariant and positive on embedded closed curves.
enum class SizeKind {
    Diam,           // sup pairwise distance
    RMin,           // radius of the smallest enclosing ball
    RadialP,        // L^p-radial size, optimal center
    PairwiseP,      // pairwise L^p-spread
    ConvHullEta,    // (hull volume + eta * diam^3)^(1/3)
    Gyration,       // radius of gyration (= L^2-radial size)
    ArtificialStar  // Thi * (1 + exp(-Rop)); not a spatial size, used as a probe
};

inline constexpr double kPinf = std::numeric_limits<double>::infinity();

struct SizeFunctionalSpec {
    SizeKind kind = SizeKind::Diam;
    double p = 2.0;     // order for RadialP / PairwiseP; may be kPinf
    double eta = 0.01;  // regularization for ConvHullEta

    static SizeFunctionalSpec diam() { return {SizeKind::Diam}; }
    static SizeFunctionalSpec rmin() { return {SizeKind::RMin}; }
    static SizeFunctionalSpec radial(double p) { return {SizeKind::RadialP, p}; }
    static SizeFunctionalSpec pairwise(double p) { return {SizeKind::PairwiseP, p}; }
    static SizeFunctionalSpec conv(double eta) { return {SizeKind::ConvHullEta, 2.0, eta}; }
    static SizeFunctionalSpec gyration() { return {SizeKind::Gyration}; }
    static SizeFunctionalSpec star() { return {SizeKind::ArtificialStar}; }

    // p in [1, 64] or infinity for the L^p families; eta > 0. Throws
    // ValidationError otherwise. The finite-p cap guards pow() overflow.
    void validate() const;

    // CLI grammar: diam | rmin | rp:<p> | dp:<p> | conv:<eta> | gyr | star
    std::string to_string() const;
    static SizeFunctionalSpec parse(const std::string& text);

    bool operator==(const SizeFunctionalSpec& o) const {
        return kind == o.kind && p == o.p && eta == o.eta;
    }
};

struct QuadratureConfig {
    int points_per_edge = 8;
    double center_solver_tol = 1e-10;  // relative to curve diameter
    int center_solver_max_iter = 200;

    void validate() const;  // points_per_edge >= 2
};

// Max pairwise distance over vertices. For a polygon this equals the sup over
// the full point set: the diameter of a compact set is attained on its convex
// hull, and the hull of a polygon is the hull of its vertices.
double diameter(const PolygonalCurve& curve);

struct EnclosingBall {
    double radius = 0.0;
    Vec3 center;
};

// Smallest ball containing all vertices; it contains every edge by convexity.
// Satisfies diam/2 <= radius <= diam.
EnclosingBall min_enclosing_radius(const PolygonalCurve& curve);

struct RadialSize {
    double value = 0.0;
    Vec3 center;
    int iterations = 0;  // center-solver cycles (0 for the closed-form cases)
};

// L^p-radial size: inf over centers a of ((1/Len) Int |x-a|^p ds)^(1/p).
// p = infinity delegates to min_enclosing_radius; p = 2 is exact (the
// minimizing center is the arclength barycenter); other p use per-edge
// Gauss-Legendre quadrature plus derivative-free convex minimization.
RadialSize radial_size_p(const PolygonalCurve& curve, double p,
                         const QuadratureConfig& cfg = {});

// Exact closed form; equals radial_size_p(curve, 2) exactly.
double gyration_radius(const PolygonalCurve& curve);

// Pairwise L^p-spread: ((1/Len^2) IntInt |x-y|^p ds ds)^(1/p); p = infinity
// returns the diameter. Accepts any p > 0.
double pairwise_spread_p(const PolygonalCurve& curve, double p,
                         const QuadratureConfig& cfg = {});

// (hull volume + eta * diam^3)^(1/3); planar hulls contribute volume 0.
double convex_hull_size(const PolygonalCurve& curve, double eta);

// Dispatch on the functional kind.
double evaluate_size(const SizeFunctionalSpec& spec, const PolygonalCurve& curve,
                     const QuadratureConfig& cfg = {});

}  // namespace knotpack

#endif  // KNOTPACK_SIZE_HPP
