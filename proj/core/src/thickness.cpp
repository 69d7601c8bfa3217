#include "knotpack/thickness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "knotpack/errors.hpp"

namespace knotpack {

namespace {

constexpr double kCritTol = 1e-8;   // perpendicularity / normal-cone tolerance
constexpr double kInteriorTol = 1e-9;  // edge parameter margin for "interior"

// Criticality of the arc distance function at vertex i, for a partner in
// direction `vec` (pointing away from the vertex). Local minimum: vec makes a
// non-acute angle with both outgoing edge directions; local maximum: non-
// obtuse with both. Either counts as critical.
bool vertex_critical(const PolygonalCurve& curve, std::size_t i, const Vec3& vec) {
    std::size_t n = curve.vertex_count();
    double vn = norm(vec);
    if (vn <= 0.0) return false;
    Vec3 u = vec / vn;
    Vec3 to_next = normalized(curve.vertex((i + 1) % n) - curve.vertex(i));
    Vec3 to_prev = normalized(curve.vertex((i + n - 1) % n) - curve.vertex(i));
    double a = dot(u, to_next);
    double b = dot(u, to_prev);
    bool local_min = a <= kCritTol && b <= kCritTol;
    bool local_max = a >= -kCritTol && b >= -kCritTol;
    return local_min || local_max;
}

struct DcsdScan {
    double best = std::numeric_limits<double>::infinity();
    std::array<EdgePoint, 2> witness{};
    bool found = false;
    double min_pair_dist = std::numeric_limits<double>::infinity();
};

// Shared candidate enumeration. `threshold` prunes pairs that provably cannot
// produce a value below it (pass +infinity for the full scan); `track_pairs`
// additionally records the unconstrained non-adjacent pair minimum.
DcsdScan scan_dcsd(const PolygonalCurve& curve, double threshold, bool track_pairs) {
    const std::size_t n = curve.vertex_count();
    DcsdScan out;

    std::vector<Vec3> centers(n);
    std::vector<double> half(n);
    for (std::size_t i = 0; i < n; ++i) {
        centers[i] = (curve.edge_start(i) + curve.edge_end(i)) * 0.5;
        half[i] = 0.5 * curve.edge_length(i);
    }

    auto cutoff = [&]() { return std::min(threshold, out.best); };

    auto offer = [&](double d, EdgePoint a, EdgePoint b) {
        if (d < out.best) {
            out.best = d;
            out.witness = {a, b};
            out.found = true;
        }
    };

    // Interior-interior: constrained minimizers of non-adjacent edge pairs.
    // The squared distance over a segment pair is convex, so the minimizer is
    // the only possible interior critical point of that pair.
    for (std::size_t i = 0; i + 2 < n; ++i) {
        std::size_t j_end = (i == 0) ? n - 1 : n;
        for (std::size_t j = i + 2; j < j_end; ++j) {
            double need = track_pairs ? std::max(cutoff(), out.min_pair_dist) : cutoff();
            double lb = distance(centers[i], centers[j]) - half[i] - half[j];
            if (lb >= need) continue;
            SegmentClosest c = closest_segment_segment(curve.edge_start(i), curve.edge_end(i),
                                                       curve.edge_start(j), curve.edge_end(j));
            if (track_pairs) out.min_pair_dist = std::min(out.min_pair_dist, c.dist);
            if (c.dist >= cutoff()) continue;
            if (c.s <= kInteriorTol || c.s >= 1.0 - kInteriorTol) continue;
            if (c.t <= kInteriorTol || c.t >= 1.0 - kInteriorTol) continue;
            Vec3 x = curve.point_at(i, c.s);
            Vec3 y = curve.point_at(j, c.t);
            Vec3 vec = y - x;
            double vn = norm(vec);
            if (vn <= 0.0) continue;
            Vec3 u = vec / vn;
            Vec3 d1 = normalized(curve.edge_vector(i));
            Vec3 d2 = normalized(curve.edge_vector(j));
            if (std::abs(dot(u, d1)) < kCritTol && std::abs(dot(u, d2)) < kCritTol)
                offer(c.dist, {(int)i, c.s}, {(int)j, c.t});
        }
    }

    // Vertex against non-incident edge: the perpendicular foot, when it lands
    // strictly inside the edge, paired with the vertex cone test.
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3& v = curve.vertex(i);
        std::size_t e_prev = (i + n - 1) % n;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || j == e_prev) continue;
            double lb = distance(v, centers[j]) - half[j];
            if (lb >= cutoff()) continue;
            Vec3 d = curve.edge_vector(j);
            double dd = norm2(d);
            if (dd <= 0.0) continue;
            double t = dot(v - curve.edge_start(j), d) / dd;
            if (t <= kInteriorTol || t >= 1.0 - kInteriorTol) continue;
            Vec3 foot = curve.edge_start(j) + d * t;
            Vec3 vec = foot - v;
            double dist = norm(vec);
            if (dist >= cutoff()) continue;
            if (!vertex_critical(curve, i, vec)) continue;
            offer(dist, {(int)i, 0.0}, {(int)j, t});
        }
    }

    // Non-neighboring vertex pairs, critical at both ends.
    for (std::size_t i = 0; i + 2 < n; ++i) {
        std::size_t j_end = (i == 0) ? n - 1 : n;
        for (std::size_t j = i + 2; j < j_end; ++j) {
            Vec3 vec = curve.vertex(j) - curve.vertex(i);
            double dist = norm(vec);
            if (dist >= cutoff()) continue;
            if (!vertex_critical(curve, i, vec)) continue;
            if (!vertex_critical(curve, j, -vec)) continue;
            offer(dist, {(int)i, 0.0}, {(int)j, 0.0});
        }
    }

    return out;
}

}  // namespace

MinRadResult min_rad(const PolygonalCurve& curve) {
    const std::size_t n = curve.vertex_count();
    MinRadResult out;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t prev = (i + n - 1) % n;
        Vec3 u = curve.edge_vector(prev);
        Vec3 w = curve.edge_vector(i);
        double nu = norm(u), nw = norm(w);
        double c = std::clamp(dot(u, w) / (nu * nw), -1.0, 1.0);
        if (c <= -1.0 + 1e-12) {
            std::ostringstream msg;
            msg << "pi-turn vertex at index " << i;
            throw NumericError(msg.str());
        }
        double s = norm(cross(u, w)) / (nu * nw);
        double tan_half = s / (1.0 + c);
        if (tan_half <= 0.0) continue;  // straight vertex: radius +inf
        double rad = (0.5 * std::min(nu, nw)) / tan_half;
        if (rad < out.value) {
            out.value = rad;
            out.vertex = static_cast<int>(i);
        }
    }
    return out;
}

DcsdResult dcsd(const PolygonalCurve& curve) {
    DcsdScan scan = scan_dcsd(curve, std::numeric_limits<double>::infinity(), false);
    return {scan.best, scan.witness, scan.found};
}

ThicknessBreakdown polygonal_thickness(const PolygonalCurve& curve) {
    ThicknessBreakdown out;
    MinRadResult mr = min_rad(curve);
    out.min_rad = mr.value;
    out.min_rad_vertex = mr.vertex;
    DcsdScan scan = scan_dcsd(curve, std::numeric_limits<double>::infinity(), true);
    out.dcsd = scan.best;
    out.dcsd_witness = scan.witness;
    out.dcsd_found = scan.found;
    out.min_pair_dist = scan.min_pair_dist;
    out.thickness = std::min(out.min_rad, 0.5 * out.dcsd);
    return out;
}

double thickness_value(const PolygonalCurve& curve) {
    MinRadResult mr = min_rad(curve);
    // Candidates at distance >= 2*min_rad cannot change min(min_rad, dcsd/2).
    DcsdScan scan = scan_dcsd(curve, 2.0 * mr.value, false);
    return std::min(mr.value, 0.5 * scan.best);
}

}  // namespace knotpack
