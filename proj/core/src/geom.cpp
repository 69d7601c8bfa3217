#include "knotpack/geom.hpp"

#include <algorithm>
#include <limits>

namespace knotpack {

bool Mat3::is_orthonormal(double tol) const {
    Vec3 c0{m[0][0], m[1][0], m[2][0]};
    Vec3 c1{m[0][1], m[1][1], m[2][1]};
    Vec3 c2{m[0][2], m[1][2], m[2][2]};
    return std::abs(norm2(c0) - 1.0) <= tol && std::abs(norm2(c1) - 1.0) <= tol &&
           std::abs(norm2(c2) - 1.0) <= tol && std::abs(dot(c0, c1)) <= tol &&
           std::abs(dot(c0, c2)) <= tol && std::abs(dot(c1, c2)) <= tol;
}

Mat3 Mat3::axis_angle(const Vec3& axis, double angle) {
    Vec3 u = normalized(axis);
    double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
    Mat3 r;
    r.m = {{{c + u.x * u.x * t, u.x * u.y * t - u.z * s, u.x * u.z * t + u.y * s},
            {u.y * u.x * t + u.z * s, c + u.y * u.y * t, u.y * u.z * t - u.x * s},
            {u.z * u.x * t - u.y * s, u.z * u.y * t + u.x * s, c + u.z * u.z * t}}};
    return r;
}

double closest_point_on_segment(const Vec3& p, const Vec3& a, const Vec3& b) {
    Vec3 d = b - a;
    double dd = norm2(d);
    if (dd <= 0.0) return 0.0;
    return std::clamp(dot(p - a, d) / dd, 0.0, 1.0);
}

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
    double t = closest_point_on_segment(p, a, b);
    return distance(p, a + (b - a) * t);
}

SegmentClosest closest_segment_segment(const Vec3& p0, const Vec3& p1,
                                       const Vec3& q0, const Vec3& q1) {
    const Vec3 d1 = p1 - p0;
    const Vec3 d2 = q1 - q0;
    const Vec3 r = p0 - q0;
    const double a = norm2(d1);
    const double e = norm2(d2);
    const double f = dot(d2, r);

    SegmentClosest out;
    auto finish = [&](double s, double t) {
        out.s = s;
        out.t = t;
        out.dist = distance(p0 + d1 * s, q0 + d2 * t);
        return out;
    };

    if (a <= 0.0 && e <= 0.0) return finish(0.0, 0.0);
    if (a <= 0.0) return finish(0.0, std::clamp(f / e, 0.0, 1.0));
    const double c = dot(d1, r);
    if (e <= 0.0) return finish(std::clamp(-c / a, 0.0, 1.0), 0.0);

    const double b = dot(d1, d2);
    const double denom = a * e - b * b;

    // Parallel: pick the midpoint of the projection overlap so degenerate
    // minimizing families get an interior representative.
    if (denom <= 1e-12 * a * e) {
        double t0 = dot(q0 - p0, d1) / a;
        double t1 = dot(q1 - p0, d1) / a;
        double lo = std::max(0.0, std::min(t0, t1));
        double hi = std::min(1.0, std::max(t0, t1));
        double s;
        if (lo <= hi) {
            s = 0.5 * (lo + hi);
        } else {
            s = (lo > 1.0) ? 1.0 : 0.0;  // disjoint projections: nearest end
        }
        Vec3 ps = p0 + d1 * s;
        double t = std::clamp(dot(ps - q0, d2) / e, 0.0, 1.0);
        // Re-clamp s against the chosen t (matters in the disjoint case).
        Vec3 qt = q0 + d2 * t;
        double s2 = std::clamp(dot(qt - p0, d1) / a, 0.0, 1.0);
        if (lo > hi) s = s2;
        return finish(s, t);
    }

    double s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
    double t = (b * s + f) / e;
    if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
    } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
    }
    return finish(s, t);
}

SegmentTriangleClosest closest_segment_triangle(const Vec3& s0, const Vec3& s1,
                                                const Vec3& t0, const Vec3& t1,
                                                const Vec3& t2) {
    SegmentTriangleClosest best;
    best.dist = std::numeric_limits<double>::infinity();

    auto consider_seg_seg = [&](const Vec3& a0, const Vec3& a1) {
        SegmentClosest c = closest_segment_segment(s0, s1, a0, a1);
        if (c.dist < best.dist) {
            best.dist = c.dist;
            best.on_segment = s0 + (s1 - s0) * c.s;
            best.on_triangle = a0 + (a1 - a0) * c.t;
        }
    };
    consider_seg_seg(t0, t1);
    consider_seg_seg(t1, t2);
    consider_seg_seg(t2, t0);

    Vec3 n = cross(t1 - t0, t2 - t0);
    double n2 = norm2(n);
    double scale2 = std::max({norm2(t1 - t0), norm2(t2 - t0), norm2(t2 - t1)});
    if (n2 > 1e-24 * scale2 * scale2) {
        // Project segment endpoints onto the triangle plane; keep projections
        // that land inside the face. Also catch proper plane crossings.
        auto consider_point_face = [&](const Vec3& p) {
            double h = dot(p - t0, n) / n2;
            Vec3 proj = p - n * h;
            // Inside test via same-side cross products.
            Vec3 c0 = cross(t1 - t0, proj - t0);
            Vec3 c1 = cross(t2 - t1, proj - t1);
            Vec3 c2 = cross(t0 - t2, proj - t2);
            if (dot(c0, n) >= 0.0 && dot(c1, n) >= 0.0 && dot(c2, n) >= 0.0) {
                double d = std::abs(h) * std::sqrt(n2);
                if (d < best.dist) {
                    best.dist = d;
                    best.on_segment = p;
                    best.on_triangle = proj;
                }
            }
        };
        consider_point_face(s0);
        consider_point_face(s1);

        double h0 = dot(s0 - t0, n);
        double h1 = dot(s1 - t0, n);
        if ((h0 > 0.0 && h1 < 0.0) || (h0 < 0.0 && h1 > 0.0)) {
            double u = h0 / (h0 - h1);
            Vec3 hit = s0 + (s1 - s0) * u;
            Vec3 c0 = cross(t1 - t0, hit - t0);
            Vec3 c1 = cross(t2 - t1, hit - t1);
            Vec3 c2 = cross(t0 - t2, hit - t2);
            if (dot(c0, n) >= 0.0 && dot(c1, n) >= 0.0 && dot(c2, n) >= 0.0) {
                best.dist = 0.0;
                best.on_segment = hit;
                best.on_triangle = hit;
            }
        }
    }
    return best;
}

double max_pairwise_distance(std::span<const Vec3> pts) {
    double best = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            best = std::max(best, distance2(pts[i], pts[j]));
    return std::sqrt(best);
}

double bounding_box_diagonal(std::span<const Vec3> pts) {
    if (pts.empty()) return 0.0;
    Vec3 lo = pts[0], hi = pts[0];
    for (const Vec3& p : pts) {
        lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y); lo.z = std::min(lo.z, p.z);
        hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y); hi.z = std::max(hi.z, p.z);
    }
    return distance(lo, hi);
}

}  // namespace knotpack
