#include "knotpack/hull.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace knotpack {

namespace {

struct Face {
    int a, b, c;
    Vec3 normal;     // outward, not normalized
    double offset;   // dot(normal, x) = offset on the face plane
    bool alive = true;
};

Face make_face(std::span<const Vec3> pts, int a, int b, int c, const Vec3& interior) {
    Face f{a, b, c, {}, 0.0, true};
    f.normal = cross(pts[b] - pts[a], pts[c] - pts[a]);
    f.offset = dot(f.normal, pts[a]);
    if (dot(f.normal, interior) > f.offset) {
        std::swap(f.b, f.c);
        f.normal = -f.normal;
        f.offset = -f.offset;
    }
    return f;
}

}  // namespace

double convex_hull_volume(std::span<const Vec3> pts) {
    const std::size_t n = pts.size();
    if (n < 4) return 0.0;
    const double diam = max_pairwise_distance(pts);
    if (diam <= 0.0) return 0.0;
    const double eps = 1e-10 * diam;

    // Initial tetrahedron from extreme points.
    std::size_t i0 = 0, i1 = 0;
    {
        double best = -1.0;
        std::size_t lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
        for (std::size_t i = 1; i < n; ++i)
            for (int ax = 0; ax < 3; ++ax) {
                if (pts[i][ax] < pts[lo[ax]][ax]) lo[ax] = i;
                if (pts[i][ax] > pts[hi[ax]][ax]) hi[ax] = i;
            }
        for (int ax = 0; ax < 3; ++ax) {
            double d = distance2(pts[lo[ax]], pts[hi[ax]]);
            if (d > best) {
                best = d;
                i0 = lo[ax];
                i1 = hi[ax];
            }
        }
        if (best <= eps * eps) return 0.0;
    }
    std::size_t i2 = n;
    {
        double best = eps;
        Vec3 d = pts[i1] - pts[i0];
        for (std::size_t i = 0; i < n; ++i) {
            double h = point_segment_distance(pts[i], pts[i0], pts[i1]);
            if (h > best) {
                best = h;
                i2 = i;
            }
        }
        if (i2 == n) return 0.0;  // collinear
    }
    std::size_t i3 = n;
    {
        Vec3 nrm = cross(pts[i1] - pts[i0], pts[i2] - pts[i0]);
        double nn = norm(nrm);
        double best = eps * nn;
        for (std::size_t i = 0; i < n; ++i) {
            double h = std::abs(dot(nrm, pts[i] - pts[i0]));
            if (h > best) {
                best = h;
                i3 = i;
            }
        }
        if (i3 == n) return 0.0;  // coplanar
    }

    Vec3 interior = (pts[i0] + pts[i1] + pts[i2] + pts[i3]) * 0.25;
    std::vector<Face> faces;
    faces.push_back(make_face(pts, (int)i0, (int)i1, (int)i2, interior));
    faces.push_back(make_face(pts, (int)i0, (int)i1, (int)i3, interior));
    faces.push_back(make_face(pts, (int)i0, (int)i2, (int)i3, interior));
    faces.push_back(make_face(pts, (int)i1, (int)i2, (int)i3, interior));

    for (std::size_t p = 0; p < n; ++p) {
        if (p == i0 || p == i1 || p == i2 || p == i3) continue;
        // Visible faces and their directed boundary edges.
        std::vector<std::size_t> visible;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (!faces[f].alive) continue;
            double vis_eps = eps * norm(faces[f].normal);
            if (dot(faces[f].normal, pts[p]) > faces[f].offset + vis_eps) visible.push_back(f);
        }
        if (visible.empty()) continue;

        auto key = [](int a, int b) {
            return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
                   static_cast<std::uint32_t>(b);
        };
        std::unordered_map<std::uint64_t, int> edge_count;
        for (std::size_t f : visible) {
            const Face& face = faces[f];
            edge_count[key(face.a, face.b)]++;
            edge_count[key(face.b, face.c)]++;
            edge_count[key(face.c, face.a)]++;
        }
        for (std::size_t f : visible) faces[f].alive = false;
        // Horizon: directed edges of the visible region whose reverse is absent.
        for (std::size_t f : visible) {
            const Face& face = faces[f];
            const int e[3][2] = {{face.a, face.b}, {face.b, face.c}, {face.c, face.a}};
            for (const auto& ed : e) {
                if (edge_count.count(key(ed[1], ed[0]))) continue;
                faces.push_back(make_face(pts, ed[0], ed[1], (int)p, interior));
            }
        }
    }

    // Signed volume relative to the interior point.
    double vol6 = 0.0;
    for (const Face& f : faces) {
        if (!f.alive) continue;
        vol6 += dot(pts[f.a] - interior, cross(pts[f.b] - interior, pts[f.c] - interior));
    }
    double vol = std::abs(vol6) / 6.0;
    if (vol < 1e-12 * diam * diam * diam) return 0.0;
    return vol;
}

}  // namespace knotpack
