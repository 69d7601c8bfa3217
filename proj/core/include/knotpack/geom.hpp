#ifndef KNOTPACK_GEOM_HPP
#define KNOTPACK_GEOM_HPP

#include <array>
#include <cmath>
#include <span>

namespace knotpack {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }
inline double distance2(const Vec3& a, const Vec3& b) { return norm2(a - b); }
inline Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    return n > 0.0 ? v / n : Vec3{0.0, 0.0, 0.0};
}

// Row-major 3x3 matrix; apply() computes M*v.
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

    static Mat3 identity() { return Mat3{}; }

    Vec3 apply(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }

    Mat3 transposed() const {
        Mat3 t;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.m[i][j] = m[j][i];
        return t;
    }

    double det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    // Columns orthonormal within tol.
    bool is_orthonormal(double tol = 1e-12) const;

    // Rotation about a unit axis by angle (Rodrigues).
    static Mat3 axis_angle(const Vec3& axis, double angle);
};

// Closest points between two segments [p0,p1] and [q0,q1].
// For parallel segments with overlapping projections the midpoint of the
// overlap interval is returned, so interior-interior witnesses are preferred
// over the arbitrary endpoint the naive clamping algorithm would pick.
struct SegmentClosest {
    double s = 0.0;   // parameter on [p0,p1]
    double t = 0.0;   // parameter on [q0,q1]
    double dist = 0.0;
};
SegmentClosest closest_segment_segment(const Vec3& p0, const Vec3& p1,
                                       const Vec3& q0, const Vec3& q1);

inline double segment_segment_distance(const Vec3& p0, const Vec3& p1,
                                       const Vec3& q0, const Vec3& q1) {
    return closest_segment_segment(p0, p1, q0, q1).dist;
}

// Closest point on segment [a,b] to p; returns parameter in [0,1].
double closest_point_on_segment(const Vec3& p, const Vec3& a, const Vec3& b);

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b);

// Minimum distance between a segment and a (possibly degenerate) triangle,
// with the realizing points. Degenerate triangles fall back to their edges.
struct SegmentTriangleClosest {
    double dist = 0.0;
    Vec3 on_segment;
    Vec3 on_triangle;
};
SegmentTriangleClosest closest_segment_triangle(const Vec3& s0, const Vec3& s1,
                                                const Vec3& t0, const Vec3& t1,
                                                const Vec3& t2);

// Max pairwise distance of a point set (exact, O(n^2)).
double max_pairwise_distance(std::span<const Vec3> pts);

// Axis-aligned bounding box diagonal; cheap O(n) scale estimate.
double bounding_box_diagonal(std::span<const Vec3> pts);

}  // namespace knotpack

#endif  // KNOTPACK_GEOM_HPP
