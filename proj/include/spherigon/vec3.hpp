#pragma once

#include <cmath>

#include "spherigon/errors.hpp"

namespace spherigon {

// Plain 3-vector. Points on the sphere are unit Vec3s; helpers that require
// unit inputs say so and the constructors that build geometric objects
// renormalize.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }

    // Throws DegenerateArc when the vector is too short to define a direction.
    Vec3 normalized() const {
        double n = norm();
        if (n < 1e-14)
            throw DegenerateArc("cannot normalize a near-zero vector");
        return *this / n;
    }
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.dot(b); }
inline Vec3 cross(const Vec3& a, const Vec3& b) { return a.cross(b); }

// Rodrigues rotation of p around a unit axis.
Vec3 rotate_about(const Vec3& p, const Vec3& unit_axis, double angle);

// Any unit vector orthogonal to unit n.
Vec3 any_orthonormal(const Vec3& n);

}  // namespace spherigon
