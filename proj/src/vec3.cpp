#include "spherigon/vec3.hpp"

#include <cmath>

namespace spherigon {

Vec3 rotate_about(const Vec3& p, const Vec3& unit_axis, double angle) {
    double c = std::cos(angle);
    double s = std::sin(angle);
    return p * c + cross(unit_axis, p) * s + unit_axis * (dot(unit_axis, p) * (1.0 - c));
}

Vec3 any_orthonormal(const Vec3& n) {
    // Pick the coordinate axis least aligned with n to avoid cancellation.
    Vec3 axis = std::abs(n.x) <= std::abs(n.y) && std::abs(n.x) <= std::abs(n.z)
                    ? Vec3{1, 0, 0}
                    : (std::abs(n.y) <= std::abs(n.z) ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
    return cross(n, axis).normalized();
}

}  // namespace spherigon
