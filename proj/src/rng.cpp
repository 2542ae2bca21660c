#include "spherigon/rng.hpp"

#include <cmath>

#include "spherigon/tolerances.hpp"

namespace spherigon {

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Marsaglia polar method: fixed algorithm, reproducible everywhere.
    for (;;) {
        double u = 2.0 * uniform() - 1.0;
        double v = 2.0 * uniform() - 1.0;
        double s = u * u + v * v;
        if (s >= 1.0 || s == 0.0)
            continue;
        double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }
}

Vec3 Rng::unit_vector() {
    for (;;) {
        Vec3 v{gaussian(), gaussian(), gaussian()};
        double n = v.norm();
        if (n > 1e-6)
            return v / n;
    }
}

Vec3 Rng::in_cap(const Vec3& center, double radius) {
    // Area-uniform: cos(colatitude) uniform in [cos(radius), 1].
    double cz = 1.0 - uniform() * (1.0 - std::cos(radius));
    double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
    double az = 2.0 * kPi * uniform();
    Vec3 e1 = any_orthonormal(center);
    Vec3 e2 = cross(center, e1);
    return center * cz + (e1 * std::cos(az) + e2 * std::sin(az)) * sz;
}

}  // namespace spherigon
