#pragma once

#include <cstdint>
#include <random>

#include "spherigon/vec3.hpp"

namespace spherigon {

// Deterministic random source. Pinned algorithm: mt19937_64 with explicit
// 53-bit uniforms and Marsaglia polar Gaussians, so a (seed, count) pair
// reproduces bit-for-bit across compilers and standard libraries (the
// std <random> distributions have implementation-defined sequences).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // Standard normal (Marsaglia polar, spare cached).
    double gaussian();

    // Uniform on the unit sphere.
    Vec3 unit_vector();

    // Uniform on the spherical cap of angular radius `radius` around unit
    // `center` (area-uniform, not radius-uniform).
    Vec3 in_cap(const Vec3& center, double radius);

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace spherigon
