#pragma once

#include <optional>
#include <string>

#include "spherigon/polygon.hpp"
#include "spherigon/reduced.hpp"

namespace spherigon {

// Orthographic-projection figure of a polygon (view axis = vertex centroid):
// sphere outline, boundary arcs, vertex markers, and - when a decomposition
// is supplied - the projection feet t_i, the crossings o_i, and the chords
// v_i t_i. Output is deterministic byte-for-byte for identical input.
std::string render_svg(const SphericalPolygon& P,
                       const std::optional<ReducedDecomposition>& D = std::nullopt);

}  // namespace spherigon
