#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spherigon/polygon.hpp"
#include "spherigon/reduced.hpp"

namespace spherigon {

struct PolygonDocument {
    SphericalPolygon polygon;
    std::optional<double> thickness_hint;
    std::vector<std::string> warnings;  // renormalization notices collected on load
};

// Parses a "spherigon-polygon/1" document. Vertices must be unit within 1e-9
// (ParseError beyond that); deviations above 1e-12 are renormalized with a
// warning, smaller ones silently.
PolygonDocument load_polygon_json(const std::string& text);

// Serializes a polygon document (canonical: sorted keys, round-trip floats).
std::string polygon_to_json(const SphericalPolygon& P,
                            std::optional<double> thickness_hint = std::nullopt);

// Serializes a decomposition as "spherigon-decomp/1". Row indices are
// printed 1-based.
std::string decomposition_to_json(const ReducedDecomposition& D);

}  // namespace spherigon
