#include "spherigon/json_io.hpp"

#include <cmath>

#include <json.hpp>

#include "spherigon/errors.hpp"

namespace spherigon {

using nlohmann::json;

PolygonDocument load_polygon_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("format", "") != "spherigon-polygon/1")
        throw ParseError("expected a spherigon-polygon/1 document");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("missing vertices array");

    std::vector<Vec3> verts;
    std::vector<std::string> warnings;
    int idx = 0;
    for (const json& row : doc["vertices"]) {
        if (!row.is_array() || row.size() != 3 || !row[0].is_number() || !row[1].is_number() ||
            !row[2].is_number())
            throw ParseError("vertex " + std::to_string(idx) + " is not a numeric triple");
        Vec3 v{row[0].get<double>(), row[1].get<double>(), row[2].get<double>()};
        double dev = std::abs(v.norm() - 1.0);
        if (dev > 1e-9)
            throw ParseError("vertex " + std::to_string(idx) + " is not unit within 1e-9");
        if (dev > 1e-12)
            warnings.push_back("vertex " + std::to_string(idx) +
                               " renormalized (norm deviation " + std::to_string(dev) + ")");
        verts.push_back(v);  // SphericalPolygon renormalizes
        ++idx;
    }

    std::optional<double> hint;
    if (doc.contains("thickness_hint") && !doc["thickness_hint"].is_null()) {
        if (!doc["thickness_hint"].is_number())
            throw ParseError("thickness_hint must be a number or null");
        hint = doc["thickness_hint"].get<double>();
    }

    try {
        return PolygonDocument{SphericalPolygon(std::move(verts)), hint, std::move(warnings)};
    } catch (const Error& e) {
        throw ParseError(std::string("polygon rejected: ") + e.what());
    }
}

std::string polygon_to_json(const SphericalPolygon& P, std::optional<double> thickness_hint) {
    json doc;
    doc["format"] = "spherigon-polygon/1";
    json verts = json::array();
    for (const Vec3& v : P.vertices())
        verts.push_back({v.x, v.y, v.z});
    doc["vertices"] = std::move(verts);
    doc["thickness_hint"] = thickness_hint ? json(*thickness_hint) : json(nullptr);
    return doc.dump(2) + "\n";
}

std::string decomposition_to_json(const ReducedDecomposition& D) {
    json doc;
    doc["format"] = "spherigon-decomp/1";
    doc["omega"] = D.omega;
    json rows = json::array();
    for (int i = 0; i < D.size(); ++i) {
        const DecompositionRow& r = D.rows[i];
        json row;
        row["i"] = i + 1;  // reports are 1-based
        row["t"] = {r.t.x, r.t.y, r.t.z};
        row["o"] = {r.o.x, r.o.y, r.o.z};
        row["alpha"] = r.alpha;
        row["beta"] = r.beta;
        row["phi"] = r.phi;
        row["b"] = r.b;
        row["c"] = r.c;
        row["y"] = r.y;
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

}  // namespace spherigon
