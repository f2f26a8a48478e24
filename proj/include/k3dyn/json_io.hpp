#pragma once

// JSON wire formats: quadratic-field numbers, lattice files, surface files,
// verdict reports and orbit reports.  All output uses ordered keys and
// string-encoded rationals so that parse → re-serialize is byte-identical.

#include <nlohmann/json.hpp>

#include <string>

#include "k3dyn/dynsys.hpp"
#include "k3dyn/pointdyn.hpp"
#include "k3dyn/surfaces.hpp"

namespace k3dyn {

using Json = nlohmann::ordered_json;

Json quadext_to_json(const QuadExt& x);
QuadExt quadext_from_json(const Json& j);

Json lattice_to_json(const PicLattice& l);
LatticePtr lattice_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);

Json surface22_to_json(const Wehler22Surface& s);
Wehler22Surface surface22_from_json(const Json& j);
Json surface222_to_json(const Wehler222Surface& s);
Wehler222Surface surface222_from_json(const Json& j);

// Dispatches on the "type" field ("wehler_22" / "wehler_222").
struct AnySurface {
    std::optional<Wehler22Surface> s22;
    std::optional<Wehler222Surface> s222;
};
AnySurface surface_from_json(const Json& j);

template <class PointT>
Json orbit_to_json(const OrbitRecord<PointT>& rec) {
    Json steps = Json::array();
    for (std::size_t i = 0; i < rec.points.size(); ++i) {
        Json s;
        s["point"] = rec.points[i].str();
        s["heights"] = rec.heights[i];
        s["bits"] = rec.bit_sizes[i];
        steps.push_back(std::move(s));
    }
    Json out;
    out["steps"] = std::move(steps);
    out["word"] = rec.word;
    out["truncated"] = rec.truncated;
    if (rec.truncated) out["error"] = rec.error;
    return out;
}

Json load_json_file(const std::string& path);

// Point literals: "x0:x1,y0:y1,z0:z1" and "x0:x1:x2;y0:y1:y2".
SurfacePoint222 parse_point_222(const std::string& text);
SurfacePoint22 parse_point_22(const std::string& text);

}  // namespace k3dyn
