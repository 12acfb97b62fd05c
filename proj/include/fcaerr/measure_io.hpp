#pragma once

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "fcaerr/cxt_io.hpp"
#include "fcaerr/scale_measure.hpp"

namespace fcaerr {

/// σ as a JSON object mapping base object names to scale object names.
/// Missing entries are not allowed: the map must be total.
inline ObjectMap object_map_from_json(const nlohmann::json& j, const FormalContext& base,
                                      const FormalContext& scale) {
    if (!j.is_object()) throw ParseError("object map: expected a JSON object");
    std::vector<std::size_t> images(base.object_count());
    std::vector<bool> seen(base.object_count(), false);
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto g = base.object_index(it.key());
        if (!g) throw ParseError("object map: unknown base object '" + it.key() + "'");
        auto t = scale.object_index(it.value().get<std::string>());
        if (!t)
            throw ParseError("object map: unknown scale object '" +
                             it.value().get<std::string>() + "'");
        images[*g] = *t;
        seen[*g] = true;
    }
    for (std::size_t g = 0; g < base.object_count(); ++g)
        if (!seen[g])
            throw ParseError("object map: no image for object '" + base.object_name(g) + "'");
    return ObjectMap(std::move(images), scale.object_count());
}

/// Scale-measure bundle: {"base": "k.cxt", "scale": "s.cxt", "map": {...}}.
/// Paths resolve relative to the JSON file; an omitted map means identity by
/// object name.
inline ScaleMeasure load_scale_measure(const std::filesystem::path& json_path) {
    std::ifstream in(json_path);
    if (!in) throw ParseError("cannot open " + json_path.string());
    nlohmann::json j = nlohmann::json::parse(in);
    if (!j.contains("base") || !j.contains("scale"))
        throw ParseError("scale-measure json needs \"base\" and \"scale\" paths");
    std::filesystem::path dir = json_path.parent_path();
    FormalContext base = read_cxt_file(dir / j["base"].get<std::string>());
    FormalContext scale = read_cxt_file(dir / j["scale"].get<std::string>());
    ObjectMap map = j.contains("map") ? object_map_from_json(j["map"], base, scale)
                                      : ObjectMap::identity_by_name(base, scale);
    return ScaleMeasure{std::move(base), std::move(scale), std::move(map)};
}

/// Closure system as a JSON array of object-name arrays, canonical order.
inline nlohmann::json closure_system_to_json(const ClosureSystem& cs,
                                             const std::vector<std::string>& object_names) {
    nlohmann::json out = nlohmann::json::array();
    for (const Bitset& m : cs.members()) {
        nlohmann::json member = nlohmann::json::array();
        m.for_each([&](std::size_t g) { member.push_back(object_names[g]); });
        out.push_back(std::move(member));
    }
    return out;
}

}  // namespace fcaerr
