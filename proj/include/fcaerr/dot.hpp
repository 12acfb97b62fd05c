#pragma once

#include <string>
#include <vector>

#include "fcaerr/context.hpp"
#include "fcaerr/lattice.hpp"

namespace fcaerr {

enum class LabelStyle {
    /// Every object/attribute appears at exactly one node: objects at their
    /// smallest extent, attributes at their largest.
    Reduced,
    /// Full extent and intent at every node.
    Full,
};

namespace detail {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

inline std::string join_names(const std::vector<std::string>& names, const Bitset& sel) {
    std::string out;
    sel.for_each([&](std::size_t i) {
        if (!out.empty()) out += ", ";
        out += names[i];
    });
    return out;
}

}  // namespace detail

/// Concept lattice as a DOT digraph: one node per concept, edges bottom-up
/// along the cover relation. Nodes whose extent is listed in `highlight` get
/// color=red; every highlight member must be an extent of the lattice.
inline std::string export_dot(const ConceptLattice& lattice, const FormalContext& ctx,
                              const std::vector<Bitset>& highlight,
                              LabelStyle style = LabelStyle::Reduced,
                              const std::string& graph_name = "lattice") {
    std::vector<bool> red(lattice.size(), false);
    for (const Bitset& h : highlight) {
        auto idx = lattice.find_extent(h);
        if (!idx) throw std::invalid_argument("highlight set contains a non-extent");
        red[*idx] = true;
    }

    std::vector<std::string> attr_line(lattice.size()), obj_line(lattice.size());
    if (style == LabelStyle::Full) {
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            attr_line[i] = detail::join_names(ctx.attributes(), lattice[i].intent);
            obj_line[i] = detail::join_names(ctx.objects(), lattice[i].extent);
        }
    } else {
        // object concept = closure of {g}; attribute concept = extent of {m}
        for (std::size_t g = 0; g < ctx.object_count(); ++g) {
            ObjectSet single(ctx.object_count());
            single.set(g);
            auto idx = lattice.find_extent(ctx.closure_objects(single));
            if (idx) {
                if (!obj_line[*idx].empty()) obj_line[*idx] += ", ";
                obj_line[*idx] += ctx.object_name(g);
            }
        }
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
            auto idx = lattice.find_extent(ctx.column(m));
            if (idx) {
                if (!attr_line[*idx].empty()) attr_line[*idx] += ", ";
                attr_line[*idx] += ctx.attribute_name(m);
            }
        }
    }

    std::string out = "digraph " + graph_name + " {\n";
    out += "  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        std::string label = detail::dot_escape(attr_line[i]);
        label += "\\n";
        label += detail::dot_escape(obj_line[i]);
        out += "  c" + std::to_string(i) + " [label=\"" + label + "\"";
        if (red[i]) out += ", color=red";
        out += "];\n";
    }
    for (auto [lo, hi] : lattice.covers())
        out += "  c" + std::to_string(lo) + " -> c" + std::to_string(hi) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace fcaerr
