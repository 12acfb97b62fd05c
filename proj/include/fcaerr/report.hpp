#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcaerr/bmf.hpp"
#include "fcaerr/conceptual_error.hpp"

namespace fcaerr {

/// One result-table row: base context stats, the approximated context group
/// (when a reconstruction is supplied) and the scale group. Counts that blew
/// the enumeration cap (or were skipped in ae-only mode) are absent and
/// render as "-".
struct ErrorReport {
    std::size_t objects = 0;
    std::size_t attributes = 0;
    double density = 0.0;
    std::optional<std::size_t> concepts;

    struct ApproxGroup {
        double frobenius = 0.0;
        double hamming_pct = 0.0;
        std::optional<std::size_t> concepts;
        std::size_t attribute_error = 0;
        std::optional<std::size_t> conceptual_error;
        std::vector<std::string> error_attributes;
    };
    std::optional<ApproxGroup> approx;

    struct ScaleGroup {
        std::size_t attributes = 0;
        double density = 0.0;
        std::optional<std::size_t> concepts;
        std::size_t attribute_error = 0;
        std::optional<std::size_t> conceptual_error;
        std::vector<std::string> error_attributes;
    };
    std::optional<ScaleGroup> scale;
};

namespace detail {

inline std::optional<std::size_t> capped_concept_count(const FormalContext& ctx, std::size_t cap) {
    try {
        return extents(ctx, cap).size();
    } catch (const CapExceededError&) {
        return std::nullopt;
    }
}

inline std::vector<std::string> error_attribute_names(const FormalContext& s,
                                                      const AttributeSet& errs) {
    std::vector<std::string> out;
    errs.for_each([&](std::size_t m) { out.push_back(s.attribute_name(m)); });
    return out;
}

}  // namespace detail

/// Assemble the full row. `k_approx`, when given, must have the same shape as
/// `k`; its errors are measured with the identity map. In ae_only mode no
/// extent enumeration happens at all.
inline ErrorReport error_report(const FormalContext& k, const FormalContext& s,
                                const ObjectMap& sigma,
                                const std::optional<FormalContext>& k_approx = std::nullopt,
                                std::size_t cap = kDefaultConceptCap, bool ae_only = false) {
    ErrorReport rep;
    rep.objects = k.object_count();
    rep.attributes = k.attribute_count();
    rep.density = k.density();
    if (!ae_only) rep.concepts = detail::capped_concept_count(k, cap);

    if (k_approx) {
        if (k_approx->object_count() != k.object_count() ||
            k_approx->attribute_count() != k.attribute_count())
            throw std::invalid_argument("error_report: approximation shape mismatch");
        ErrorReport::ApproxGroup g;
        g.frobenius = frobenius_error(k, *k_approx);
        g.hamming_pct = hamming_percent(k, *k_approx);
        if (!ae_only) g.concepts = detail::capped_concept_count(*k_approx, cap);
        ObjectMap id = ObjectMap::identity(k.object_count());
        ConceptualError ce = conceptual_scaling_error(k, *k_approx, id, cap, ae_only);
        g.attribute_error = ce.attribute_error();
        if (ce.ce_available) g.conceptual_error = ce.conceptual_error();
        g.error_attributes = detail::error_attribute_names(*k_approx, ce.attribute_errors);
        rep.approx = std::move(g);
    }

    ErrorReport::ScaleGroup sg;
    sg.attributes = s.attribute_count();
    sg.density = s.density();
    if (!ae_only) sg.concepts = detail::capped_concept_count(s, cap);
    ConceptualError ce = conceptual_scaling_error(k, s, sigma, cap, ae_only);
    sg.attribute_error = ce.attribute_error();
    if (ce.ce_available) sg.conceptual_error = ce.conceptual_error();
    sg.error_attributes = detail::error_attribute_names(s, ce.attribute_errors);
    rep.scale = std::move(sg);
    return rep;
}

namespace detail {

inline std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

inline std::string count_or_dash(const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
}

}  // namespace detail

inline nlohmann::json to_json(const ErrorReport& r) {
    nlohmann::json j;
    j["context"] = {{"objects", r.objects},
                    {"attributes", r.attributes},
                    {"density", r.density}};
    if (r.concepts)
        j["context"]["concepts"] = *r.concepts;
    else
        j["context"]["concepts"] = nullptr;
    if (r.approx) {
        nlohmann::json a;
        a["frobenius"] = r.approx->frobenius;
        a["hamming_pct"] = r.approx->hamming_pct;
        a["concepts"] = r.approx->concepts ? nlohmann::json(*r.approx->concepts) : nlohmann::json();
        a["attribute_error"] = r.approx->attribute_error;
        a["conceptual_error"] =
            r.approx->conceptual_error ? nlohmann::json(*r.approx->conceptual_error) : nlohmann::json();
        a["error_attributes"] = r.approx->error_attributes;
        j["approximation"] = std::move(a);
    }
    if (r.scale) {
        nlohmann::json s;
        s["attributes"] = r.scale->attributes;
        s["density"] = r.scale->density;
        s["concepts"] = r.scale->concepts ? nlohmann::json(*r.scale->concepts) : nlohmann::json();
        s["attribute_error"] = r.scale->attribute_error;
        s["conceptual_error"] =
            r.scale->conceptual_error ? nlohmann::json(*r.scale->conceptual_error) : nlohmann::json();
        s["error_attributes"] = r.scale->error_attributes;
        j["scale"] = std::move(s);
    }
    return j;
}

/// Aligned text table in the result-table column order. Density to 3
/// decimals, Frobenius to 2, H% to 1, errors as integers, capped cells "-".
inline std::string to_table(const ErrorReport& r) {
    using detail::count_or_dash;
    using detail::fixed;
    std::vector<std::pair<std::string, std::string>> cols;
    cols.emplace_back("|G|", std::to_string(r.objects));
    cols.emplace_back("|M|", std::to_string(r.attributes));
    cols.emplace_back("D", fixed(r.density, 3));
    cols.emplace_back("|B|", count_or_dash(r.concepts));
    if (r.approx) {
        cols.emplace_back("Frob", fixed(r.approx->frobenius, 2));
        cols.emplace_back("H%", fixed(r.approx->hamming_pct, 1));
        cols.emplace_back("|B~|", count_or_dash(r.approx->concepts));
        cols.emplace_back("AE~", std::to_string(r.approx->attribute_error));
        cols.emplace_back("CE~", count_or_dash(r.approx->conceptual_error));
    }
    if (r.scale) {
        cols.emplace_back("|M_S|", std::to_string(r.scale->attributes));
        cols.emplace_back("D_S", fixed(r.scale->density, 3));
        cols.emplace_back("|B_S|", count_or_dash(r.scale->concepts));
        cols.emplace_back("AE_S", std::to_string(r.scale->attribute_error));
        cols.emplace_back("CE_S", count_or_dash(r.scale->conceptual_error));
    }
    std::string head, body;
    for (const auto& [h, v] : cols) {
        std::size_t w = std::max(h.size(), v.size());
        head += std::string(w - h.size(), ' ') + h + "  ";
        body += std::string(w - v.size(), ' ') + v + "  ";
    }
    while (!head.empty() && head.back() == ' ') head.pop_back();
    while (!body.empty() && body.back() == ' ') body.pop_back();
    return head + "\n" + body + "\n";
}

}  // namespace fcaerr
