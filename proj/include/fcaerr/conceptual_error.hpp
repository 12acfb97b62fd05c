#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fcaerr/scale_measure.hpp"

namespace fcaerr {

/// The conceptual scaling error of a candidate scaling (σ,S) against K:
/// which reflected object sets are not closed in K, and which scale
/// attributes caused them. When the scale's extent enumeration exceeds the
/// cap, only the attribute errors are available (they never need an
/// enumeration); error_family/consistent_part are then absent.
struct ConceptualError {
    /// Preimages of scale extents that are not extents of K, canonical order.
    /// Never contains G. Populated only when ce_available.
    std::vector<ObjectSet> error_family;
    /// Reflected extents that are closed in K; always a closure system.
    std::optional<ClosureSystem> consistent_part;
    /// Scale attributes m with σ⁻¹(m') not closed in K, width |M_S|.
    AttributeSet attribute_errors;
    bool ce_available = false;

    std::size_t conceptual_error() const { return error_family.size(); }
    std::size_t attribute_error() const { return attribute_errors.count(); }
};

/// E = σ⁻¹[Ext(S)] \ Ext(K). Each member is tested by a single closure in K;
/// Ext(K) itself is never enumerated. With ae_only (or when the scale blows
/// the cap) the per-extent part is skipped and only attribute errors are
/// reported.
inline ConceptualError conceptual_scaling_error(const FormalContext& k, const FormalContext& s,
                                                const ObjectMap& sigma,
                                                std::size_t cap = kDefaultConceptCap,
                                                bool ae_only = false) {
    ConceptualError result{{}, std::nullopt, AttributeSet(s.attribute_count()), false};
    for (std::size_t m = 0; m < s.attribute_count(); ++m) {
        ObjectSet pre = sigma.preimage(s.column(m));
        if (!k.is_extent(pre)) result.attribute_errors.set(m);
    }
    if (ae_only) return result;
    std::optional<ClosureSystem> reflected;
    try {
        reflected = reflected_extents(k, s, sigma, cap);
    } catch (const CapExceededError&) {
        return result;  // AE-only fallback
    }
    std::vector<Bitset> consistent;
    for (const Bitset& a : reflected->members()) {
        if (k.is_extent(a))
            consistent.push_back(a);
        else
            result.error_family.push_back(a);
    }
    result.consistent_part = ClosureSystem::unchecked(k.object_count(), std::move(consistent));
    result.ce_available = true;
    return result;
}

/// The consistent part σ⁻¹[Ext(S)]|_Ext(K) as a verified scale-measure of K,
/// in conjunctive normal form over G_K.
inline ScaleMeasure consistent_part_measure(const FormalContext& k, const FormalContext& s,
                                            const ObjectMap& sigma,
                                            std::size_t cap = kDefaultConceptCap) {
    ConceptualError err = conceptual_scaling_error(k, s, sigma, cap);
    if (!err.ce_available) throw CapExceededError(cap);
    std::vector<std::string> names;
    std::vector<Bitset> cols;
    for (const Bitset& a : err.consistent_part->members()) {
        AttributeSet intent = k.derive_objects(a);
        std::string label = "∧{";
        bool first = true;
        intent.for_each([&](std::size_t m) {
            if (!first) label += ",";
            label += k.attribute_name(m);
            first = false;
        });
        names.push_back(label + "}");
        cols.push_back(a);
    }
    return detail::family_as_scale(k, cols, names);
}

struct AttributeSplit {
    /// S restricted to the consistent attributes O; always verifies.
    ScaleMeasure consistent;
    /// S restricted to M_S \ O, for separate lattice inspection.
    FormalContext inconsistent;
    /// O as a mask over M_S.
    AttributeSet consistent_attributes;
};

/// Split S by consistent attributes (polynomial in |S| and |K|, no
/// enumeration anywhere).
inline AttributeSplit attribute_split(const FormalContext& k, const FormalContext& s,
                                      const ObjectMap& sigma) {
    AttributeSet good(s.attribute_count());
    for (std::size_t m = 0; m < s.attribute_count(); ++m)
        if (k.is_extent(sigma.preimage(s.column(m)))) good.set(m);
    ObjectSet all_objects = Bitset::full(s.object_count());
    FormalContext consistent_scale = induced_subcontext(s, all_objects, good);
    FormalContext inconsistent_scale = induced_subcontext(s, all_objects, good.complement());
    return AttributeSplit{ScaleMeasure{k, std::move(consistent_scale), sigma},
                          std::move(inconsistent_scale), std::move(good)};
}

/// A = K | (G_K, M_S, I_σ): both (σ,S) and (id,K) are scale-measures of this
/// apposition, and Ext(A) is the hierarchy join of Ext(K) with the reflected
/// extents.
inline FormalContext apposition_measure(const FormalContext& k, const FormalContext& s,
                                        const ObjectMap& sigma) {
    return apposition(k, sigma_context(k, s, sigma));
}

}  // namespace fcaerr
