#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcaerr/closure_system.hpp"
#include "fcaerr/context.hpp"
#include "fcaerr/lattice.hpp"

namespace fcaerr {

/// A candidate scaling (σ, S) of a base context K. Whether it actually is a
/// scale-measure (every scale extent pulls back to an extent of K) is a
/// property checked by is_scale_measure; operations with a "verified"
/// precondition throw on violators.
struct ScaleMeasure {
    FormalContext base;
    FormalContext scale;
    ObjectMap map;
};

struct MeasureCheck {
    bool ok;
    /// One offending scale attribute when !ok.
    std::optional<std::size_t> witness;
};

/// Attribute criterion: (σ,S) is a scale-measure of K iff the preimage of
/// every attribute extent of S is closed in K. Linear in |M_S| closures, no
/// extent enumeration.
inline MeasureCheck is_scale_measure(const FormalContext& k, const FormalContext& s,
                                     const ObjectMap& sigma) {
    if (sigma.source_size() != k.object_count() || sigma.target_size() != s.object_count())
        throw std::invalid_argument("is_scale_measure: map does not fit the contexts");
    for (std::size_t m = 0; m < s.attribute_count(); ++m) {
        ObjectSet pre = sigma.preimage(s.column(m));
        if (!k.is_extent(pre)) return MeasureCheck{false, m};
    }
    return MeasureCheck{true, std::nullopt};
}

inline MeasureCheck is_scale_measure(const ScaleMeasure& sm) {
    return is_scale_measure(sm.base, sm.scale, sm.map);
}

/// σ⁻¹[Ext(S)] — the family of preimages of all scale extents, deduplicated.
/// Always a closure system on G_K: preimages commute with intersections and
/// Ext(S) is intersection-closed.
inline ClosureSystem reflected_extents(const FormalContext& k, const FormalContext& s,
                                       const ObjectMap& sigma,
                                       std::size_t cap = kDefaultConceptCap) {
    if (sigma.source_size() != k.object_count() || sigma.target_size() != s.object_count())
        throw std::invalid_argument("reflected_extents: map does not fit the contexts");
    ClosureSystem scale_extents = extents(s, cap);
    std::vector<Bitset> pre;
    pre.reserve(scale_extents.size());
    for (const Bitset& a : scale_extents.members()) pre.push_back(sigma.preimage(a));
    return ClosureSystem::unchecked(k.object_count(), std::move(pre));
}

inline ClosureSystem reflected_extents(const ScaleMeasure& sm, std::size_t cap = kDefaultConceptCap) {
    return reflected_extents(sm.base, sm.scale, sm.map, cap);
}

namespace detail {

inline void require_verified(const ScaleMeasure& sm, const char* who) {
    MeasureCheck c = is_scale_measure(sm);
    if (!c.ok)
        throw std::invalid_argument(std::string(who) + ": input is not a scale-measure (witness '" +
                                    sm.scale.attribute_name(*c.witness) + "')");
}

inline void require_same_base(const ScaleMeasure& a, const ScaleMeasure& b) {
    if (a.base.objects() != b.base.objects() || a.base.attributes() != b.base.attributes())
        throw std::invalid_argument("scale-measures compare only over the same base context");
}

}  // namespace detail

/// (σ,S) finer than (ψ,T): every extent reflected by T is reflected by S.
/// Both inputs must be verified scale-measures of the same base.
inline bool finer_than(const ScaleMeasure& fine, const ScaleMeasure& coarse,
                       std::size_t cap = kDefaultConceptCap) {
    detail::require_same_base(fine, coarse);
    detail::require_verified(fine, "finer_than");
    detail::require_verified(coarse, "finer_than");
    return reflected_extents(coarse, cap).is_subfamily_of(reflected_extents(fine, cap));
}

inline bool equivalent_measures(const ScaleMeasure& a, const ScaleMeasure& b,
                                std::size_t cap = kDefaultConceptCap) {
    return finer_than(a, b, cap) && finer_than(b, a, cap);
}

namespace detail {

inline std::string brace_list(const FormalContext& ctx, const Bitset& objset) {
    std::string name = "{";
    bool first = true;
    objset.for_each([&](std::size_t g) {
        if (!first) name += ",";
        name += ctx.object_name(g);
        first = false;
    });
    return name + "}";
}

/// Scale over G_K with one attribute per family member; identity map.
inline ScaleMeasure family_as_scale(const FormalContext& k, const std::vector<Bitset>& columns,
                                    const std::vector<std::string>& names) {
    std::vector<Bitset> rows(k.object_count(), Bitset(columns.size()));
    for (std::size_t m = 0; m < columns.size(); ++m)
        columns[m].for_each([&](std::size_t g) { rows[g].set(m); });
    FormalContext scale(k.objects(), names, std::move(rows));
    return ScaleMeasure{k, std::move(scale), ObjectMap::identity(k.object_count())};
}

}  // namespace detail

/// Canonical representation: an equivalent scale-measure over G_K whose
/// attributes are exactly the reflected extents (one column per member),
/// with the identity map.
inline ScaleMeasure canonical_representation(const FormalContext& k, const ScaleMeasure& sm,
                                             std::size_t cap = kDefaultConceptCap) {
    detail::require_verified(sm, "canonical_representation");
    ClosureSystem fam = reflected_extents(sm, cap);
    std::vector<std::string> names;
    names.reserve(fam.size());
    for (const Bitset& a : fam.members()) names.push_back(detail::brace_list(k, a));
    return detail::family_as_scale(k, fam.members(), names);
}

/// Conjunctive normal form: as the canonical representation, but each
/// attribute is labeled "∧{...}" with the member's intent in K (names in
/// context order) and its column is that conjunction's extent. For a verified
/// scale-measure the column equals the reflected extent itself.
inline ScaleMeasure conjunctive_normalform(const FormalContext& k, const ScaleMeasure& sm,
                                           std::size_t cap = kDefaultConceptCap) {
    detail::require_verified(sm, "conjunctive_normalform");
    ClosureSystem fam = reflected_extents(sm, cap);
    std::vector<std::string> names;
    std::vector<Bitset> cols;
    names.reserve(fam.size());
    cols.reserve(fam.size());
    for (const Bitset& a : fam.members()) {
        AttributeSet intent = k.derive_objects(a);
        std::string label = "∧{";
        bool first = true;
        intent.for_each([&](std::size_t m) {
            if (!first) label += ",";
            label += k.attribute_name(m);
            first = false;
        });
        label += "}";
        names.push_back(std::move(label));
        cols.push_back(k.derive_attributes(intent));
    }
    return detail::family_as_scale(k, cols, names);
}

/// Join of two closure systems in the lattice of all closure systems on the
/// ground set: the smallest closure system containing both.
inline ClosureSystem hierarchy_join(const ClosureSystem& a, const ClosureSystem& b) {
    if (a.ground_size() != b.ground_size())
        throw std::invalid_argument("hierarchy_join: ground set mismatch");
    std::vector<Bitset> all = a.members();
    all.insert(all.end(), b.members().begin(), b.members().end());
    return intersection_close(all, a.ground_size());
}

/// Least closure system whose join with `part` yields `full` again. Computed
/// as the intersection closure of the meet-irreducibles of `full` that are
/// missing from `part`: their closure joins with `part` to all of `full`, and
/// any competitor must contain each such irreducible (it is not a meet of
/// anything else), hence contains the closure.
inline ClosureSystem join_complement(const ClosureSystem& full, const ClosureSystem& part) {
    if (!part.is_subfamily_of(full))
        throw std::invalid_argument("join_complement: part is not a subfamily of full");
    std::vector<Bitset> gens;
    for (const Bitset& m : meet_irreducibles(full))
        if (!part.contains(m)) gens.push_back(m);
    return intersection_close(gens, full.ground_size());
}

}  // namespace fcaerr
