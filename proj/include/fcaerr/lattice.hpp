#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fcaerr/closure_system.hpp"
#include "fcaerr/context.hpp"
#include "fcaerr/errors.hpp"

namespace fcaerr {

struct Concept {
    ObjectSet extent;
    AttributeSet intent;
};

namespace detail {

// Close-by-One over objects in index order. Each recursion extends the
// current extent by one object and closes; the canonicity test (closure may
// not introduce objects below the added one) guarantees every extent is
// produced exactly once. Output is the DFS order, deterministic by
// construction.
template <typename Sink>
void close_by_one(const FormalContext& ctx, std::size_t cap, Sink&& sink) {
    struct Rec {
        const FormalContext& ctx;
        std::size_t cap;
        Sink& sink;
        std::size_t produced = 0;

        void emit(const ObjectSet& extent, const AttributeSet& intent) {
            if (++produced > cap) throw CapExceededError(cap);
            sink(extent, intent);
        }

        void descend(const ObjectSet& extent, const AttributeSet& intent, std::size_t next) {
            emit(extent, intent);
            for (std::size_t j = next; j < ctx.object_count(); ++j) {
                if (extent.test(j)) continue;
                AttributeSet d = intent & ctx.row(j);
                ObjectSet c = ctx.derive_attributes(d);
                if (c.equal_below(extent, j)) descend(c, d, j + 1);
            }
        }
    };
    Rec rec{ctx, cap, sink};
    AttributeSet top_intent = ctx.derive_objects(ObjectSet(ctx.object_count()));
    ObjectSet bottom = ctx.derive_attributes(top_intent);
    // Start from the closure of the empty object set; its intent is M.
    AttributeSet bottom_intent = ctx.derive_objects(bottom);
    rec.descend(bottom, bottom_intent, 0);
}

}  // namespace detail

/// All extents of the context, i.e. the fixpoints of the object closure
/// operator.
inline ClosureSystem extents(const FormalContext& ctx, std::size_t cap = kDefaultConceptCap) {
    std::vector<Bitset> out;
    detail::close_by_one(ctx, cap, [&](const ObjectSet& e, const AttributeSet&) { out.push_back(e); });
    return ClosureSystem::unchecked(ctx.object_count(), std::move(out));
}

/// Concepts in canonical extent order plus the cover relation (transitive
/// reduction of extent inclusion) as (lower, upper) index pairs.
class ConceptLattice {
public:
    ConceptLattice(std::vector<Concept> concepts, std::vector<std::pair<std::size_t, std::size_t>> covers)
        : concepts_(std::move(concepts)), covers_(std::move(covers)) {}

    std::size_t size() const { return concepts_.size(); }
    const std::vector<Concept>& concepts() const { return concepts_; }
    const Concept& operator[](std::size_t i) const { return concepts_[i]; }
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

    std::optional<std::size_t> find_extent(const Bitset& extent) const {
        for (std::size_t i = 0; i < concepts_.size(); ++i)
            if (concepts_[i].extent == extent) return i;
        return std::nullopt;
    }

private:
    std::vector<Concept> concepts_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

inline ConceptLattice concepts(const FormalContext& ctx, std::size_t cap = kDefaultConceptCap) {
    std::vector<Concept> cs;
    detail::close_by_one(ctx, cap, [&](const ObjectSet& e, const AttributeSet& i) {
        cs.push_back(Concept{e, i});
    });
    std::sort(cs.begin(), cs.end(),
              [](const Concept& a, const Concept& b) { return a.extent.canonical_less(b.extent); });

    // Cover candidates live in strictly larger extents; scanning by ascending
    // size and keeping only supersets not above an already kept cover yields
    // the transitive reduction without the all-pairs cube.
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    std::vector<std::size_t> kept;
    for (std::size_t lo = 0; lo < cs.size(); ++lo) {
        kept.clear();
        std::size_t lo_card = cs[lo].extent.count();
        for (std::size_t hi = lo + 1; hi < cs.size(); ++hi) {
            if (cs[hi].extent.count() == lo_card) continue;  // canonical order: same size ⇒ incomparable
            if (!cs[lo].extent.is_subset_of(cs[hi].extent)) continue;
            bool dominated = false;
            for (std::size_t k : kept) {
                if (cs[k].extent.is_subset_of(cs[hi].extent)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) {
                kept.push_back(hi);
                covers.emplace_back(lo, hi);
            }
        }
    }
    return ConceptLattice(std::move(cs), std::move(covers));
}

}  // namespace fcaerr
