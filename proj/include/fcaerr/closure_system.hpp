#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "fcaerr/bitset.hpp"
#include "fcaerr/errors.hpp"

namespace fcaerr {

/// A closure system on a ground set of known size: duplicate-free family of
/// object sets that contains the ground set and is closed under pairwise
/// intersection. Members are kept in canonical order (ascending cardinality,
/// then first differing index) so output is reproducible.
class ClosureSystem {
public:
    /// Validating constructor; throws when the family is not a closure system.
    ClosureSystem(std::size_t ground_size, std::vector<Bitset> members)
        : ClosureSystem(ground_size, std::move(members), Checked{}) {
        for (std::size_t i = 0; i < members_.size(); ++i)
            for (std::size_t j = i + 1; j < members_.size(); ++j)
                if (!contains(members_[i] & members_[j]))
                    throw std::invalid_argument("family is not intersection-closed");
    }

    /// Fast path for callers that guarantee closedness (enumeration output,
    /// intersection_close). Still canonicalizes and inserts the ground set.
    static ClosureSystem unchecked(std::size_t ground_size, std::vector<Bitset> members) {
        return ClosureSystem(ground_size, std::move(members), Checked{});
    }

    std::size_t ground_size() const { return ground_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<Bitset>& members() const { return members_; }
    const Bitset& operator[](std::size_t i) const { return members_[i]; }

    bool contains(const Bitset& s) const { return lookup_.count(s) > 0; }

    bool is_subfamily_of(const ClosureSystem& o) const {
        if (ground_ != o.ground_) return false;
        for (const Bitset& m : members_)
            if (!o.contains(m)) return false;
        return true;
    }

    bool operator==(const ClosureSystem& o) const {
        return ground_ == o.ground_ && members_ == o.members_;
    }

private:
    struct Checked {};

    ClosureSystem(std::size_t ground_size, std::vector<Bitset> members, Checked)
        : ground_(ground_size) {
        for (Bitset& m : members) {
            if (m.size() != ground_)
                throw std::invalid_argument("closure system member width mismatch");
            if (lookup_.insert(m).second) members_.push_back(std::move(m));
        }
        Bitset full = Bitset::full(ground_);
        if (lookup_.insert(full).second) members_.push_back(std::move(full));
        std::sort(members_.begin(), members_.end(), CanonicalLess{});
    }

    std::size_t ground_;
    std::vector<Bitset> members_;
    std::unordered_set<Bitset, BitsetHash> lookup_;
};

/// Smallest intersection-closed family containing the inputs and the ground
/// set. Worklist closure: every member is an intersection of inputs, so each
/// new member only needs to be met with the generators.
inline ClosureSystem intersection_close(std::span<const Bitset> family, std::size_t ground_size) {
    std::vector<Bitset> gens;
    {
        std::unordered_set<Bitset, BitsetHash> seen;
        for (const Bitset& s : family) {
            if (s.size() != ground_size)
                throw std::invalid_argument("intersection_close: member width mismatch");
            if (seen.insert(s).second) gens.push_back(s);
        }
    }
    std::unordered_set<Bitset, BitsetHash> fam;
    std::vector<Bitset> queue;
    Bitset full = Bitset::full(ground_size);
    fam.insert(full);
    queue.push_back(full);
    while (!queue.empty()) {
        Bitset x = std::move(queue.back());
        queue.pop_back();
        for (const Bitset& c : gens) {
            Bitset y = x & c;
            if (fam.insert(y).second) queue.push_back(y);
        }
    }
    return ClosureSystem::unchecked(ground_size, std::vector<Bitset>(fam.begin(), fam.end()));
}

inline ClosureSystem intersection_close(const std::vector<Bitset>& family, std::size_t ground_size) {
    return intersection_close(std::span<const Bitset>(family), ground_size);
}

/// Members that are not intersections of strictly larger members. The ground
/// set is never meet-irreducible (it is the empty intersection). Every member
/// of a finite closure system is a meet of these, so they regenerate the
/// system under intersection_close.
inline std::vector<Bitset> meet_irreducibles(const ClosureSystem& cs) {
    std::vector<Bitset> out;
    Bitset full = Bitset::full(cs.ground_size());
    for (const Bitset& x : cs.members()) {
        if (x == full) continue;
        Bitset meet = full;
        for (const Bitset& y : cs.members())
            if (!(y == x) && x.is_subset_of(y)) meet &= y;
        if (!(meet == x)) out.push_back(x);
    }
    return out;
}

}  // namespace fcaerr
