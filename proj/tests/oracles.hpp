#pragma once

// Brute-force reference implementations for property tests. Everything here
// works on plain uint32_t masks and never calls into the library, so the two
// sides of every equivalence check stay independent.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fcaerr/context.hpp"

namespace oracle {

struct MiniContext {
    int ng = 0, nm = 0;
    std::vector<std::uint32_t> rows;  // rows[g] = attribute mask
};

inline std::uint32_t derive_objects(const MiniContext& c, std::uint32_t a) {
    std::uint32_t b = (1u << c.nm) - 1;
    for (int g = 0; g < c.ng; ++g)
        if (a >> g & 1) b &= c.rows[g];
    return b;
}

inline std::uint32_t derive_attributes(const MiniContext& c, std::uint32_t b) {
    std::uint32_t a = (1u << c.ng) - 1;
    for (int g = 0; g < c.ng; ++g)
        if ((c.rows[g] & b) != b) a &= ~(1u << g);
    return a;
}

inline std::uint32_t closure_objects(const MiniContext& c, std::uint32_t a) {
    return derive_attributes(c, derive_objects(c, a));
}

/// {A'' | A subset of G} by full powerset sweep.
inline std::set<std::uint32_t> extents_bruteforce(const MiniContext& c) {
    std::set<std::uint32_t> out;
    for (std::uint32_t a = 0; a < (1u << c.ng); ++a) out.insert(closure_objects(c, a));
    return out;
}

/// Fixpoint intersection closure, including the ground set.
inline std::set<std::uint32_t> iclose(std::set<std::uint32_t> family, int ng) {
    family.insert((1u << ng) - 1);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::uint32_t> items(family.begin(), family.end());
        for (std::size_t i = 0; i < items.size(); ++i)
            for (std::size_t j = i + 1; j < items.size(); ++j)
                if (family.insert(items[i] & items[j]).second) changed = true;
    }
    return family;
}

inline bool is_intersection_closed(const std::set<std::uint32_t>& family) {
    for (std::uint32_t a : family)
        for (std::uint32_t b : family)
            if (!family.count(a & b)) return false;
    return true;
}

inline std::uint32_t preimage(const std::vector<int>& sigma, std::uint32_t target_set) {
    std::uint32_t out = 0;
    for (std::size_t g = 0; g < sigma.size(); ++g)
        if (target_set >> sigma[g] & 1) out |= 1u << g;
    return out;
}

/// sigma^-1[Ext(S)] by brute force.
inline std::set<std::uint32_t> reflected_bruteforce(const MiniContext& s,
                                                    const std::vector<int>& sigma) {
    std::set<std::uint32_t> out;
    for (std::uint32_t ext : extents_bruteforce(s)) out.insert(preimage(sigma, ext));
    return out;
}

/// Definition-level scale-measure check: the preimage of every scale extent
/// must be closed in k.
inline bool is_measure_def1(const MiniContext& k, const MiniContext& s,
                            const std::vector<int>& sigma) {
    for (std::uint32_t pre : reflected_bruteforce(s, sigma))
        if (closure_objects(k, pre) != pre) return false;
    return true;
}

inline MiniContext random_context(std::mt19937& rng, int max_g = 6, int max_m = 6) {
    MiniContext c;
    c.ng = 1 + static_cast<int>(rng() % max_g);
    c.nm = static_cast<int>(rng() % (max_m + 1));
    std::uniform_int_distribution<int> density(20, 80);
    int pct = density(rng);
    for (int g = 0; g < c.ng; ++g) {
        std::uint32_t row = 0;
        for (int m = 0; m < c.nm; ++m)
            if (static_cast<int>(rng() % 100) < pct) row |= 1u << m;
        c.rows.push_back(row);
    }
    return c;
}

inline std::vector<int> random_map(std::mt19937& rng, int source, int target) {
    std::vector<int> sigma(source);
    for (int& v : sigma) v = static_cast<int>(rng() % target);
    return sigma;
}

// --- bridges between mask world and library types ---

inline fcaerr::FormalContext to_context(const MiniContext& c, const std::string& prefix = "") {
    std::vector<std::string> objs, attrs;
    for (int g = 0; g < c.ng; ++g) objs.push_back(prefix + "g" + std::to_string(g));
    for (int m = 0; m < c.nm; ++m) attrs.push_back(prefix + "m" + std::to_string(m));
    std::vector<fcaerr::Bitset> rows;
    for (int g = 0; g < c.ng; ++g) {
        fcaerr::Bitset r(c.nm);
        for (int m = 0; m < c.nm; ++m)
            if (c.rows[g] >> m & 1) r.set(m);
        rows.push_back(std::move(r));
    }
    return fcaerr::FormalContext(std::move(objs), std::move(attrs), std::move(rows));
}

inline fcaerr::Bitset to_bitset(std::uint32_t mask, std::size_t width) {
    fcaerr::Bitset b(width);
    for (std::size_t i = 0; i < width; ++i)
        if (mask >> i & 1) b.set(i);
    return b;
}

inline std::uint32_t to_mask(const fcaerr::Bitset& b) {
    std::uint32_t m = 0;
    b.for_each([&](std::size_t i) { m |= 1u << i; });
    return m;
}

inline std::set<std::uint32_t> to_masks(const std::vector<fcaerr::Bitset>& family) {
    std::set<std::uint32_t> out;
    for (const fcaerr::Bitset& b : family) out.insert(to_mask(b));
    return out;
}

}  // namespace oracle
