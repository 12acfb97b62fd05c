#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace fcaerr {

/// Fixed-width dynamic bit vector. Object sets and attribute sets are both
/// stored this way, indexed against the owning context's object/attribute
/// order; the width is part of the value and all binary operations require
/// matching widths.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(std::size_t bits, bool value = false)
        : size_(bits), words_(word_count(bits), value ? ~std::uint64_t{0} : 0) {
        trim();
    }

    static Bitset full(std::size_t bits) { return Bitset(bits, true); }

    static Bitset of(std::size_t bits, std::initializer_list<std::size_t> indices) {
        Bitset b(bits);
        for (std::size_t i : indices) b.set(i);
        return b;
    }

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        assert(i < size_);
        return words_[i >> 6] >> (i & 63) & 1u;
    }

    void set(std::size_t i) {
        assert(i < size_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        assert(i < size_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void set(std::size_t i, bool value) { value ? set(i) : reset(i); }

    std::size_t count() const {
        std::size_t n = 0;
        for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool none() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool all() const { return count() == size_; }

    Bitset& operator&=(const Bitset& o) {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// Set difference.
    Bitset& operator-=(const Bitset& o) {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    Bitset complement() const {
        Bitset r(size_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool is_subset_of(const Bitset& o) const {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// True when the bits below `limit` coincide; the Close-by-One
    /// canonicity test.
    bool equal_below(const Bitset& o, std::size_t limit) const {
        check_width(o);
        std::size_t full_words = limit >> 6;
        for (std::size_t i = 0; i < full_words; ++i)
            if (words_[i] != o.words_[i]) return false;
        std::size_t rest = limit & 63;
        if (rest) {
            std::uint64_t mask = (std::uint64_t{1} << rest) - 1;
            if ((words_[full_words] ^ o.words_[full_words]) & mask) return false;
        }
        return true;
    }

    bool operator==(const Bitset& o) const { return size_ == o.size_ && words_ == o.words_; }

    /// Canonical family order: ascending cardinality, ties broken so that the
    /// set owning the lowest differing index comes first. Deterministic and
    /// stable across platforms; used everywhere set families are serialized.
    bool canonical_less(const Bitset& o) const {
        check_width(o);
        std::size_t ca = count(), cb = o.count();
        if (ca != cb) return ca < cb;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t d = words_[i] ^ o.words_[i];
            if (d) return words_[i] >> std::countr_zero(d) & 1u;
        }
        return false;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                fn(static_cast<std::size_t>(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
        for (std::uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

private:
    static std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

    void check_width(const Bitset& o) const {
        if (size_ != o.size_) throw std::invalid_argument("bitset width mismatch");
    }

    void trim() {
        if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

using ObjectSet = Bitset;
using AttributeSet = Bitset;

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

struct CanonicalLess {
    bool operator()(const Bitset& a, const Bitset& b) const { return a.canonical_less(b); }
};

}  // namespace fcaerr
