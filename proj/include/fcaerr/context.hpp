#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fcaerr/bitset.hpp"
#include "fcaerr/errors.hpp"

namespace fcaerr {

/// A formal context (G, M, I): named objects, named attributes and a binary
/// incidence relation. Immutable after construction and safe to share across
/// threads. The incidence is stored twice — packed rows per object and packed
/// columns per attribute — so both derivation operators run as word-parallel
/// intersections.
class FormalContext {
public:
    FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                  std::vector<Bitset> rows)
        : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
        if (objects_.empty()) throw std::invalid_argument("context needs at least one object");
        if (rows_.size() != objects_.size())
            throw std::invalid_argument("incidence row count does not match object count");
        for (const Bitset& r : rows_)
            if (r.size() != attributes_.size())
                throw std::invalid_argument("incidence row width does not match attribute count");
        index_names(objects_, object_index_, "object");
        index_names(attributes_, attribute_index_, "attribute");
        columns_.assign(attributes_.size(), Bitset(objects_.size()));
        for (std::size_t g = 0; g < rows_.size(); ++g)
            rows_[g].for_each([&](std::size_t m) { columns_[m].set(g); });
    }

    std::size_t object_count() const { return objects_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<std::string>& attributes() const { return attributes_; }

    const std::string& object_name(std::size_t g) const { return objects_[g]; }
    const std::string& attribute_name(std::size_t m) const { return attributes_[m]; }

    std::optional<std::size_t> object_index(std::string_view name) const {
        auto it = object_index_.find(std::string(name));
        if (it == object_index_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> attribute_index(std::string_view name) const {
        auto it = attribute_index_.find(std::string(name));
        if (it == attribute_index_.end()) return std::nullopt;
        return it->second;
    }

    /// Row of one object: its attribute set.
    const AttributeSet& row(std::size_t g) const { return rows_[g]; }
    /// Column of one attribute: its object set (the attribute extent).
    const ObjectSet& column(std::size_t m) const { return columns_[m]; }

    bool incident(std::size_t g, std::size_t m) const { return rows_[g].test(m); }

    std::size_t incidence_count() const {
        std::size_t n = 0;
        for (const Bitset& r : rows_) n += r.count();
        return n;
    }

    double density() const {
        if (attributes_.empty()) return 0.0;
        return static_cast<double>(incidence_count()) /
               (static_cast<double>(object_count()) * static_cast<double>(attribute_count()));
    }

    ObjectSet full_object_set() const { return Bitset::full(object_count()); }
    AttributeSet full_attribute_set() const { return Bitset::full(attribute_count()); }

    /// A ↦ A' — the attributes shared by every object of A. The empty set
    /// derives to all of M.
    AttributeSet derive_objects(const ObjectSet& a) const {
        if (a.size() != object_count()) throw std::invalid_argument("object set width mismatch");
        AttributeSet b = full_attribute_set();
        a.for_each([&](std::size_t g) { b &= rows_[g]; });
        return b;
    }

    /// B ↦ B' — the objects carrying every attribute of B.
    ObjectSet derive_attributes(const AttributeSet& b) const {
        if (b.size() != attribute_count()) throw std::invalid_argument("attribute set width mismatch");
        ObjectSet a = full_object_set();
        b.for_each([&](std::size_t m) { a &= columns_[m]; });
        return a;
    }

    ObjectSet closure_objects(const ObjectSet& a) const { return derive_attributes(derive_objects(a)); }

    AttributeSet closure_attributes(const AttributeSet& b) const {
        return derive_objects(derive_attributes(b));
    }

    bool is_extent(const ObjectSet& a) const { return closure_objects(a) == a; }

private:
    static void index_names(const std::vector<std::string>& names,
                            std::unordered_map<std::string, std::size_t>& index, const char* what) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (!index.emplace(names[i], i).second)
                throw std::invalid_argument(std::string("duplicate ") + what + " name: " + names[i]);
        }
    }

    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<Bitset> rows_;
    std::vector<Bitset> columns_;
    std::unordered_map<std::string, std::size_t> object_index_;
    std::unordered_map<std::string, std::size_t> attribute_index_;
};

/// Total map σ from the objects of one context into the objects of another,
/// by index.
class ObjectMap {
public:
    explicit ObjectMap(std::vector<std::size_t> images, std::size_t target_size)
        : images_(std::move(images)), target_size_(target_size) {
        for (std::size_t t : images_)
            if (t >= target_size_) throw std::invalid_argument("object map image out of range");
    }

    static ObjectMap identity(std::size_t n) {
        std::vector<std::size_t> im(n);
        for (std::size_t i = 0; i < n; ++i) im[i] = i;
        return ObjectMap(std::move(im), n);
    }

    /// Identity by object *name*: source object g maps to the target object
    /// with the same name. Throws when a name is missing in the target.
    static ObjectMap identity_by_name(const FormalContext& source, const FormalContext& target) {
        std::vector<std::size_t> im;
        im.reserve(source.object_count());
        for (const std::string& name : source.objects()) {
            auto t = target.object_index(name);
            if (!t)
                throw std::invalid_argument("object '" + name +
                                            "' has no counterpart in the scale context");
            im.push_back(*t);
        }
        return ObjectMap(std::move(im), target.object_count());
    }

    std::size_t source_size() const { return images_.size(); }
    std::size_t target_size() const { return target_size_; }
    std::size_t operator()(std::size_t g) const { return images_[g]; }

    /// σ⁻¹(A) for a target-side object set.
    ObjectSet preimage(const ObjectSet& target_set) const {
        if (target_set.size() != target_size_)
            throw std::invalid_argument("preimage argument width mismatch");
        ObjectSet out(images_.size());
        for (std::size_t g = 0; g < images_.size(); ++g)
            if (target_set.test(images_[g])) out.set(g);
        return out;
    }

private:
    std::vector<std::size_t> images_;
    std::size_t target_size_;
};

/// K₁ | K₂ — side-by-side merge of two contexts over the same objects (same
/// names, same order). Attribute name collisions are made disjoint by
/// suffixing "#1" / "#2".
inline FormalContext apposition(const FormalContext& k1, const FormalContext& k2) {
    if (k1.objects() != k2.objects())
        throw std::invalid_argument("apposition requires identical object lists");
    std::vector<std::string> attrs;
    attrs.reserve(k1.attribute_count() + k2.attribute_count());
    for (const std::string& a : k1.attributes())
        attrs.push_back(k2.attribute_index(a) ? a + "#1" : a);
    for (const std::string& a : k2.attributes())
        attrs.push_back(k1.attribute_index(a) ? a + "#2" : a);
    std::vector<Bitset> rows;
    rows.reserve(k1.object_count());
    for (std::size_t g = 0; g < k1.object_count(); ++g) {
        Bitset r(attrs.size());
        k1.row(g).for_each([&](std::size_t m) { r.set(m); });
        std::size_t off = k1.attribute_count();
        k2.row(g).for_each([&](std::size_t m) { r.set(off + m); });
        rows.push_back(std::move(r));
    }
    return FormalContext(k1.objects(), std::move(attrs), std::move(rows));
}

/// Restriction of the incidence to H × N.
inline FormalContext induced_subcontext(const FormalContext& ctx, const ObjectSet& objects,
                                        const AttributeSet& attributes) {
    if (objects.size() != ctx.object_count() || attributes.size() != ctx.attribute_count())
        throw std::invalid_argument("induced_subcontext: set width mismatch");
    std::vector<std::size_t> gsel = objects.indices();
    std::vector<std::size_t> msel = attributes.indices();
    if (gsel.empty()) throw std::invalid_argument("induced_subcontext: empty object selection");
    std::vector<std::string> names, attrs;
    for (std::size_t g : gsel) names.push_back(ctx.object_name(g));
    for (std::size_t m : msel) attrs.push_back(ctx.attribute_name(m));
    std::vector<Bitset> rows;
    rows.reserve(gsel.size());
    for (std::size_t g : gsel) {
        Bitset r(msel.size());
        for (std::size_t i = 0; i < msel.size(); ++i)
            if (ctx.incident(g, msel[i])) r.set(i);
        rows.push_back(std::move(r));
    }
    return FormalContext(std::move(names), std::move(attrs), std::move(rows));
}

/// The σ-induced context (G_K, M_S, I_σ): g is incident with m exactly when
/// σ(g) carries m in the scale.
inline FormalContext sigma_context(const FormalContext& k, const FormalContext& s,
                                   const ObjectMap& sigma) {
    if (sigma.source_size() != k.object_count() || sigma.target_size() != s.object_count())
        throw std::invalid_argument("sigma_context: map does not fit the contexts");
    std::vector<Bitset> rows;
    rows.reserve(k.object_count());
    for (std::size_t g = 0; g < k.object_count(); ++g) rows.push_back(s.row(sigma(g)));
    return FormalContext(k.objects(), s.attributes(), std::move(rows));
}

}  // namespace fcaerr
