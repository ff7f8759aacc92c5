#pragma once

// Finite categories as explicit object/morphism tables, functors between
// them, Set-valued functors and natural transformations.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fincoend/error.hpp"

namespace fincoend {

using Index = std::size_t;

// Caps shared by every exhaustive enumeration in the library.
struct Limits {
    std::size_t set_cap = 4;
    std::size_t budget = 1'000'000;
};

struct Morphism {
    std::string id;
    Index src = 0;
    Index dst = 0;

    friend bool operator==(const Morphism&, const Morphism&) = default;
};

enum class Law { none, identity, associativity, closure, functoriality, naturality };

inline const char* law_name(Law law) {
    switch (law) {
        case Law::none: return "none";
        case Law::identity: return "identity";
        case Law::associativity: return "associativity";
        case Law::closure: return "closure";
        case Law::functoriality: return "functoriality";
        case Law::naturality: return "naturality";
    }
    return "unknown";
}

// Outcome of a law check: either ok, or the first violated law together
// with the identifiers that witness it.
struct ValidationReport {
    Law violated = Law::none;
    std::string message;
    std::vector<std::string> witnesses;

    bool ok() const { return violated == Law::none; }

    static ValidationReport pass() { return {}; }
    static ValidationReport fail(Law law, std::string message, std::vector<std::string> witnesses) {
        return {law, std::move(message), std::move(witnesses)};
    }
};

class FinCat;
using CatPtr = std::shared_ptr<const FinCat>;

class FinCat {
public:
    class Builder;

    FinCat() = default;

    Index object_count() const { return objects_.size(); }
    Index morphism_count() const { return morphisms_.size(); }

    const std::string& object_id(Index x) const { return objects_.at(x); }
    const std::vector<std::string>& object_ids() const { return objects_; }
    const Morphism& morphism(Index f) const { return morphisms_.at(f); }
    const std::vector<Morphism>& morphisms() const { return morphisms_; }
    const std::string& morphism_id(Index f) const { return morphisms_.at(f).id; }
    Index src(Index f) const { return morphisms_.at(f).src; }
    Index dst(Index f) const { return morphisms_.at(f).dst; }
    Index identity(Index x) const { return identity_.at(x); }
    bool is_identity(Index f) const { return identity_.at(src(f)) == f; }

    std::optional<Index> find_object(std::string_view id) const {
        auto it = object_index_.find(std::string(id));
        if (it == object_index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<Index> find_morphism(std::string_view id) const {
        auto it = morphism_index_.find(std::string(id));
        if (it == morphism_index_.end()) return std::nullopt;
        return it->second;
    }
    Index object(std::string_view id) const {
        if (auto x = find_object(id)) return *x;
        throw Error("unknown object '" + std::string(id) + "'");
    }
    Index morphism_index(std::string_view id) const {
        if (auto f = find_morphism(id)) return *f;
        throw Error("unknown morphism '" + std::string(id) + "'");
    }

    // g ∘ f, if the table defines it.
    std::optional<Index> try_compose(Index g, Index f) const {
        const auto& row = compose_.at(g);
        auto it = std::lower_bound(row.begin(), row.end(), std::pair<Index, Index>{f, 0},
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        if (it == row.end() || it->first != f) return std::nullopt;
        return it->second;
    }
    Index compose(Index g, Index f) const {
        if (auto gf = try_compose(g, f)) return *gf;
        throw Error("composition of '" + morphism_id(g) + "' after '" + morphism_id(f) +
                    "' is not defined");
    }

    // Entries (f, g∘f) defined for a fixed g, sorted by f.
    const std::vector<std::pair<Index, Index>>& composites_after(Index g) const {
        return compose_.at(g);
    }

    const std::vector<Index>& outgoing(Index x) const { return out_.at(x); }
    const std::vector<Index>& incoming(Index x) const { return in_.at(x); }

    std::vector<Index> hom(Index x, Index y) const {
        std::vector<Index> result;
        for (Index f : out_.at(x))
            if (dst(f) == y) result.push_back(f);
        return result;
    }

    friend bool operator==(const FinCat& a, const FinCat& b) {
        return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ &&
               a.identity_ == b.identity_ && a.compose_ == b.compose_;
    }

    static FinCat opposite_of(const FinCat& c) {
        FinCat op;
        op.objects_ = c.objects_;
        op.object_index_ = c.object_index_;
        op.morphism_index_ = c.morphism_index_;
        op.identity_ = c.identity_;
        op.morphisms_ = c.morphisms_;
        for (auto& m : op.morphisms_) std::swap(m.src, m.dst);
        op.out_ = c.in_;
        op.in_ = c.out_;
        op.compose_.assign(c.compose_.size(), {});
        for (Index g = 0; g < c.compose_.size(); ++g)
            for (const auto& [f, gf] : c.compose_[g]) op.compose_[f].emplace_back(g, gf);
        for (auto& row : op.compose_) std::sort(row.begin(), row.end());
        return op;
    }

    static FinCat product_of(const FinCat& c, const FinCat& d) {
        FinCat p;
        const Index nd = d.object_count(), md = d.morphism_count();
        for (Index x = 0; x < c.object_count(); ++x)
            for (Index y = 0; y < nd; ++y) {
                p.object_index_.emplace(pair_id_(c.objects_[x], d.objects_[y]), p.objects_.size());
                p.objects_.push_back(pair_id_(c.objects_[x], d.objects_[y]));
            }
        p.out_.assign(p.objects_.size(), {});
        p.in_.assign(p.objects_.size(), {});
        for (Index f = 0; f < c.morphism_count(); ++f)
            for (Index g = 0; g < md; ++g) {
                Index id = p.morphisms_.size();
                Morphism m{pair_id_(c.morphisms_[f].id, d.morphisms_[g].id),
                           c.morphisms_[f].src * nd + d.morphisms_[g].src,
                           c.morphisms_[f].dst * nd + d.morphisms_[g].dst};
                p.morphism_index_.emplace(m.id, id);
                p.out_[m.src].push_back(id);
                p.in_[m.dst].push_back(id);
                p.morphisms_.push_back(std::move(m));
            }
        p.identity_.resize(p.objects_.size());
        for (Index x = 0; x < c.object_count(); ++x)
            for (Index y = 0; y < nd; ++y) p.identity_[x * nd + y] = c.identity_[x] * md + d.identity_[y];
        p.compose_.assign(p.morphisms_.size(), {});
        for (Index g1 = 0; g1 < c.morphism_count(); ++g1)
            for (const auto& [f1, h1] : c.compose_[g1])
                for (Index g2 = 0; g2 < md; ++g2)
                    for (const auto& [f2, h2] : d.compose_[g2])
                        p.compose_[g1 * md + g2].emplace_back(f1 * md + f2, h1 * md + h2);
        for (auto& row : p.compose_) std::sort(row.begin(), row.end());
        return p;
    }

private:
    static std::string pair_id_(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<Index> identity_;
    std::vector<std::vector<std::pair<Index, Index>>> compose_;
    std::unordered_map<std::string, Index> object_index_;
    std::unordered_map<std::string, Index> morphism_index_;
    std::vector<std::vector<Index>> out_;
    std::vector<std::vector<Index>> in_;
};

// Incremental construction of a FinCat. Every object gets an identity
// morphism; compositions involving identities are synthesized in build()
// unless they were set explicitly (which is how corrupted tables for
// validation tests are produced).
class FinCat::Builder {
public:
    // Adds an object together with its identity morphism "id_<object>".
    Index add_object(const std::string& id) { return add_object(id, "id_" + id); }

    Index add_object(const std::string& id, const std::string& identity_id) {
        Index x = add_bare_object(id);
        set_identity(x, add_morphism(identity_id, x, x));
        return x;
    }

    // Object whose identity is supplied later with set_identity.
    Index add_bare_object(const std::string& id) {
        if (cat_.object_index_.count(id)) throw Error("duplicate object '" + id + "'");
        Index x = cat_.objects_.size();
        cat_.object_index_.emplace(id, x);
        cat_.objects_.push_back(id);
        cat_.out_.emplace_back();
        cat_.in_.emplace_back();
        cat_.identity_.push_back(unset_);
        return x;
    }

    void set_identity(Index x, Index f) { cat_.identity_.at(x) = f; }

    Index add_morphism(const std::string& id, Index src, Index dst) {
        if (src >= cat_.objects_.size() || dst >= cat_.objects_.size())
            throw Error("morphism '" + id + "' references an unknown object");
        if (cat_.morphism_index_.count(id)) throw Error("duplicate morphism '" + id + "'");
        Index f = cat_.morphisms_.size();
        cat_.morphism_index_.emplace(id, f);
        cat_.morphisms_.push_back({id, src, dst});
        cat_.compose_.emplace_back();
        cat_.out_[src].push_back(f);
        cat_.in_[dst].push_back(f);
        return f;
    }

    void set_compose(Index g, Index f, Index gf) {
        Index n = cat_.morphisms_.size();
        if (g >= n || f >= n || gf >= n) throw Error("composition references an unknown morphism");
        cat_.compose_[g].emplace_back(f, gf);
    }

    Index object_count() const { return cat_.objects_.size(); }
    Index morphism_count() const { return cat_.morphisms_.size(); }
    Index identity(Index x) const { return cat_.identity_.at(x); }
    Index src(Index f) const { return cat_.morphisms_.at(f).src; }
    Index dst(Index f) const { return cat_.morphisms_.at(f).dst; }
    const std::string& object_id(Index x) const { return cat_.objects_.at(x); }
    std::optional<Index> find_morphism(const std::string& id) const {
        auto it = cat_.morphism_index_.find(id);
        if (it == cat_.morphism_index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<Index> find_object(const std::string& id) const {
        auto it = cat_.object_index_.find(id);
        if (it == cat_.object_index_.end()) return std::nullopt;
        return it->second;
    }

    // Sorts the composition rows and, unless disabled, fills in every
    // composite with an identity that was not set explicitly.
    FinCat build(bool synthesize_identity_laws = true) && {
        for (Index x = 0; x < cat_.identity_.size(); ++x)
            if (cat_.identity_[x] == unset_) throw Error("object '" + cat_.objects_[x] + "' has no identity");
        auto key_less = [](const auto& a, const auto& b) { return a.first < b.first; };
        for (auto& row : cat_.compose_) {
            std::sort(row.begin(), row.end(), key_less);
            auto dup = std::adjacent_find(row.begin(), row.end(),
                                          [](const auto& a, const auto& b) { return a.first == b.first; });
            if (dup != row.end()) throw Error("composition defined twice for one pair");
        }
        if (synthesize_identity_laws) {
            std::vector<std::vector<std::pair<Index, Index>>> extra(cat_.compose_.size());
            auto defined = [&](Index g, Index h) {
                const auto& row = cat_.compose_[g];
                auto it = std::lower_bound(row.begin(), row.end(), std::pair<Index, Index>{h, 0}, key_less);
                if (it != row.end() && it->first == h) return true;
                return std::any_of(extra[g].begin(), extra[g].end(), [&](const auto& e) { return e.first == h; });
            };
            for (Index f = 0; f < cat_.morphisms_.size(); ++f) {
                Index left = cat_.identity_[cat_.morphisms_[f].dst];
                Index right = cat_.identity_[cat_.morphisms_[f].src];
                if (!defined(left, f)) extra[left].emplace_back(f, f);
                if (!defined(f, right)) extra[f].emplace_back(right, f);
            }
            for (Index g = 0; g < extra.size(); ++g) {
                if (extra[g].empty()) continue;
                auto& row = cat_.compose_[g];
                row.insert(row.end(), extra[g].begin(), extra[g].end());
                std::sort(row.begin(), row.end(), key_less);
            }
        }
        return std::move(cat_);
    }

private:
    static constexpr Index unset_ = static_cast<Index>(-1);
    FinCat cat_;
};

inline ValidationReport validate_category(const FinCat& c) {
    for (Index x = 0; x < c.object_count(); ++x) {
        Index i = c.identity(x);
        if (c.src(i) != x || c.dst(i) != x)
            return ValidationReport::fail(Law::identity, "identity is not an endomorphism",
                                          {c.object_id(x), c.morphism_id(i)});
    }
    // Identity laws first, so that a redirected identity composite is
    // reported as such rather than as a typing error.
    for (Index f = 0; f < c.morphism_count(); ++f) {
        Index left = c.identity(c.dst(f));
        Index right = c.identity(c.src(f));
        auto l = c.try_compose(left, f);
        auto r = c.try_compose(f, right);
        if (!l || !r)
            return ValidationReport::fail(Law::closure, "composite with an identity is undefined",
                                          {c.morphism_id(f)});
        if (*l != f)
            return ValidationReport::fail(Law::identity, "id_y o f != f",
                                          {c.morphism_id(f), c.morphism_id(left), c.morphism_id(*l)});
        if (*r != f)
            return ValidationReport::fail(Law::identity, "f o id_x != f",
                                          {c.morphism_id(f), c.morphism_id(right), c.morphism_id(*r)});
    }
    for (Index g = 0; g < c.morphism_count(); ++g) {
        const auto& row = c.composites_after(g);
        for (const auto& [f, gf] : row) {
            if (c.dst(f) != c.src(g))
                return ValidationReport::fail(Law::closure, "composition defined on a non-composable pair",
                                              {c.morphism_id(g), c.morphism_id(f)});
            if (c.src(gf) != c.src(f) || c.dst(gf) != c.dst(g))
                return ValidationReport::fail(Law::closure, "composite has the wrong source or target",
                                              {c.morphism_id(g), c.morphism_id(f), c.morphism_id(gf)});
        }
        const auto& in = c.incoming(c.src(g));
        if (row.size() != in.size()) {
            for (Index f : in)
                if (!c.try_compose(g, f))
                    return ValidationReport::fail(Law::closure, "composition undefined on a composable pair",
                                                  {c.morphism_id(g), c.morphism_id(f)});
        }
    }
    for (Index g = 0; g < c.morphism_count(); ++g) {
        for (const auto& [f, gf] : c.composites_after(g)) {
            for (Index h : c.outgoing(c.dst(g))) {
                Index lhs = c.compose(h, gf);
                Index rhs = c.compose(c.compose(h, g), f);
                if (lhs != rhs)
                    return ValidationReport::fail(Law::associativity, "h o (g o f) != (h o g) o f",
                                                  {c.morphism_id(h), c.morphism_id(g), c.morphism_id(f)});
            }
        }
    }
    return ValidationReport::pass();
}

// Sources and targets swapped, compose arguments swapped; identifiers and
// index order kept, so opposite(opposite(c)) == c exactly.
inline FinCat opposite(const FinCat& c) { return FinCat::opposite_of(c); }

// Objects (x, y) and morphisms (f, g) in row-major order of the factors;
// composition componentwise.
inline FinCat product(const FinCat& c, const FinCat& d) { return FinCat::product_of(c, d); }

inline std::string pair_id(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

inline CatPtr share(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }

inline bool same_category(const CatPtr& a, const CatPtr& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------------------
// Functors between finite categories

struct FinFunctor {
    CatPtr source;
    CatPtr target;
    std::vector<Index> object_map;
    std::vector<Index> morphism_map;

    Index on_object(Index x) const { return object_map.at(x); }
    Index on_morphism(Index f) const { return morphism_map.at(f); }

    friend bool operator==(const FinFunctor& a, const FinFunctor& b) {
        return same_category(a.source, b.source) && same_category(a.target, b.target) &&
               a.object_map == b.object_map && a.morphism_map == b.morphism_map;
    }
};

inline FinFunctor identity_functor(const CatPtr& c) {
    FinFunctor id{c, c, {}, {}};
    for (Index x = 0; x < c->object_count(); ++x) id.object_map.push_back(x);
    for (Index f = 0; f < c->morphism_count(); ++f) id.morphism_map.push_back(f);
    return id;
}

inline ValidationReport validate_functor(const FinFunctor& F) {
    const FinCat& c = *F.source;
    const FinCat& d = *F.target;
    if (F.object_map.size() != c.object_count() || F.morphism_map.size() != c.morphism_count())
        return ValidationReport::fail(Law::functoriality, "map tables have the wrong size", {});
    for (Index x = 0; x < c.object_count(); ++x)
        if (F.object_map[x] >= d.object_count())
            return ValidationReport::fail(Law::functoriality, "object image out of range", {c.object_id(x)});
    for (Index f = 0; f < c.morphism_count(); ++f) {
        Index g = F.morphism_map[f];
        if (g >= d.morphism_count())
            return ValidationReport::fail(Law::functoriality, "morphism image out of range", {c.morphism_id(f)});
        if (d.src(g) != F.object_map[c.src(f)] || d.dst(g) != F.object_map[c.dst(f)])
            return ValidationReport::fail(Law::functoriality, "image does not preserve source/target",
                                          {c.morphism_id(f), d.morphism_id(g)});
    }
    for (Index x = 0; x < c.object_count(); ++x)
        if (F.morphism_map[c.identity(x)] != d.identity(F.object_map[x]))
            return ValidationReport::fail(Law::functoriality, "identity not preserved", {c.object_id(x)});
    for (Index g = 0; g < c.morphism_count(); ++g)
        for (const auto& [f, gf] : c.composites_after(g)) {
            auto image = d.try_compose(F.morphism_map[g], F.morphism_map[f]);
            if (!image || *image != F.morphism_map[gf])
                return ValidationReport::fail(Law::functoriality, "composition not preserved",
                                              {c.morphism_id(g), c.morphism_id(f)});
        }
    return ValidationReport::pass();
}

// G ∘ F.
inline FinFunctor compose(const FinFunctor& G, const FinFunctor& F) {
    if (!same_category(F.target, G.source)) throw Error("functor composite: target/source mismatch");
    FinFunctor GF{F.source, G.target, {}, {}};
    for (Index y : F.object_map) GF.object_map.push_back(G.object_map.at(y));
    for (Index g : F.morphism_map) GF.morphism_map.push_back(G.morphism_map.at(g));
    return GF;
}

// The pairing (F, G): C -> D × E of two functors out of the same category.
inline FinFunctor pairing(const FinFunctor& F, const FinFunctor& G, const CatPtr& product_target = nullptr) {
    if (!same_category(F.source, G.source)) throw Error("pairing: functors have different sources");
    CatPtr target = product_target ? product_target : share(product(*F.target, *G.target));
    const Index nE = G.target->object_count(), mE = G.target->morphism_count();
    FinFunctor P{F.source, target, {}, {}};
    for (Index x = 0; x < F.source->object_count(); ++x)
        P.object_map.push_back(F.object_map[x] * nE + G.object_map[x]);
    for (Index f = 0; f < F.source->morphism_count(); ++f)
        P.morphism_map.push_back(F.morphism_map[f] * mE + G.morphism_map[f]);
    return P;
}

// The same functor read between opposite categories.
inline FinFunctor opposite(const FinFunctor& F) {
    return {share(opposite(*F.source)), share(opposite(*F.target)), F.object_map, F.morphism_map};
}

// Exact isomorphism check: bijective on objects and morphisms.
inline bool is_isomorphism(const FinFunctor& F) {
    if (!validate_functor(F).ok()) return false;
    if (F.source->object_count() != F.target->object_count()) return false;
    if (F.source->morphism_count() != F.target->morphism_count()) return false;
    std::vector<bool> hit_obj(F.target->object_count()), hit_mor(F.target->morphism_count());
    for (Index y : F.object_map) {
        if (hit_obj[y]) return false;
        hit_obj[y] = true;
    }
    for (Index g : F.morphism_map) {
        if (hit_mor[g]) return false;
        hit_mor[g] = true;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Set-valued functors. Elements are indices into per-object label lists.

struct SetFunctor {
    CatPtr base;
    std::vector<std::vector<std::string>> sets;  // per object, element labels
    std::vector<std::vector<Index>> maps;        // per morphism, function table

    Index size(Index x) const { return sets.at(x).size(); }
    Index apply(Index f, Index e) const { return maps.at(f).at(e); }
    const std::string& label(Index x, Index e) const { return sets.at(x).at(e); }

    std::optional<Index> find_element(Index x, std::string_view label) const {
        const auto& s = sets.at(x);
        for (Index e = 0; e < s.size(); ++e)
            if (s[e] == label) return e;
        return std::nullopt;
    }

    Index total_size() const {
        Index n = 0;
        for (const auto& s : sets) n += s.size();
        return n;
    }

    Index max_size() const {
        Index n = 0;
        for (const auto& s : sets) n = std::max(n, s.size());
        return n;
    }
};

inline ValidationReport validate_set_functor(const SetFunctor& F) {
    const FinCat& c = *F.base;
    if (F.sets.size() != c.object_count() || F.maps.size() != c.morphism_count())
        return ValidationReport::fail(Law::functoriality, "assignment tables have the wrong size", {});
    for (Index f = 0; f < c.morphism_count(); ++f) {
        const auto& table = F.maps[f];
        if (table.size() != F.size(c.src(f)))
            return ValidationReport::fail(Law::functoriality, "function table has the wrong domain",
                                          {c.morphism_id(f)});
        for (Index v : table)
            if (v >= F.size(c.dst(f)))
                return ValidationReport::fail(Law::functoriality, "function table leaves its codomain",
                                              {c.morphism_id(f)});
    }
    for (Index x = 0; x < c.object_count(); ++x) {
        const auto& table = F.maps[c.identity(x)];
        for (Index e = 0; e < table.size(); ++e)
            if (table[e] != e)
                return ValidationReport::fail(Law::functoriality, "identity is not sent to an identity",
                                              {c.object_id(x), F.label(x, e)});
    }
    for (Index g = 0; g < c.morphism_count(); ++g)
        for (const auto& [f, gf] : c.composites_after(g))
            for (Index e = 0; e < F.size(c.src(f)); ++e)
                if (F.apply(g, F.apply(f, e)) != F.apply(gf, e))
                    return ValidationReport::fail(Law::functoriality, "composition is not preserved",
                                                  {c.morphism_id(g), c.morphism_id(f), F.label(c.src(f), e)});
    return ValidationReport::pass();
}

// F ∘ G for a functor G into the base of F.
inline SetFunctor compose(const SetFunctor& F, const FinFunctor& G) {
    if (!same_category(G.target, F.base)) throw Error("set functor composite: base mismatch");
    SetFunctor FG{G.source, {}, {}};
    for (Index y : G.object_map) FG.sets.push_back(F.sets.at(y));
    for (Index g : G.morphism_map) FG.maps.push_back(F.maps.at(g));
    return FG;
}

inline SetFunctor constant_functor(const CatPtr& c, std::vector<std::string> labels) {
    SetFunctor F{c, std::vector<std::vector<std::string>>(c->object_count(), labels), {}};
    std::vector<Index> id(labels.size());
    for (Index e = 0; e < id.size(); ++e) id[e] = e;
    F.maps.assign(c->morphism_count(), id);
    return F;
}

// ---------------------------------------------------------------------------
// Natural transformations between Set-valued functors on a shared base.

struct NatTransf {
    std::vector<std::vector<Index>> components;  // per object, function table

    friend bool operator==(const NatTransf&, const NatTransf&) = default;
    friend auto operator<=>(const NatTransf&, const NatTransf&) = default;
};

inline ValidationReport validate_nat(const SetFunctor& F, const SetFunctor& G, const NatTransf& a) {
    const FinCat& c = *F.base;
    if (a.components.size() != c.object_count())
        return ValidationReport::fail(Law::naturality, "wrong number of components", {});
    for (Index x = 0; x < c.object_count(); ++x) {
        if (a.components[x].size() != F.size(x))
            return ValidationReport::fail(Law::naturality, "component has the wrong domain", {c.object_id(x)});
        for (Index v : a.components[x])
            if (v >= G.size(x))
                return ValidationReport::fail(Law::naturality, "component leaves its codomain", {c.object_id(x)});
    }
    for (Index u = 0; u < c.morphism_count(); ++u)
        for (Index e = 0; e < F.size(c.src(u)); ++e)
            if (a.components[c.dst(u)][F.apply(u, e)] != G.apply(u, a.components[c.src(u)][e]))
                return ValidationReport::fail(Law::naturality, "naturality square fails",
                                              {c.morphism_id(u), F.label(c.src(u), e)});
    return ValidationReport::pass();
}

namespace detail {

class BudgetCounter {
public:
    explicit BudgetCounter(std::size_t budget, std::string what) : budget_(budget), what_(std::move(what)) {}
    void tick() {
        if (++used_ > budget_)
            throw BudgetExceeded(what_ + ": enumeration budget of " + std::to_string(budget_) + " exceeded");
    }

private:
    std::size_t budget_;
    std::size_t used_ = 0;
    std::string what_;
};

}  // namespace detail

// Every functor c -> d. Object images are chosen first, then each
// non-identity morphism is assigned a parallel morphism; composition is
// checked as soon as all three members of a composable pair are assigned.
inline std::vector<FinFunctor> functor_category_objects(const CatPtr& c, const CatPtr& d, const Limits& limits = {}) {
    detail::BudgetCounter counter(limits.budget, "functor enumeration");
    const Index n = c->object_count(), m = c->morphism_count();
    std::vector<FinFunctor> result;
    std::vector<Index> obj(n), mor(m);
    std::vector<bool> assigned(m, false);

    // Checks every composite in c whose three members are assigned and
    // whose newest member is f.
    auto consistent = [&](Index f) {
        auto check = [&](Index g, Index h, Index gh) {
            if (!assigned[g] || !assigned[h] || !assigned[gh]) return true;
            auto image = d->try_compose(mor[g], mor[h]);
            return image && *image == mor[gh];
        };
        for (const auto& [h, gh] : c->composites_after(f))
            if (!check(f, h, gh)) return false;
        for (Index g : c->outgoing(c->dst(f)))
            if (auto gf = c->try_compose(g, f); gf && !check(g, f, *gf)) return false;
        for (Index g = 0; g < m; ++g) {
            if (!assigned[g]) continue;
            for (const auto& [h, gh] : c->composites_after(g))
                if (gh == f && !check(g, h, gh)) return false;
        }
        return true;
    };

    std::vector<Index> order;
    for (Index f = 0; f < m; ++f)
        if (!c->is_identity(f)) order.push_back(f);

    auto assign_morphisms = [&](auto& self, Index k) -> void {
        if (k == order.size()) {
            result.push_back({c, d, obj, mor});
            return;
        }
        Index f = order[k];
        for (Index g : d->hom(obj[c->src(f)], obj[c->dst(f)])) {
            counter.tick();
            mor[f] = g;
            assigned[f] = true;
            if (consistent(f)) self(self, k + 1);
            assigned[f] = false;
        }
    };
    auto assign_objects = [&](auto& self, Index x) -> void {
        if (x == n) {
            for (Index y = 0; y < n; ++y) {
                mor[c->identity(y)] = d->identity(obj[y]);
                assigned[c->identity(y)] = true;
            }
            bool ok = true;
            for (Index y = 0; y < n && ok; ++y) ok = consistent(c->identity(y));
            if (ok) assign_morphisms(assign_morphisms, 0);
            for (Index y = 0; y < n; ++y) assigned[c->identity(y)] = false;
            return;
        }
        for (Index y = 0; y < d->object_count(); ++y) {
            counter.tick();
            obj[x] = y;
            self(self, x + 1);
        }
    };
    assign_objects(assign_objects, 0);
    return result;
}

// Every natural transformation F => G, by element-wise backtracking with
// the naturality squares checked as soon as both sides are determined.
inline std::vector<NatTransf> enumerate_nat(const SetFunctor& F, const SetFunctor& G, const Limits& limits = {}) {
    if (!same_category(F.base, G.base)) throw Error("enumerate_nat: functors live on different bases");
    const FinCat& c = *F.base;
    detail::BudgetCounter counter(limits.budget, "natural transformation enumeration");

    struct Var {
        Index object;
        Index element;
    };
    std::vector<Var> vars;
    std::vector<std::vector<Index>> var_of(c.object_count());
    for (Index x = 0; x < c.object_count(); ++x)
        for (Index e = 0; e < F.size(x); ++e) {
            var_of[x].push_back(vars.size());
            vars.push_back({x, e});
        }
    // Constraint: value[b] == G(u)(value[a]) with a = (src u, e), b = (dst u, F(u)e).
    struct Square {
        Index a, b, u;
    };
    std::vector<std::vector<Square>> checks(vars.size());
    for (Index u = 0; u < c.morphism_count(); ++u)
        for (Index e = 0; e < F.size(c.src(u)); ++e) {
            Index a = var_of[c.src(u)][e];
            Index b = var_of[c.dst(u)][F.apply(u, e)];
            checks[std::max(a, b)].push_back({a, b, u});
        }

    std::vector<Index> value(vars.size());
    std::vector<NatTransf> result;
    auto step = [&](auto& self, Index k) -> void {
        if (k == vars.size()) {
            NatTransf t;
            t.components.resize(c.object_count());
            for (Index x = 0; x < c.object_count(); ++x)
                for (Index v : var_of[x]) t.components[x].push_back(value[v]);
            result.push_back(std::move(t));
            return;
        }
        for (Index v = 0; v < G.size(vars[k].object); ++v) {
            counter.tick();
            value[k] = v;
            bool ok = true;
            for (const auto& sq : checks[k])
                if (value[sq.b] != G.apply(sq.u, value[sq.a])) {
                    ok = false;
                    break;
                }
            if (ok) self(self, k + 1);
        }
    };
    step(step, 0);
    return result;
}

}  // namespace fincoend
