#pragma once

// Standard Set-valued functors and a label-based constructor.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fincoend/fincat.hpp"

namespace fincoend {

// Builds a SetFunctor from labels. Identity morphisms may be omitted from
// `maps`; every other morphism must be listed.
inline SetFunctor make_set_functor(const CatPtr& base, const std::map<std::string, std::vector<std::string>>& sets,
                                   const std::map<std::string, std::map<std::string, std::string>>& maps) {
    const FinCat& c = *base;
    SetFunctor F{base, std::vector<std::vector<std::string>>(c.object_count()),
                 std::vector<std::vector<Index>>(c.morphism_count())};
    for (const auto& [obj, elements] : sets) F.sets[c.object(obj)] = elements;
    for (Index f = 0; f < c.morphism_count(); ++f) {
        Index x = c.src(f), y = c.dst(f);
        auto it = maps.find(c.morphism_id(f));
        if (it == maps.end()) {
            if (!c.is_identity(f) && F.size(x) > 0)
                throw Error("no function given for morphism '" + c.morphism_id(f) + "'");
            for (Index e = 0; e < F.size(x); ++e) F.maps[f].push_back(e);
            continue;
        }
        for (Index e = 0; e < F.size(x); ++e) {
            auto v = it->second.find(F.label(x, e));
            if (v == it->second.end())
                throw Error("function for '" + c.morphism_id(f) + "' misses element '" + F.label(x, e) + "'");
            auto target = F.find_element(y, v->second);
            if (!target) throw Error("function for '" + c.morphism_id(f) + "' hits unknown element '" + v->second + "'");
            F.maps[f].push_back(*target);
        }
    }
    return F;
}

// Hom(x0, -): c -> Set.
inline SetFunctor corepresentable(const CatPtr& c, Index x0) {
    SetFunctor F{c, std::vector<std::vector<std::string>>(c->object_count()),
                 std::vector<std::vector<Index>>(c->morphism_count())};
    std::vector<std::vector<Index>> hom(c->object_count());
    for (Index f : c->outgoing(x0)) {
        hom[c->dst(f)].push_back(f);
        F.sets[c->dst(f)].push_back(c->morphism_id(f));
    }
    for (Index u = 0; u < c->morphism_count(); ++u)
        for (Index f : hom[c->src(u)]) {
            Index uf = c->compose(u, f);
            auto pos = std::find(hom[c->dst(u)].begin(), hom[c->dst(u)].end(), uf) - hom[c->dst(u)].begin();
            F.maps[u].push_back(static_cast<Index>(pos));
        }
    return F;
}

// Hom(-, y0) as a functor on opposite(c). The morphism u: x -> x' of c acts
// Hom(x', y0) -> Hom(x, y0) by precomposition.
inline SetFunctor representable_presheaf(const CatPtr& c, Index y0) {
    CatPtr op = share(opposite(*c));
    SetFunctor F{op, std::vector<std::vector<std::string>>(c->object_count()),
                 std::vector<std::vector<Index>>(c->morphism_count())};
    std::vector<std::vector<Index>> hom(c->object_count());
    for (Index f : c->incoming(y0)) {
        hom[c->src(f)].push_back(f);
        F.sets[c->src(f)].push_back(c->morphism_id(f));
    }
    for (Index u = 0; u < c->morphism_count(); ++u)
        for (Index f : hom[c->dst(u)]) {
            Index fu = c->compose(f, u);
            auto pos = std::find(hom[c->src(u)].begin(), hom[c->src(u)].end(), fu) - hom[c->src(u)].begin();
            F.maps[u].push_back(static_cast<Index>(pos));
        }
    return F;
}

// Hom: c^op × c -> Set, (x, y) ↦ Hom(x, y), (a, b) acting by f ↦ b ∘ f ∘ a.
inline SetFunctor hom_end(const CatPtr& c) {
    const FinCat& C = *c;
    CatPtr base = share(product(opposite(C), C));
    const Index n = C.object_count(), m = C.morphism_count();
    SetFunctor F{base, std::vector<std::vector<std::string>>(n * n), std::vector<std::vector<Index>>(m * m)};
    std::vector<std::vector<Index>> hom(n * n);
    for (Index f = 0; f < m; ++f) {
        hom[C.src(f) * n + C.dst(f)].push_back(f);
        F.sets[C.src(f) * n + C.dst(f)].push_back(C.morphism_id(f));
    }
    for (Index a = 0; a < m; ++a)
        for (Index b = 0; b < m; ++b) {
            // In c: a: x' -> x, b: y -> y'; source object (x, y).
            Index x = C.dst(a), xp = C.src(a), y = C.src(b), yp = C.dst(b);
            auto& out = F.maps[a * m + b];
            for (Index f : hom[x * n + y]) {
                Index g = C.compose(b, C.compose(f, a));
                const auto& h = hom[xp * n + yp];
                out.push_back(static_cast<Index>(std::find(h.begin(), h.end(), g) - h.begin()));
            }
        }
    return F;
}

// Hom: c × c^op -> Set, (x, y) ↦ Hom(y, x), (a, b) acting by f ↦ a ∘ f ∘ b.
inline SetFunctor hom_coend(const CatPtr& c) {
    const FinCat& C = *c;
    CatPtr base = share(product(C, opposite(C)));
    const Index n = C.object_count(), m = C.morphism_count();
    SetFunctor F{base, std::vector<std::vector<std::string>>(n * n), std::vector<std::vector<Index>>(m * m)};
    std::vector<std::vector<Index>> hom(n * n);  // indexed by (x, y) for Hom(y, x)
    for (Index f = 0; f < m; ++f) {
        hom[C.dst(f) * n + C.src(f)].push_back(f);
        F.sets[C.dst(f) * n + C.src(f)].push_back(C.morphism_id(f));
    }
    for (Index a = 0; a < m; ++a)
        for (Index b = 0; b < m; ++b) {
            // In c: a: x -> x', b: y' -> y; source object (x, y).
            Index x = C.src(a), xp = C.dst(a), y = C.dst(b), yp = C.src(b);
            auto& out = F.maps[a * m + b];
            for (Index f : hom[x * n + y]) {
                Index g = C.compose(a, C.compose(f, b));
                const auto& h = hom[xp * n + yp];
                out.push_back(static_cast<Index>(std::find(h.begin(), h.end(), g) - h.begin()));
            }
        }
    return F;
}

inline SetFunctor empty_functor(const CatPtr& c) { return constant_functor(c, {}); }

inline SetFunctor singleton_functor(const CatPtr& c) { return constant_functor(c, {"*"}); }

// Pointwise disjoint union; labels tagged "0:" and "1:".
inline SetFunctor coproduct(const SetFunctor& F, const SetFunctor& G) {
    if (!same_category(F.base, G.base)) throw Error("coproduct: functors live on different bases");
    SetFunctor S{F.base, {}, {}};
    for (Index x = 0; x < F.sets.size(); ++x) {
        std::vector<std::string> labels;
        for (const auto& e : F.sets[x]) labels.push_back("0:" + e);
        for (const auto& e : G.sets[x]) labels.push_back("1:" + e);
        S.sets.push_back(std::move(labels));
    }
    const FinCat& c = *F.base;
    for (Index u = 0; u < c.morphism_count(); ++u) {
        std::vector<Index> table = F.maps[u];
        Index shift = F.size(c.dst(u));
        for (Index v : G.maps[u]) table.push_back(shift + v);
        S.maps.push_back(std::move(table));
    }
    return S;
}

// Pointwise cartesian product; the pair (e, f) sits at e * |G(x)| + f.
inline SetFunctor pointwise_product(const SetFunctor& F, const SetFunctor& G) {
    if (!same_category(F.base, G.base)) throw Error("product: functors live on different bases");
    SetFunctor P{F.base, {}, {}};
    const FinCat& c = *F.base;
    for (Index x = 0; x < c.object_count(); ++x) {
        std::vector<std::string> labels;
        for (const auto& e : F.sets[x])
            for (const auto& f : G.sets[x]) labels.push_back(pair_id(e, f));
        P.sets.push_back(std::move(labels));
    }
    for (Index u = 0; u < c.morphism_count(); ++u) {
        Index w = G.size(c.dst(u));
        std::vector<Index> table;
        for (Index e = 0; e < F.size(c.src(u)); ++e)
            for (Index f = 0; f < G.size(c.src(u)); ++f) table.push_back(F.apply(u, e) * w + G.apply(u, f));
        P.maps.push_back(std::move(table));
    }
    return P;
}

// F ⊠ G: A × B -> Set, (a, b) ↦ F(a) × G(b), over product(F.base, G.base).
inline SetFunctor external_product(const SetFunctor& F, const SetFunctor& G) {
    const FinCat& A = *F.base;
    const FinCat& B = *G.base;
    SetFunctor P{share(product(A, B)), {}, {}};
    for (Index a = 0; a < A.object_count(); ++a)
        for (Index b = 0; b < B.object_count(); ++b) {
            std::vector<std::string> labels;
            for (const auto& e : F.sets[a])
                for (const auto& f : G.sets[b]) labels.push_back(pair_id(e, f));
            P.sets.push_back(std::move(labels));
        }
    for (Index u = 0; u < A.morphism_count(); ++u)
        for (Index v = 0; v < B.morphism_count(); ++v) {
            Index w = G.size(B.dst(v));
            std::vector<Index> table;
            for (Index e = 0; e < F.size(A.src(u)); ++e)
                for (Index f = 0; f < G.size(B.src(v)); ++f) table.push_back(F.apply(u, e) * w + G.apply(v, f));
            P.maps.push_back(std::move(table));
        }
    return P;
}

// Reads F: A × B -> Set as a functor on B × A, given the factors.
inline SetFunctor swap_variables(const SetFunctor& F, const FinCat& A, const FinCat& B) {
    CatPtr swapped = share(product(B, A));
    if (!same_category(F.base, share(product(A, B)))) throw Error("swap_variables: base is not A × B");
    const Index nA = A.object_count(), nB = B.object_count(), mA = A.morphism_count(), mB = B.morphism_count();
    SetFunctor S{swapped, std::vector<std::vector<std::string>>(nA * nB), std::vector<std::vector<Index>>(mA * mB)};
    for (Index a = 0; a < nA; ++a)
        for (Index b = 0; b < nB; ++b) S.sets[b * nA + a] = F.sets[a * nB + b];
    for (Index u = 0; u < mA; ++u)
        for (Index v = 0; v < mB; ++v) S.maps[v * mA + u] = F.maps[u * mB + v];
    return S;
}

// Applies the same SetFunctor data over an isomorphic copy of its base
// (identifier-exact equality is required).
inline SetFunctor rebase(SetFunctor F, const CatPtr& base) {
    if (!same_category(F.base, base)) throw Error("rebase: categories differ");
    F.base = base;
    return F;
}

}  // namespace fincoend
