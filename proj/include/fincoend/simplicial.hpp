#pragma once

// Combinatorics of the simplex category: truncated Δ, the pointed simplex
// category Δ_* with the adjoint triple π ⊣ l ⊣ λ, last/initial-vertex
// maps, the reversal automorphism and the edgewise functor ε.

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fincoend/fincat.hpp"

namespace fincoend {

// A monotone map [n] -> [m].
struct MonotoneMap {
    Index n = 0;
    Index m = 0;
    std::vector<Index> values;

    Index operator()(Index i) const { return values.at(i); }

    // Last-vertex: φ(n) = m. Initial-vertex: φ(0) = 0.
    bool lv() const { return values.at(n) == m; }
    bool iv() const { return values.at(0) == 0; }

    bool is_monotone() const {
        if (values.size() != n + 1) return false;
        for (Index i = 0; i <= n; ++i) {
            if (values[i] > m) return false;
            if (i > 0 && values[i] < values[i - 1]) return false;
        }
        return true;
    }

    // Identifier "n>m:v0v1..."; dimensions stay below 10 in this library.
    std::string id() const {
        std::string s = std::to_string(n) + ">" + std::to_string(m) + ":";
        for (Index v : values) s += static_cast<char>('0' + v);
        return s;
    }

    friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
    friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;
};

inline MonotoneMap identity_map(Index n) {
    MonotoneMap id{n, n, {}};
    for (Index i = 0; i <= n; ++i) id.values.push_back(i);
    return id;
}

// ψ ∘ φ.
inline MonotoneMap compose(const MonotoneMap& psi, const MonotoneMap& phi) {
    if (phi.m != psi.n) throw Error("monotone maps are not composable");
    MonotoneMap r{phi.n, psi.m, {}};
    for (Index v : phi.values) r.values.push_back(psi(v));
    return r;
}

// The coface δ^k: [n-1] -> [n] skipping k.
inline MonotoneMap coface(Index n, Index k) {
    MonotoneMap d{n - 1, n, {}};
    for (Index i = 0; i < n; ++i) d.values.push_back(i < k ? i : i + 1);
    return d;
}

// All monotone maps [n] -> [m] in lexicographic order of value tables.
inline std::vector<MonotoneMap> monotone_maps(Index n, Index m) {
    std::vector<MonotoneMap> out;
    MonotoneMap cur{n, m, std::vector<Index>(n + 1, 0)};
    auto fill = [&](auto& self, Index i, Index lo) -> void {
        if (i > n) {
            out.push_back(cur);
            return;
        }
        for (Index v = lo; v <= m; ++v) {
            cur.values[i] = v;
            self(self, i + 1, v);
        }
    };
    fill(fill, 0, 0);
    return out;
}

// rev(φ)(i) = m - φ(n - i).
inline MonotoneMap rev(const MonotoneMap& phi) {
    MonotoneMap r{phi.n, phi.m, {}};
    for (Index i = 0; i <= phi.n; ++i) r.values.push_back(phi.m - phi(phi.n - i));
    return r;
}

inline Index epsilon_object(Index n) { return 2 * n + 1; }

// ε(φ) on [n]^op ⋆ [n] -> [m]^op ⋆ [m]: the first block is reversed, the
// second block is carried over directly.
inline MonotoneMap epsilon(const MonotoneMap& phi, Index bound = 7) {
    if (epsilon_object(phi.m) > bound)
        throw TruncationError("epsilon: target dimension " + std::to_string(epsilon_object(phi.m)) +
                              " exceeds bound " + std::to_string(bound));
    MonotoneMap r{epsilon_object(phi.n), epsilon_object(phi.m), {}};
    for (Index i = 0; i <= phi.n; ++i) r.values.push_back(phi.m - phi(phi.n - i));
    for (Index j = 0; j <= phi.n; ++j) r.values.push_back(phi.m + 1 + phi(j));
    return r;
}

// ι_n: [n] -> ε[n], inclusion of the second factor.
inline MonotoneMap iota(Index n) {
    MonotoneMap r{n, epsilon_object(n), {}};
    for (Index j = 0; j <= n; ++j) r.values.push_back(n + 1 + j);
    return r;
}

// ρ_n: rev[n] = [n] -> ε[n], inclusion of the first factor [n]^op. Position
// i of the join holds vertex n - i of [n]^op, so as a map of underlying
// ordered sets this is i ↦ i.
inline MonotoneMap rho(Index n) {
    MonotoneMap r{n, epsilon_object(n), {}};
    for (Index i = 0; i <= n; ++i) r.values.push_back(i);
    return r;
}

inline std::string delta_object_id(Index n) { return "[" + std::to_string(n) + "]"; }

// Δ^{≤N} as a FinCat; morphism k is maps[k].
struct DeltaTrunc {
    Index max_dim = 0;
    CatPtr cat;
    std::vector<MonotoneMap> maps;
    std::unordered_map<std::string, Index> by_id;

    Index morphism_of(const MonotoneMap& phi) const {
        auto it = by_id.find(phi.id());
        if (it == by_id.end()) throw TruncationError("monotone map " + phi.id() + " outside truncation");
        return it->second;
    }
};

inline DeltaTrunc delta(Index max_dim) {
    if (max_dim > 9) throw TruncationError("delta: dimensions above 9 are not supported");
    DeltaTrunc d;
    d.max_dim = max_dim;
    FinCat::Builder b;
    for (Index n = 0; n <= max_dim; ++n) b.add_bare_object(delta_object_id(n));
    for (Index n = 0; n <= max_dim; ++n)
        for (Index m = 0; m <= max_dim; ++m)
            for (auto& phi : monotone_maps(n, m)) {
                Index f = b.add_morphism(phi.id(), n, m);
                if (phi == identity_map(n)) b.set_identity(n, f);
                d.by_id.emplace(phi.id(), f);
                d.maps.push_back(std::move(phi));
            }
    std::vector<std::vector<Index>> into(max_dim + 1);
    for (Index f = 0; f < d.maps.size(); ++f) into[d.maps[f].m].push_back(f);
    for (Index g = 0; g < d.maps.size(); ++g)
        for (Index f : into[d.maps[g].n]) b.set_compose(g, f, d.by_id.at(compose(d.maps[g], d.maps[f]).id()));
    d.cat = share(std::move(b).build(false));
    return d;
}

// Objects ([n], i) of Δ_*.
struct PointedObject {
    Index n = 0;
    Index i = 0;
    friend bool operator==(const PointedObject&, const PointedObject&) = default;
};

// A morphism ([n], i) -> ([m], j) of Δ_*: a monotone φ with φ(i) <= j.
struct PointedMorphism {
    PointedObject src;
    PointedObject dst;
    MonotoneMap map;

    bool is_valid() const {
        return map.n == src.n && map.m == dst.n && map.is_monotone() && src.i <= src.n && dst.i <= dst.n &&
               map(src.i) <= dst.i;
    }
    friend bool operator==(const PointedMorphism&, const PointedMorphism&) = default;
};

inline std::string pointed_object_id(const PointedObject& x) {
    return "([" + std::to_string(x.n) + "]," + std::to_string(x.i) + ")";
}

inline std::string pointed_morphism_id(const PointedMorphism& h) {
    return pointed_object_id(h.src) + ">" + pointed_object_id(h.dst) + ":" + h.map.id().substr(h.map.id().find(':') + 1);
}

struct DeltaStarTrunc {
    Index max_dim = 0;
    CatPtr cat;
    std::vector<PointedObject> objects;
    std::vector<PointedMorphism> morphisms;
    std::unordered_map<std::string, Index> by_id;

    Index object_of(const PointedObject& x) const { return cat->object(pointed_object_id(x)); }
    // Position in `objects`, valid before `cat` is built: ([n], i) sits at n(n+1)/2 + i.
    static Index object_of_index(const PointedObject& x) { return x.n * (x.n + 1) / 2 + x.i; }
    Index morphism_of(const PointedMorphism& h) const {
        auto it = by_id.find(pointed_morphism_id(h));
        if (it == by_id.end()) throw TruncationError("pointed morphism outside truncation");
        return it->second;
    }
};

inline DeltaStarTrunc delta_star(Index max_dim) {
    if (max_dim > 9) throw TruncationError("delta_star: dimensions above 9 are not supported");
    DeltaStarTrunc d;
    d.max_dim = max_dim;
    FinCat::Builder b;
    for (Index n = 0; n <= max_dim; ++n)
        for (Index i = 0; i <= n; ++i) {
            d.objects.push_back({n, i});
            b.add_bare_object(pointed_object_id({n, i}));
        }
    for (Index s = 0; s < d.objects.size(); ++s)
        for (Index t = 0; t < d.objects.size(); ++t)
            for (auto& phi : monotone_maps(d.objects[s].n, d.objects[t].n)) {
                PointedMorphism h{d.objects[s], d.objects[t], std::move(phi)};
                if (!h.is_valid()) continue;
                Index f = b.add_morphism(pointed_morphism_id(h), s, t);
                if (s == t && h.map == identity_map(h.src.n)) b.set_identity(s, f);
                d.by_id.emplace(pointed_morphism_id(h), f);
                d.morphisms.push_back(std::move(h));
            }
    std::vector<std::vector<Index>> into(d.objects.size());
    for (Index f = 0; f < d.morphisms.size(); ++f) into[d.object_of_index(d.morphisms[f].dst)].push_back(f);
    for (Index g = 0; g < d.morphisms.size(); ++g)
        for (Index f : into[d.object_of_index(d.morphisms[g].src)]) {
                PointedMorphism gf{d.morphisms[f].src, d.morphisms[g].dst,
                                   compose(d.morphisms[g].map, d.morphisms[f].map)};
                b.set_compose(g, f, d.by_id.at(pointed_morphism_id(gf)));
            }
    d.cat = share(std::move(b).build(false));
    return d;
}

// π: Δ_* -> Δ forgets the point.
inline Index pi(const PointedObject& x) { return x.n; }
inline MonotoneMap pi(const PointedMorphism& h) { return h.map; }

// l: Δ -> Δ_*, [n] ↦ ([n], n).
inline PointedObject l(Index n) { return {n, n}; }
inline PointedMorphism l(const MonotoneMap& phi) { return {l(phi.n), l(phi.m), phi}; }

// λ: Δ_* -> Δ, ([n], i) ↦ [i], a morphism over φ ↦ φ restricted to {0..i}.
inline Index lambda(const PointedObject& x) { return x.i; }
inline MonotoneMap lambda(const PointedMorphism& h) {
    MonotoneMap r{h.src.i, h.dst.i, {}};
    for (Index k = 0; k <= h.src.i; ++k) r.values.push_back(h.map(k));
    return r;
}

// Counit of l ⊣ λ at ([n], i): the inclusion ([i], i) -> ([n], i).
inline PointedMorphism counit(const PointedObject& x) {
    MonotoneMap inc{x.i, x.n, {}};
    for (Index k = 0; k <= x.i; ++k) inc.values.push_back(k);
    return {l(x.i), x, inc};
}

// Unit of l ⊣ λ at [n]: [n] -> λ l [n] = [n], the identity.
inline MonotoneMap unit(Index n) { return identity_map(n); }

// π-cocartesian morphisms are those of the form ([n], i) -> ([m], φ(i)).
inline bool is_cocartesian(const PointedMorphism& h) { return h.dst.i == h.map(h.src.i); }

// The universal property of a π-cocartesian morphism h: X -> Y, tested
// against every Z in the truncation: each g: X -> Z and ψ: π Y -> π Z with
// ψ ∘ π(h) = π(g) must factor as g = h' ∘ h with h' over ψ (uniqueness is
// automatic, since Δ_* is a subcategory of pairs over Δ).
inline bool has_cocartesian_factorization(const DeltaStarTrunc& d, const PointedMorphism& h) {
    for (const auto& z : d.objects)
        for (const auto& psi : monotone_maps(h.dst.n, z.n)) {
            PointedMorphism g{h.src, z, compose(psi, h.map)};
            if (!g.is_valid()) continue;
            PointedMorphism factor{h.dst, z, psi};
            if (!factor.is_valid()) return false;
        }
    return true;
}

// The functors of the adjoint triple as FinFunctors between truncations.
inline FinFunctor pi_functor(const DeltaStarTrunc& s, const DeltaTrunc& d) {
    FinFunctor F{s.cat, d.cat, {}, {}};
    for (const auto& x : s.objects) F.object_map.push_back(pi(x));
    for (const auto& h : s.morphisms) F.morphism_map.push_back(d.morphism_of(pi(h)));
    return F;
}

inline FinFunctor l_functor(const DeltaTrunc& d, const DeltaStarTrunc& s) {
    FinFunctor F{d.cat, s.cat, {}, {}};
    for (Index n = 0; n <= d.max_dim; ++n) F.object_map.push_back(s.object_of(l(n)));
    for (const auto& phi : d.maps) F.morphism_map.push_back(s.morphism_of(l(phi)));
    return F;
}

inline FinFunctor lambda_functor(const DeltaStarTrunc& s, const DeltaTrunc& d) {
    FinFunctor F{s.cat, d.cat, {}, {}};
    for (const auto& x : s.objects) F.object_map.push_back(lambda(x));
    for (const auto& h : s.morphisms) F.morphism_map.push_back(d.morphism_of(lambda(h)));
    return F;
}

inline FinFunctor rev_functor(const DeltaTrunc& d) {
    FinFunctor F{d.cat, d.cat, {}, {}};
    for (Index n = 0; n <= d.max_dim; ++n) F.object_map.push_back(n);
    for (const auto& phi : d.maps) F.morphism_map.push_back(d.morphism_of(rev(phi)));
    return F;
}

// ε: Δ^{≤N} -> Δ^{≤2N+1}.
inline FinFunctor epsilon_functor(const DeltaTrunc& src, const DeltaTrunc& dst) {
    FinFunctor F{src.cat, dst.cat, {}, {}};
    for (Index n = 0; n <= src.max_dim; ++n) F.object_map.push_back(epsilon_object(n));
    for (const auto& phi : src.maps) F.morphism_map.push_back(dst.morphism_of(epsilon(phi, dst.max_dim)));
    return F;
}

}  // namespace fincoend
