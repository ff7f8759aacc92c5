#pragma once

// Categories built over a base: twisted arrow categories, truncated
// categories of simplices with their endpoint functors, the comparison
// induced by the edgewise functor, and categories of elements.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fincoend/fincat.hpp"
#include "fincoend/functors.hpp"
#include "fincoend/simplicial.hpp"

namespace fincoend {

// ---------------------------------------------------------------------------
// Twisted arrows

enum class Handedness { left, right };

struct TwCat {
    CatPtr base;
    Handedness handedness = Handedness::left;
    CatPtr carrier;
    FinFunctor eta;  // to base^op × base (left) or base × base^op (right)
};

inline std::string twisted_morphism_id(const FinCat& c, Index f, Index a, Index b, Index g) {
    return c.morphism_id(f) + "-(" + c.morphism_id(a) + "," + c.morphism_id(b) + ")->" + c.morphism_id(g);
}

namespace detail {

inline TwCat twisted_left(const CatPtr& base) {
    const FinCat& c = *base;
    const Index m = c.morphism_count();
    FinCat::Builder b;
    for (Index f = 0; f < m; ++f) b.add_bare_object(c.morphism_id(f));

    struct Arrow {
        Index f, a, b;
    };
    std::vector<Arrow> arrows;
    // by_pair[f] maps (a, b) to the carrier morphism out of f.
    std::vector<std::map<std::pair<Index, Index>, Index>> by_pair(m);
    for (Index f = 0; f < m; ++f)
        for (Index a : c.incoming(c.src(f)))
            for (Index bb : c.outgoing(c.dst(f))) {
                Index g = c.compose(bb, c.compose(f, a));
                Index k = b.add_morphism(twisted_morphism_id(c, f, a, bb, g), f, g);
                if (c.is_identity(a) && c.is_identity(bb)) b.set_identity(f, k);
                by_pair[f].emplace(std::pair{a, bb}, k);
                arrows.push_back({f, a, bb});
            }
    // (a', b') ∘ (a, b) = (a ∘ a', b' ∘ b).
    std::vector<std::vector<Index>> into(m);
    for (Index k = 0; k < arrows.size(); ++k) into[b.dst(k)].push_back(k);
    for (Index k2 = 0; k2 < arrows.size(); ++k2)
        for (Index k1 : into[arrows[k2].f]) {
            const Arrow& s = arrows[k1];
            const Arrow& t = arrows[k2];
            b.set_compose(k2, k1, by_pair[s.f].at({c.compose(s.a, t.a), c.compose(t.b, s.b)}));
        }

    TwCat tw;
    tw.base = base;
    tw.handedness = Handedness::left;
    tw.carrier = share(std::move(b).build(false));
    const Index n = c.object_count();
    tw.eta = {tw.carrier, share(product(opposite(c), c)), {}, {}};
    for (Index f = 0; f < m; ++f) tw.eta.object_map.push_back(c.src(f) * n + c.dst(f));
    for (const auto& ar : arrows) tw.eta.morphism_map.push_back(ar.a * m + ar.b);
    return tw;
}

}  // namespace detail

inline TwCat twisted(const CatPtr& base, Handedness handedness = Handedness::left) {
    TwCat tw = detail::twisted_left(base);
    if (handedness == Handedness::left) return tw;
    TwCat r;
    r.base = base;
    r.handedness = Handedness::right;
    r.carrier = share(opposite(*tw.carrier));
    r.eta = {r.carrier, share(product(*base, opposite(*base))), tw.eta.object_map, tw.eta.morphism_map};
    return r;
}

// ---------------------------------------------------------------------------
// Categories of simplices

// A functor [n] -> c, stored as its vertices and the composites
// α(i <= j) for all i <= j.
struct Simplex {
    Index level = 0;
    std::vector<Index> vertices;
    std::vector<Index> arrows;  // (level+1)^2 table, entry i*(level+1)+j for i <= j

    Index arrow(Index i, Index j) const { return arrows.at(i * (level + 1) + j); }
    Index vertex(Index i) const { return vertices.at(i); }
    Index first() const { return vertices.front(); }
    Index last() const { return vertices.back(); }
};

struct SimplexCat {
    CatPtr base;
    Index max_dim = 0;
    std::shared_ptr<const DeltaTrunc> delta;
    CatPtr carrier;
    std::vector<Simplex> simplices;  // per carrier object
    std::vector<Index> over;         // per carrier morphism: index into delta->maps
    FinFunctor level;                // carrier -> Δ^{≤N}

    const MonotoneMap& map_of(Index k) const { return delta->maps.at(over.at(k)); }

    std::vector<Index> objects_at(Index n) const {
        std::vector<Index> out;
        for (Index s = 0; s < simplices.size(); ++s)
            if (simplices[s].level == n) out.push_back(s);
        return out;
    }

    std::optional<Index> find(const Simplex& s) const {
        auto it = by_key.find(key(s));
        if (it == by_key.end()) return std::nullopt;
        return it->second;
    }

    static std::vector<Index> key(const Simplex& s) {
        std::vector<Index> k{s.level, s.vertices.front()};
        for (Index i = 0; i < s.level; ++i) k.push_back(s.arrow(i, i + 1));
        return k;
    }

    std::map<std::vector<Index>, Index> by_key;
};

inline std::string simplex_id(const FinCat& c, const Simplex& s) {
    if (s.level == 0) return "(" + c.object_id(s.vertices[0]) + ")";
    std::string id = "[";
    for (Index i = 0; i < s.level; ++i) {
        if (i) id += ",";
        id += c.morphism_id(s.arrow(i, i + 1));
    }
    return id + "]";
}

// β ∘ φ.
inline Simplex restrict_simplex(const Simplex& beta, const MonotoneMap& phi) {
    Simplex a;
    a.level = phi.n;
    for (Index i = 0; i <= phi.n; ++i) a.vertices.push_back(beta.vertex(phi(i)));
    a.arrows.assign((a.level + 1) * (a.level + 1), 0);
    for (Index i = 0; i <= phi.n; ++i)
        for (Index j = i; j <= phi.n; ++j) a.arrows[i * (a.level + 1) + j] = beta.arrow(phi(i), phi(j));
    return a;
}

// The strings f_1, ..., f_n in the order they are traversed.
inline Simplex make_simplex(const FinCat& c, Index start, const std::vector<Index>& edges) {
    Simplex s;
    s.level = edges.size();
    s.vertices.push_back(start);
    for (Index f : edges) {
        if (c.src(f) != s.vertices.back()) throw Error("make_simplex: edges are not composable");
        s.vertices.push_back(c.dst(f));
    }
    const Index w = s.level + 1;
    s.arrows.assign(w * w, 0);
    for (Index i = 0; i <= s.level; ++i) {
        s.arrows[i * w + i] = c.identity(s.vertices[i]);
        for (Index j = i + 1; j <= s.level; ++j) s.arrows[i * w + j] = c.compose(edges[j - 1], s.arrows[i * w + j - 1]);
    }
    return s;
}

inline SimplexCat simplices(const CatPtr& base, Index max_dim, const Limits& limits = {}) {
    const FinCat& c = *base;
    detail::BudgetCounter counter(limits.budget, "category of simplices");
    SimplexCat s;
    s.base = base;
    s.max_dim = max_dim;
    s.delta = std::make_shared<const DeltaTrunc>(delta(max_dim));
    const DeltaTrunc& d = *s.delta;

    // Level by level, extending strings at their last vertex.
    std::vector<std::pair<Index, std::vector<Index>>> frontier;
    for (Index x = 0; x < c.object_count(); ++x) frontier.push_back({x, {}});
    for (Index n = 0; n <= max_dim; ++n) {
        std::vector<std::pair<Index, std::vector<Index>>> next;
        for (auto& [start, edges] : frontier) {
            counter.tick();
            Simplex sx = make_simplex(c, start, edges);
            s.by_key.emplace(SimplexCat::key(sx), s.simplices.size());
            if (n < max_dim)
                for (Index f : c.outgoing(sx.last())) {
                    auto longer = edges;
                    longer.push_back(f);
                    next.emplace_back(start, std::move(longer));
                }
            s.simplices.push_back(std::move(sx));
        }
        frontier = std::move(next);
    }

    FinCat::Builder b;
    for (const auto& sx : s.simplices) b.add_bare_object(simplex_id(c, sx));
    // Morphisms into β are indexed by the monotone map they lie over.
    std::vector<std::vector<Index>> into(s.simplices.size(), std::vector<Index>(d.maps.size(), 0));
    std::string digits;
    for (Index t = 0; t < s.simplices.size(); ++t) {
        const Simplex& beta = s.simplices[t];
        for (Index phi : d.cat->incoming(beta.level)) {
            counter.tick();
            const MonotoneMap& map = d.maps[phi];
            Index src = s.by_key.at(SimplexCat::key(restrict_simplex(beta, map)));
            digits.clear();
            for (Index v : map.values) digits += static_cast<char>('0' + v);
            Index k = b.add_morphism(b.object_id(src) + "-" + digits + "->" + b.object_id(t), src, t);
            if (src == t && map == identity_map(beta.level)) b.set_identity(t, k);
            into[t][phi] = k;
            s.over.push_back(phi);
        }
    }
    const Index morphisms = s.over.size();
    for (Index g = 0; g < morphisms; ++g) {
        Index mid = b.src(g), t = b.dst(g);
        for (Index phi : d.cat->incoming(s.simplices[mid].level)) {
            counter.tick();
            b.set_compose(g, into[mid][phi], into[t][d.cat->compose(s.over[g], phi)]);
        }
    }
    s.carrier = share(std::move(b).build(false));
    s.level = {s.carrier, d.cat, {}, s.over};
    for (const auto& sx : s.simplices) s.level.object_map.push_back(sx.level);
    return s;
}

// α ↦ α(n); a morphism α -> β over φ ↦ β(φ(n) <= m).
inline FinFunctor last_vertex(const SimplexCat& s) {
    FinFunctor F{s.carrier, s.base, {}, {}};
    for (const auto& sx : s.simplices) F.object_map.push_back(sx.last());
    for (Index k = 0; k < s.over.size(); ++k) {
        const Simplex& beta = s.simplices[s.carrier->dst(k)];
        F.morphism_map.push_back(beta.arrow(s.map_of(k)(s.map_of(k).n), beta.level));
    }
    return F;
}

// α ↦ α(0); a morphism α -> β over φ ↦ β(0 <= φ(0)), read in base^op.
inline FinFunctor initial_vertex(const SimplexCat& s) {
    FinFunctor F{s.carrier, share(opposite(*s.base)), {}, {}};
    for (const auto& sx : s.simplices) F.object_map.push_back(sx.first());
    for (Index k = 0; k < s.over.size(); ++k) {
        const Simplex& beta = s.simplices[s.carrier->dst(k)];
        F.morphism_map.push_back(beta.arrow(0, s.map_of(k)(0)));
    }
    return F;
}

// q = (initial_vertex, last_vertex) into base^op × base.
inline FinFunctor simplex_endpoints(const SimplexCat& s, const CatPtr& target = nullptr) {
    return pairing(initial_vertex(s), last_vertex(s), target ? target : share(product(opposite(*s.base), *s.base)));
}

// Levelwise string reversal simplices(c^op, N) -> simplices(c, N), lying
// over rev on Δ^{≤N}.
inline FinFunctor reversal_isomorphism(const SimplexCat& op_side, const SimplexCat& s) {
    FinFunctor F{op_side.carrier, s.carrier, {}, {}};
    const FinCat& c = *s.base;
    for (const auto& sx : op_side.simplices) {
        std::vector<Index> edges;
        for (Index i = sx.level; i > 0; --i) edges.push_back(sx.arrow(i - 1, i));
        F.object_map.push_back(s.find(make_simplex(c, sx.last(), edges)).value());
    }
    for (Index k = 0; k < op_side.over.size(); ++k) {
        Index src = F.object_map[op_side.carrier->src(k)], dst = F.object_map[op_side.carrier->dst(k)];
        Index phi = s.delta->morphism_of(rev(op_side.map_of(k)));
        Index found = static_cast<Index>(-1);
        for (Index h : s.carrier->incoming(dst))
            if (s.carrier->src(h) == src && s.over[h] == phi) found = h;
        if (found == static_cast<Index>(-1)) throw Error("reversal: no morphism over rev(φ)");
        F.morphism_map.push_back(found);
    }
    return F;
}

// ---------------------------------------------------------------------------
// The comparison simplices(Tw^ℓ(c), N) -> simplices(c, 2N + 1)

struct EpsilonComparison {
    SimplexCat tw_simplices;
    SimplexCat base_simplices;
    FinFunctor functor;
};

// β = (f_0 -> ... -> f_n) in Tw^ℓ(c) with edges (a_k, b_k) corresponds to
// the string a_{n-1}, ..., a_0, f_0, b_0, ..., b_{n-1} of length 2n + 1.
inline Simplex epsilon_string(const TwCat& tw, const Simplex& beta) {
    const FinCat& c = *tw.base;
    const FinFunctor& eta = tw.eta;
    const Index m = c.morphism_count();
    std::vector<Index> as, bs;
    for (Index k = 0; k < beta.level; ++k) {
        Index e = eta.on_morphism(beta.arrow(k, k + 1));
        as.push_back(e / m);
        bs.push_back(e % m);
    }
    std::vector<Index> edges(as.rbegin(), as.rend());
    Index f0 = beta.first();
    edges.push_back(f0);
    edges.insert(edges.end(), bs.begin(), bs.end());
    Index start = beta.level == 0 ? c.src(f0) : c.src(as.back());
    return make_simplex(c, start, edges);
}

inline EpsilonComparison epsilon_compare(const CatPtr& c, Index max_dim, const Limits& limits = {}) {
    TwCat tw = twisted(c, Handedness::left);
    EpsilonComparison e{simplices(tw.carrier, max_dim, limits), simplices(c, epsilon_object(max_dim), limits), {}};
    const SimplexCat& src = e.tw_simplices;
    const SimplexCat& dst = e.base_simplices;
    e.functor = {src.carrier, dst.carrier, {}, {}};
    for (const auto& beta : src.simplices) {
        auto t = dst.find(epsilon_string(tw, beta));
        if (!t) throw Error("epsilon_compare: string missing from the target");
        e.functor.object_map.push_back(*t);
    }
    for (Index k = 0; k < src.over.size(); ++k) {
        Index s = e.functor.object_map[src.carrier->src(k)], t = e.functor.object_map[src.carrier->dst(k)];
        Index phi = dst.delta->morphism_of(epsilon(src.map_of(k), dst.max_dim));
        Index found = static_cast<Index>(-1);
        for (Index h : dst.carrier->incoming(t))
            if (dst.carrier->src(h) == s && dst.over[h] == phi) found = h;
        if (found == static_cast<Index>(-1))
            throw Error("epsilon_compare: no morphism over ε(φ) for " + src.carrier->morphism_id(k));
        e.functor.morphism_map.push_back(found);
    }
    return e;
}

// ---------------------------------------------------------------------------
// Categories of elements

enum class Variance { covariant, contravariant };

struct ElementsCat {
    SetFunctor weight;
    Variance variance = Variance::covariant;
    CatPtr carrier;
    FinFunctor projection;
    std::vector<std::pair<Index, Index>> points;  // per carrier object: (i, w)
    std::vector<Index> offsets;                  // per base object
};

inline std::string element_object_id(const SetFunctor& W, Index i, Index w) {
    return "(" + W.base->object_id(i) + "," + W.label(i, w) + ")";
}

// Covariant: morphisms (i, w) -> (i', w') are u: i -> i' with W(u)(w) = w'.
// Contravariant (W on opposite(c)): u: i -> i' in c with W(u)(w') = w; the
// projection lands in opposite(W.base).
inline ElementsCat elements(const SetFunctor& W, Variance variance) {
    ElementsCat el;
    el.weight = W;
    el.variance = variance;
    const FinCat& w_base = *W.base;
    CatPtr base = variance == Variance::covariant ? W.base : share(opposite(w_base));
    const FinCat& c = *base;
    FinCat::Builder b;
    for (Index i = 0; i < c.object_count(); ++i) {
        el.offsets.push_back(el.points.size());
        for (Index w = 0; w < W.size(i); ++w) {
            b.add_bare_object(element_object_id(W, i, w));
            el.points.emplace_back(i, w);
        }
    }
    // A carrier morphism over u is fixed by the element at its free end:
    // the source for covariant weights, the target for contravariant ones.
    std::vector<std::vector<Index>> by_free(c.morphism_count());
    std::vector<Index> over;
    for (Index u = 0; u < c.morphism_count(); ++u) {
        Index i = c.src(u), j = c.dst(u);
        Index free_obj = variance == Variance::covariant ? i : j;
        for (Index e = 0; e < W.size(free_obj); ++e) {
            Index s = variance == Variance::covariant ? e : W.apply(u, e);
            Index t = variance == Variance::covariant ? W.apply(u, e) : e;
            Index src = el.offsets[i] + s, dst = el.offsets[j] + t;
            Index k = b.add_morphism(b.object_id(src) + "-" + c.morphism_id(u) + "->" + b.object_id(dst), src, dst);
            if (c.is_identity(u)) b.set_identity(src, k);
            by_free[u].push_back(k);
            over.push_back(u);
        }
    }
    auto free_element = [&](Index k, bool source_end) {
        Index obj = source_end ? b.src(k) : b.dst(k);
        return el.points[obj].second;
    };
    const Index total = over.size();
    std::vector<std::vector<Index>> into(el.points.size());
    for (Index k = 0; k < total; ++k) into[b.dst(k)].push_back(k);
    for (Index g = 0; g < total; ++g)
        for (Index f : into[b.src(g)]) {
            Index gf = c.compose(over[g], over[f]);
            Index e = variance == Variance::covariant ? free_element(f, true) : free_element(g, false);
            b.set_compose(g, f, by_free[gf].at(e));
        }
    el.carrier = share(std::move(b).build(false));
    el.projection = {el.carrier, base, {}, over};
    for (const auto& [i, w] : el.points) el.projection.object_map.push_back(i);
    return el;
}

// The contravariant elements of the Hom presheaf on c × c^op (a functor on
// c^op × c) against Tw^r(c): ((x, y), f) ↦ f.
struct HomElementsComparison {
    ElementsCat elements;
    TwCat twisted_right;
    FinFunctor iso;  // elements carrier -> Tw^r carrier
};

inline HomElementsComparison elements_of_hom(const CatPtr& c) {
    SetFunctor hom = hom_end(c);
    HomElementsComparison h{elements(hom, Variance::contravariant), twisted(c, Handedness::right), {}};
    const FinCat& C = *c;
    const Index m = C.morphism_count();
    const ElementsCat& el = h.elements;
    h.iso = {el.carrier, h.twisted_right.carrier, {}, {}};
    for (const auto& [xy, e] : el.points) {
        const std::string& f = hom.label(xy, e);
        h.iso.object_map.push_back(C.morphism_index(f));
    }
    // Over (a, b) from ((x,y), f) to ((x',y'), f'): the Tw^ℓ morphism
    // f' -(a,b)-> f, read in the opposite.
    for (Index k = 0; k < el.carrier->morphism_count(); ++k) {
        Index u = el.projection.on_morphism(k);
        Index a = u / m, b = u % m;
        Index f = h.iso.object_map[el.carrier->src(k)], fp = h.iso.object_map[el.carrier->dst(k)];
        h.iso.morphism_map.push_back(h.twisted_right.carrier->morphism_index(twisted_morphism_id(C, fp, a, b, f)));
    }
    return h;
}

}  // namespace fincoend
