#pragma once

// Weighted limits and colimits of Set-valued functors, by the (co)end
// formula and through categories of elements.
//
// A weight for limits is a functor W: c -> Set over the same base as the
// diagram ψ. A weight for colimits is a presheaf W, i.e. a functor on
// opposite(c), against a diagram φ: c -> Set. The weighted limit is
// normalized to natural transformations W => ψ; the weighted colimit to a
// partition of the tagged elements (i, w ∈ W(i), s ∈ φ(i)).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fincoend/coends.hpp"
#include "fincoend/constructions.hpp"
#include "fincoend/fincat.hpp"
#include "fincoend/functors.hpp"
#include "fincoend/setops.hpp"

namespace fincoend {

enum class WeightedRoute { formula, fibration };

inline const char* weighted_route_name(WeightedRoute r) { return r == WeightedRoute::formula ? "formula" : "fibration"; }

struct WeightedLimit {
    WeightedRoute route = WeightedRoute::formula;
    std::vector<NatTransf> elements;  // sorted

    Index size() const { return elements.size(); }
};

struct WeightedColimit {
    WeightedRoute route = WeightedRoute::formula;
    Index classes = 0;
    std::vector<Index> offsets;   // per object i: start of the (w, s) block
    std::vector<Index> class_of;  // per tagged element (i, w, s), w-major

    Index size() const { return classes; }
    Index tagged(Index i, Index w, Index s, Index phi_size) const { return offsets.at(i) + w * phi_size + s; }
};

// ---------------------------------------------------------------------------
// Weighted limits

namespace detail {

// Function tables {0..n-1} -> {0..m-1} encoded as base-m numbers, digit k
// holding the image of k.
inline Index encode_function(const std::vector<Index>& f, Index m) {
    Index code = 0;
    for (Index k = f.size(); k-- > 0;) code = code * m + f[k];
    return code;
}

inline std::vector<Index> decode_function(Index code, Index n, Index m) {
    std::vector<Index> f(n);
    for (Index k = 0; k < n; ++k) {
        f[k] = code % m;
        code /= m;
    }
    return f;
}

inline Index function_count(Index n, Index m, Index cap) {
    Index r = 1;
    for (Index k = 0; k < n; ++k) {
        r *= m;
        if (r > cap) throw BudgetExceeded("function set of size above " + std::to_string(cap));
    }
    return r;
}

}  // namespace detail

// (j, j') ↦ Fun(W(j), ψ(j')) on c^op × c, (a, b) acting by h ↦ ψ(b) ∘ h ∘ W(a).
inline Bifunctor function_bifunctor(const SetFunctor& W, const SetFunctor& psi, const Limits& limits = {}) {
    if (!same_category(W.base, psi.base)) throw ConventionMismatch("weight and diagram live on different bases");
    CatPtr c = W.base;
    const FinCat& C = *c;
    const Index n = C.object_count(), m = C.morphism_count();
    SetFunctor K{share(product(opposite(C), C)), std::vector<std::vector<std::string>>(n * n),
                 std::vector<std::vector<Index>>(m * m)};
    for (Index j = 0; j < n; ++j)
        for (Index jp = 0; jp < n; ++jp) {
            Index count = detail::function_count(W.size(j), psi.size(jp), limits.budget);
            auto& labels = K.sets[j * n + jp];
            for (Index code = 0; code < count; ++code) {
                auto f = detail::decode_function(code, W.size(j), psi.size(jp));
                std::string s = "{";
                for (Index k = 0; k < f.size(); ++k)
                    s += (k ? "," : "") + W.label(j, k) + ":" + psi.label(jp, f[k]);
                labels.push_back(s + "}");
            }
        }
    for (Index a = 0; a < m; ++a)
        for (Index b = 0; b < m; ++b) {
            // a: j1 -> j in c, b: j' -> j2 in c; source (j, j'), target (j1, j2).
            Index j = C.dst(a), j1 = C.src(a), jp = C.src(b), j2 = C.dst(b);
            auto& table = K.maps[a * m + b];
            for (Index code = 0; code < K.sets[j * n + jp].size(); ++code) {
                auto h = detail::decode_function(code, W.size(j), psi.size(jp));
                std::vector<Index> g(W.size(j1));
                for (Index k = 0; k < g.size(); ++k) g[k] = psi.apply(b, h[W.apply(a, k)]);
                table.push_back(detail::encode_function(g, psi.size(j2)));
            }
        }
    return {c, Convention::end, std::move(K)};
}

// The end over c of Fun(W(j), ψ(j')).
inline WeightedLimit wlimit_via_end(const SetFunctor& W, const SetFunctor& psi, const Limits& limits = {}) {
    Bifunctor K = function_bifunctor(W, psi, limits);
    EndOptions eo;
    eo.limits = limits;
    EndResult end = end_via_equalizer(K, eo);
    WeightedLimit r{WeightedRoute::formula, {}};
    const FinCat& c = *W.base;
    for (const auto& family : end.families) {
        NatTransf t;
        for (Index j = 0; j < c.object_count(); ++j)
            t.components.push_back(detail::decode_function(family[j], W.size(j), psi.size(j)));
        r.elements.push_back(std::move(t));
    }
    std::sort(r.elements.begin(), r.elements.end());
    return r;
}

// The limit of ψ ∘ p over the covariant elements of W.
inline WeightedLimit wlimit_via_fibration(const SetFunctor& W, const SetFunctor& psi) {
    if (!same_category(W.base, psi.base)) throw ConventionMismatch("weight and diagram live on different bases");
    ElementsCat el = elements(W, Variance::covariant);
    el.projection.target = psi.base;
    LimitResult lim = limit(compose(psi, el.projection));
    WeightedLimit r{WeightedRoute::fibration, {}};
    const FinCat& c = *W.base;
    for (const auto& family : lim.elements) {
        NatTransf t;
        t.components.resize(c.object_count());
        for (Index k = 0; k < el.points.size(); ++k) t.components[el.points[k].first].push_back(family[k]);
        r.elements.push_back(std::move(t));
    }
    std::sort(r.elements.begin(), r.elements.end());
    return r;
}

inline Comparison compare_weighted_limits(const WeightedLimit& a, const WeightedLimit& b) {
    Comparison cmp;
    std::map<NatTransf, Index> index_b;
    for (Index k = 0; k < b.size(); ++k) index_b.emplace(b.elements[k], k);
    if (index_b.size() != b.size() || a.size() != b.size()) {
        cmp.agree = false;
        cmp.witness = std::string(weighted_route_name(a.route)) + " has " + std::to_string(a.size()) + " elements, " +
                      weighted_route_name(b.route) + " has " + std::to_string(b.size());
        return cmp;
    }
    for (Index k = 0; k < a.size(); ++k) {
        auto it = index_b.find(a.elements[k]);
        if (it == index_b.end()) {
            cmp.agree = false;
            cmp.witness = "element " + std::to_string(k) + " of the " + weighted_route_name(a.route) +
                          " route is missing from the " + weighted_route_name(b.route) + " route";
            return cmp;
        }
        cmp.map.push_back(it->second);
    }
    return cmp;
}

// ---------------------------------------------------------------------------
// Weighted colimits

namespace detail {

inline void require_presheaf_weight(const SetFunctor& W, const SetFunctor& phi) {
    if (!same_category(W.base, share(opposite(*phi.base))))
        throw ConventionMismatch("colimit weight must be a presheaf on the base of the diagram");
}

inline std::vector<Index> tagged_offsets(const SetFunctor& W, const SetFunctor& phi) {
    std::vector<Index> off;
    Index total = 0;
    for (Index i = 0; i < phi.base->object_count(); ++i) {
        off.push_back(total);
        total += W.size(i) * phi.size(i);
    }
    return off;
}

}  // namespace detail

// (i, i') ↦ W(i') × φ(i) on c × c^op; the pair (w, s) sits at w * |φ(i)| + s.
inline Bifunctor tensor_bifunctor(const SetFunctor& W, const SetFunctor& phi) {
    detail::require_presheaf_weight(W, phi);
    CatPtr c = phi.base;
    const FinCat& C = *c;
    const Index n = C.object_count(), m = C.morphism_count();
    SetFunctor B{share(product(C, opposite(C))), std::vector<std::vector<std::string>>(n * n),
                 std::vector<std::vector<Index>>(m * m)};
    for (Index i = 0; i < n; ++i)
        for (Index ip = 0; ip < n; ++ip)
            for (const auto& w : W.sets[ip])
                for (const auto& s : phi.sets[i]) B.sets[i * n + ip].push_back(pair_id(w, s));
    for (Index a = 0; a < m; ++a)
        for (Index b = 0; b < m; ++b) {
            // a: i -> i2 in c; b: i2' -> i' in c, acting W(i') -> W(i2').
            Index i = C.src(a), i2 = C.dst(a), ip = C.dst(b);
            auto& table = B.maps[a * m + b];
            for (Index w = 0; w < W.size(ip); ++w)
                for (Index s = 0; s < phi.size(i); ++s)
                    table.push_back(W.apply(b, w) * phi.size(i2) + phi.apply(a, s));
        }
    return {c, Convention::coend, std::move(B)};
}

// The coend over c of W(i') × φ(i).
inline WeightedColimit wcolimit_via_coend(const SetFunctor& W, const SetFunctor& phi) {
    Bifunctor B = tensor_bifunctor(W, phi);
    CoendResult co = coend_via_coequalizer(B);
    // Diagonal blocks W(i) × φ(i) in w-major order are exactly the tagged elements.
    return {WeightedRoute::formula, co.classes, detail::tagged_offsets(W, phi), co.diagonal_class};
}

// The colimit of φ ∘ p over the contravariant elements of W.
inline WeightedColimit wcolimit_via_fibration(const SetFunctor& W, const SetFunctor& phi) {
    detail::require_presheaf_weight(W, phi);
    ElementsCat el = elements(W, Variance::contravariant);
    el.projection.target = phi.base;
    ColimitResult col = colimit(compose(phi, el.projection));
    WeightedColimit r{WeightedRoute::fibration, col.size(), detail::tagged_offsets(W, phi), {}};
    for (Index k = 0; k < el.points.size(); ++k) {
        Index i = el.points[k].first;
        for (Index s = 0; s < phi.size(i); ++s) r.class_of.push_back(col.injection(k, s));
    }
    return r;
}

inline Comparison compare_weighted_colimits(const WeightedColimit& a, const WeightedColimit& b) {
    return compare_partitions(std::string(weighted_route_name(a.route)) + "/" + weighted_route_name(b.route),
                              a.class_of, a.classes, b.class_of, b.classes);
}

// ---------------------------------------------------------------------------
// Natural transformations as a weighted limit

struct NatSpaceReport {
    std::vector<NatTransf> nat;  // enumerated, sorted
    WeightedLimit weighted;
    Comparison comparison;
};

// Both arguments are presheaves on the same base, i.e. functors on one
// category d = c^op; the weighted limit is taken over d.
inline NatSpaceReport nat_space(const SetFunctor& phi, const SetFunctor& psi, const Limits& limits = {}) {
    NatSpaceReport r;
    r.nat = enumerate_nat(phi, psi, limits);
    std::sort(r.nat.begin(), r.nat.end());
    r.weighted = wlimit_via_end(phi, psi, limits);
    r.comparison = compare_weighted_limits({WeightedRoute::fibration, r.nat}, r.weighted);
    if (!r.comparison.agree) r.comparison.witness = "enumerated/weighted: " + r.comparison.witness;
    return r;
}

// ---------------------------------------------------------------------------
// Density

struct DensityEntry {
    Index object = 0;
    Index colimit_size = 0;
    Index presheaf_size = 0;
    bool well_defined = true;
    bool bijective = true;
};

struct DensityReport {
    std::vector<DensityEntry> entries;

    bool ok() const {
        for (const auto& e : entries)
            if (!e.well_defined || !e.bijective) return false;
        return true;
    }
};

// For each x, the map colim_{(i, e)} Hom(x, i) -> φ(x), [(i, e, h)] ↦ φ(h)(e).
inline DensityReport density_check(const SetFunctor& phi) {
    ElementsCat el = elements(phi, Variance::contravariant);
    CatPtr c = el.projection.target;
    DensityReport report;
    for (Index x = 0; x < c->object_count(); ++x) {
        SetFunctor hx = corepresentable(c, x);
        SetFunctor D = compose(hx, el.projection);
        ColimitResult col = colimit(D);
        DensityEntry entry{x, col.size(), phi.size(x), true, true};
        const Index none = static_cast<Index>(-1);
        std::vector<Index> value(col.size(), none);
        for (Index k = 0; k < el.points.size(); ++k) {
            auto [i, e] = el.points[k];
            for (Index p = 0; p < D.size(k); ++p) {
                Index h = c->morphism_index(D.label(k, p));
                Index v = phi.apply(h, e);
                Index cls = col.injection(k, p);
                if (value[cls] != none && value[cls] != v) entry.well_defined = false;
                value[cls] = v;
            }
        }
        std::vector<bool> hit(phi.size(x), false);
        for (Index v : value) {
            if (v == none || hit[v]) entry.bijective = false;
            if (v != none) hit[v] = true;
        }
        for (bool h : hit)
            if (!h) entry.bijective = false;
        report.entries.push_back(entry);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Colimit extension of a functor W: c -> Set along the Yoneda embedding,
// φ ↦ colim^φ W for presheaves φ on c.

// The objectwise coequalizer of two presheaf maps α, β: P => Q. Returns the
// quotient presheaf together with the quotient map Q => quotient.
struct PresheafQuotient {
    SetFunctor presheaf;
    NatTransf map;
};

inline PresheafQuotient coequalizer_presheaf(const SetFunctor& P, const SetFunctor& Q, const NatTransf& alpha,
                                             const NatTransf& beta) {
    const FinCat& d = *Q.base;
    PresheafQuotient r{{Q.base, {}, {}}, {}};
    std::vector<Quotient> quotients;
    for (Index x = 0; x < d.object_count(); ++x) {
        quotients.push_back(coequalizer({alpha.components[x], Q.size(x)}, {beta.components[x], Q.size(x)}));
        std::vector<std::string> labels;
        for (const auto& cls : quotients.back().classes) labels.push_back(Q.label(x, cls.front()));
        r.presheaf.sets.push_back(std::move(labels));
        r.map.components.push_back(quotients.back().class_of);
    }
    for (Index u = 0; u < d.morphism_count(); ++u) {
        std::vector<Index> table;
        for (const auto& cls : quotients[d.src(u)].classes)
            table.push_back(quotients[d.dst(u)].class_of[Q.apply(u, cls.front())]);
        r.presheaf.maps.push_back(std::move(table));
    }
    (void)P;
    return r;
}

struct CocompletionReport {
    std::vector<Comparison> representables;  // per object i: colim^{Hom(-, i)} W vs W(i)
    std::vector<Comparison> coproducts;
    std::vector<Comparison> coequalizers;

    bool ok() const {
        for (const auto* group : {&representables, &coproducts, &coequalizers})
            for (const auto& c : *group)
                if (!c.agree) return false;
        return true;
    }
    Index checks() const { return representables.size() + coproducts.size() + coequalizers.size(); }
};

namespace detail {

// colim^{Hom(-, i)} W against W(i) via [(j, h, s)] ↦ W(h)(s).
inline Comparison representable_comparison(const SetFunctor& W, Index i) {
    const CatPtr& c = W.base;
    SetFunctor y = representable_presheaf(c, i);
    WeightedColimit col = wcolimit_via_coend(y, W);
    std::vector<Index> target;
    for (Index j = 0; j < c->object_count(); ++j)
        for (Index h = 0; h < y.size(j); ++h)
            for (Index s = 0; s < W.size(j); ++s) target.push_back(W.apply(c->morphism_index(y.label(j, h)), s));
    return compare_partitions("representable", col.class_of, col.classes, target, W.size(i));
}

// colim^{P ⊔ Q} W against colim^P W ⊔ colim^Q W, tagged element by element.
inline Comparison coproduct_comparison(const SetFunctor& W, const SetFunctor& P, const SetFunctor& Q) {
    SetFunctor S = coproduct(P, Q);
    WeightedColimit whole = wcolimit_via_coend(S, W), left = wcolimit_via_coend(P, W), right = wcolimit_via_coend(Q, W);
    std::vector<Index> target;
    for (Index j = 0; j < W.base->object_count(); ++j) {
        for (Index w = 0; w < P.size(j); ++w)
            for (Index s = 0; s < W.size(j); ++s) target.push_back(left.class_of[left.tagged(j, w, s, W.size(j))]);
        for (Index w = 0; w < Q.size(j); ++w)
            for (Index s = 0; s < W.size(j); ++s)
                target.push_back(left.size() + right.class_of[right.tagged(j, w, s, W.size(j))]);
    }
    return compare_partitions("coproduct", whole.class_of, whole.classes, target, left.size() + right.size());
}

// colim^{coeq(α, β)} W against the coequalizer of the induced maps
// colim^P W ⇉ colim^Q W, compared on the tagged elements of Q.
inline Comparison coequalizer_comparison(const SetFunctor& W, const SetFunctor& P, const SetFunctor& Q,
                                         const NatTransf& alpha, const NatTransf& beta) {
    WeightedColimit cp = wcolimit_via_coend(P, W), cq = wcolimit_via_coend(Q, W);
    Function fa{std::vector<Index>(cp.size(), 0), cq.size()}, fb{std::vector<Index>(cp.size(), 0), cq.size()};
    for (Index j = 0; j < W.base->object_count(); ++j)
        for (Index w = 0; w < P.size(j); ++w)
            for (Index s = 0; s < W.size(j); ++s) {
                Index k = cp.class_of[cp.tagged(j, w, s, W.size(j))];
                fa.values[k] = cq.class_of[cq.tagged(j, alpha.components[j][w], s, W.size(j))];
                fb.values[k] = cq.class_of[cq.tagged(j, beta.components[j][w], s, W.size(j))];
            }
    Quotient side = coequalizer(fa, fb);
    PresheafQuotient R = coequalizer_presheaf(P, Q, alpha, beta);
    WeightedColimit cr = wcolimit_via_coend(R.presheaf, W);
    std::vector<Index> via_side, via_quotient;
    for (Index j = 0; j < W.base->object_count(); ++j)
        for (Index w = 0; w < Q.size(j); ++w)
            for (Index s = 0; s < W.size(j); ++s) {
                via_side.push_back(side.class_of[cq.class_of[cq.tagged(j, w, s, W.size(j))]]);
                via_quotient.push_back(cr.class_of[cr.tagged(j, R.map.components[j][w], s, W.size(j))]);
            }
    return compare_partitions("coequalizer", via_side, side.size(), via_quotient, cr.size());
}

}  // namespace detail

// Representables go to W(i); binary coproducts and coequalizers of parallel
// maps out of representables are preserved.
inline CocompletionReport cocompletion_check(const SetFunctor& W, const Limits& limits = {}, Index max_pairs = 4) {
    const CatPtr& c = W.base;
    CocompletionReport r;
    const Index n = c->object_count();
    std::vector<SetFunctor> reps;
    for (Index i = 0; i < n; ++i) {
        reps.push_back(representable_presheaf(c, i));
        if (i) reps.back().base = reps.front().base;
        r.representables.push_back(detail::representable_comparison(W, i));
    }
    for (Index i = 0; i < n; ++i)
        for (Index j = i; j < n; ++j) r.coproducts.push_back(detail::coproduct_comparison(W, reps[i], reps[j]));
    // Parallel pairs y(i) ⇉ y(j) and y(i) ⇉ y(j) ⊔ y(j); posets only have the latter.
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            for (const SetFunctor& target : {reps[j], coproduct(reps[j], reps[j])}) {
                auto maps = enumerate_nat(reps[i], target, limits);
                Index pairs = 0;
                for (Index a = 0; a < maps.size() && pairs < max_pairs; ++a)
                    for (Index b = a + 1; b < maps.size() && pairs < max_pairs; ++b, ++pairs)
                        r.coequalizers.push_back(
                            detail::coequalizer_comparison(W, reps[i], target, maps[a], maps[b]));
            }
    return r;
}

// ---------------------------------------------------------------------------
// Coends as colimits weighted by Hom

struct CoendAsWeightedReport {
    bool isomorphism = false;  // elements of Hom ≅ Tw^r, and the diagrams match through it
    CoendResult weighted;
    CoendResult twisted;
    Comparison comparison;

    bool ok() const { return isomorphism && comparison.agree; }
};

// F is a coend-convention bifunctor on c × c^op; the weight is the Hom
// presheaf on c × c^op.
inline CoendAsWeightedReport coend_as_weighted(const Bifunctor& F) {
    require(F, Convention::coend, "coend_as_weighted");
    const CatPtr& c = F.category;
    const Index n = c->object_count();
    CoendAsWeightedReport r;
    HomElementsComparison h = elements_of_hom(c);
    h.elements.projection.target = F.functor.base;
    SetFunctor over_elements = compose(F.functor, h.elements.projection);
    TwCat& tw = h.twisted_right;
    tw.eta.target = F.functor.base;
    SetFunctor over_tw = compose(compose(F.functor, tw.eta), h.iso);
    r.isomorphism = is_isomorphism(h.iso) && over_elements.sets == over_tw.sets && over_elements.maps == over_tw.maps;

    ColimitResult col = colimit(over_elements);
    std::vector<Index> cls;
    for (Index x = 0; x < n; ++x) {
        Index xx = x * n + x;
        Index id_pos = *h.elements.weight.find_element(xx, c->morphism_id(c->identity(x)));
        Index k = h.elements.offsets[xx] + id_pos;
        for (Index s = 0; s < F.functor.size(xx); ++s) cls.push_back(col.injection(k, s));
    }
    r.weighted = detail::diagonal_classes(F, Route::tw, cls, col.size());
    r.twisted = coend_via_tw(F);
    r.comparison = compare_partitions("weighted/tw", r.weighted.diagonal_class, r.weighted.classes,
                                      r.twisted.diagonal_class, r.twisted.classes);
    return r;
}

}  // namespace fincoend
