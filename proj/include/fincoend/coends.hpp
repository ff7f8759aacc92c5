#pragma once

// Ends and coends of Set-valued bifunctors, each by several independent
// routes, with comparisons through the diagonal.
//
// Conventions: an end-convention bifunctor lives on c^op × c, a
// coend-convention bifunctor on c × c^op. swap_convention converts.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fincoend/constructions.hpp"
#include "fincoend/fincat.hpp"
#include "fincoend/functors.hpp"
#include "fincoend/setops.hpp"

namespace fincoend {

enum class Convention { end, coend };

struct Bifunctor {
    CatPtr category;
    Convention convention = Convention::end;
    SetFunctor functor;

    // F(x, x).
    Index diagonal(Index x) const { return x * category->object_count() + x; }
};

inline Bifunctor end_bifunctor(const CatPtr& c, SetFunctor F) {
    if (!same_category(F.base, share(product(opposite(*c), *c))))
        throw ConventionMismatch("end bifunctor must live on c^op x c");
    return {c, Convention::end, std::move(F)};
}

inline Bifunctor coend_bifunctor(const CatPtr& c, SetFunctor F) {
    if (!same_category(F.base, share(product(*c, opposite(*c)))))
        throw ConventionMismatch("coend bifunctor must live on c x c^op");
    return {c, Convention::coend, std::move(F)};
}

// G(y, x) = F(x, y), moving between the two conventions.
inline Bifunctor swap_convention(const Bifunctor& F) {
    const FinCat& c = *F.category;
    FinCat op = opposite(c);
    if (F.convention == Convention::end) return {F.category, Convention::coend, swap_variables(F.functor, op, c)};
    return {F.category, Convention::end, swap_variables(F.functor, c, op)};
}

inline void require(const Bifunctor& F, Convention convention, const char* what) {
    if (F.convention != convention)
        throw ConventionMismatch(std::string(what) + ": bifunctor has the " +
                                 (F.convention == Convention::end ? "end" : "coend") + " convention");
}

enum class Route { equalizer, tw, simplices, simplicial, bk };

inline const char* route_name(Route r, Convention c = Convention::end) {
    switch (r) {
        case Route::equalizer: return c == Convention::end ? "equalizer" : "coequalizer";
        case Route::tw: return "tw";
        case Route::simplices: return "simplices";
        case Route::simplicial: return "simplicial";
        case Route::bk: return "bk";
    }
    return "unknown";
}

// Elements of an end as families (s_x ∈ F(x, x)) indexed by objects.
struct EndResult {
    Route route = Route::equalizer;
    std::vector<std::vector<Index>> families;

    Index size() const { return families.size(); }
};

// A coend as a partition; `diagonal_class[offsets[x] + s]` is the class of
// the diagonal element s ∈ F(x, x).
struct CoendResult {
    Route route = Route::equalizer;
    Index classes = 0;
    std::vector<Index> offsets;
    std::vector<Index> diagonal_class;

    Index size() const { return classes; }
};

// ---------------------------------------------------------------------------
// Ends

struct EndOptions {
    Limits limits;
    // Test-only mutation: ignore the wedge condition along non-identity
    // morphisms, so the equalizer route returns the whole product.
    bool drop_wedge = false;
};

// Families with F(id_x, f)(s_x) = F(f, id_y)(s_y) for every f: x -> y.
inline EndResult end_via_equalizer(const Bifunctor& F, const EndOptions& options = {}) {
    require(F, Convention::end, "end_via_equalizer");
    const FinCat& c = *F.category;
    const SetFunctor& G = F.functor;
    const Index n = c.object_count(), m = c.morphism_count();
    detail::BudgetCounter counter(options.limits.budget, "end via equalizer");

    // Wedge conditions, attached to the later of their two objects.
    struct Wedge {
        Index f, x, y;
    };
    std::vector<std::vector<Wedge>> checks(n);
    for (Index f = 0; f < m; ++f) {
        if (options.drop_wedge && !c.is_identity(f)) continue;
        Index x = c.src(f), y = c.dst(f);
        checks[std::max(x, y)].push_back({f, x, y});
    }
    EndResult r{Route::equalizer, {}};
    std::vector<Index> s(n);
    auto step = [&](auto& self, Index x) -> void {
        if (x == n) {
            r.families.push_back(s);
            return;
        }
        for (Index v = 0; v < G.size(F.diagonal(x)); ++v) {
            counter.tick();
            s[x] = v;
            bool ok = true;
            for (const auto& w : checks[x]) {
                Index left = G.apply(c.identity(w.x) * m + w.f, s[w.x]);
                Index right = G.apply(w.f * m + c.identity(w.y), s[w.y]);
                if (left != right) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, x + 1);
        }
    };
    step(step, 0);
    return r;
}

// Limit of F ∘ η over Tw^ℓ(c), restricted to the identities.
inline EndResult end_via_tw(const Bifunctor& F) {
    require(F, Convention::end, "end_via_tw");
    TwCat tw = twisted(F.category, Handedness::left);
    LimitResult lim = limit(compose(F.functor, tw.eta));
    EndResult r{Route::tw, {}};
    for (const auto& family : lim.elements) {
        std::vector<Index> s;
        for (Index x = 0; x < F.category->object_count(); ++x) s.push_back(family[F.category->identity(x)]);
        r.families.push_back(std::move(s));
    }
    return r;
}

namespace detail {

inline EndResult end_over_simplices(const Bifunctor& F, Index N, const Limits& limits) {
    SimplexCat s = simplices(F.category, N, limits);
    LimitResult lim = limit(compose(F.functor, simplex_endpoints(s, F.functor.base)));
    EndResult r{Route::simplices, {}};
    // Level-0 simplices come first, in object order.
    for (const auto& family : lim.elements)
        r.families.emplace_back(family.begin(), family.begin() + F.category->object_count());
    return r;
}

}  // namespace detail

// Limit over Δ_{/c}^{≤N} of F ∘ q, reported only if the result at N + 1 is
// the same.
inline EndResult end_via_simplices(const Bifunctor& F, Index N = 2, const Limits& limits = {}) {
    require(F, Convention::end, "end_via_simplices");
    EndResult at_n = detail::end_over_simplices(F, N, limits);
    EndResult next = detail::end_over_simplices(F, N + 1, limits);
    if (at_n.families != next.families)
        throw TruncationError("end over simplices did not stabilize between N = " + std::to_string(N) + " and " +
                              std::to_string(N + 1));
    return at_n;
}

// ---------------------------------------------------------------------------
// Coends

namespace detail {

inline CoendResult diagonal_classes(const Bifunctor& F, Route route, const std::vector<Index>& class_of_diagonal,
                                    Index classes) {
    CoendResult r{route, classes, {}, class_of_diagonal};
    Index total = 0;
    for (Index x = 0; x < F.category->object_count(); ++x) {
        r.offsets.push_back(total);
        total += F.functor.size(F.diagonal(x));
    }
    return r;
}

inline std::vector<Index> diagonal_offsets(const Bifunctor& F) {
    std::vector<Index> off;
    Index total = 0;
    for (Index x = 0; x < F.category->object_count(); ++x) {
        off.push_back(total);
        total += F.functor.size(F.diagonal(x));
    }
    off.push_back(total);
    return off;
}

}  // namespace detail

// ∐_{f: x -> y} F(x, y) ⇉ ∐_x F(x, x) via F(f, id_y) and F(id_x, f).
inline CoendResult coend_via_coequalizer(const Bifunctor& F) {
    require(F, Convention::coend, "coend_via_coequalizer");
    const FinCat& c = *F.category;
    const SetFunctor& G = F.functor;
    const Index n = c.object_count(), m = c.morphism_count();
    auto off = detail::diagonal_offsets(F);
    Function d0{{}, off.back()}, d1{{}, off.back()};
    for (Index f = 0; f < m; ++f) {
        Index x = c.src(f), y = c.dst(f);
        for (Index s = 0; s < G.size(x * n + y); ++s) {
            d0.values.push_back(off[y] + G.apply(f * m + c.identity(y), s));
            d1.values.push_back(off[x] + G.apply(c.identity(x) * m + f, s));
        }
    }
    Quotient q = coequalizer(d0, d1);
    return detail::diagonal_classes(F, Route::equalizer, q.class_of, q.size());
}

// Colimit of F ∘ η over Tw^r(c); diagonal elements sit at the identities.
inline CoendResult coend_via_tw(const Bifunctor& F) {
    require(F, Convention::coend, "coend_via_tw");
    TwCat tw = twisted(F.category, Handedness::right);
    ColimitResult col = colimit(compose(F.functor, tw.eta));
    std::vector<Index> cls;
    for (Index x = 0; x < F.category->object_count(); ++x)
        for (Index s = 0; s < F.functor.size(F.diagonal(x)); ++s)
            cls.push_back(col.injection(F.category->identity(x), s));
    return detail::diagonal_classes(F, Route::tw, cls, col.size());
}

namespace detail {

inline CoendResult coend_over_simplices(const Bifunctor& F, Index N, const Limits& limits) {
    SimplexCat s = simplices(F.category, N, limits);
    FinFunctor qop = opposite(simplex_endpoints(s));
    qop.target = F.functor.base;
    ColimitResult col = colimit(compose(F.functor, qop));
    std::vector<Index> cls;
    for (Index x = 0; x < F.category->object_count(); ++x)
        for (Index e = 0; e < F.functor.size(F.diagonal(x)); ++e) cls.push_back(col.injection(x, e));
    return diagonal_classes(F, Route::simplices, cls, col.size());
}

}  // namespace detail

// Colimit over (Δ_{/c}^{≤N})^op of F ∘ q^op, checked against N + 1.
inline CoendResult coend_via_simplices(const Bifunctor& F, Index N = 2, const Limits& limits = {}) {
    require(F, Convention::coend, "coend_via_simplices");
    CoendResult at_n = detail::coend_over_simplices(F, N, limits);
    CoendResult next = detail::coend_over_simplices(F, N + 1, limits);
    if (at_n.classes != next.classes || at_n.diagonal_class != next.diagonal_class)
        throw TruncationError("coend over simplices did not stabilize between N = " + std::to_string(N) + " and " +
                              std::to_string(N + 1));
    return at_n;
}

// Coequalizer of the face maps d_0, d_1 from level 1 to level 0 of the
// simplicial set [k] ↦ ∐_{α: [k] -> c} F(α(0), α(k)).
inline CoendResult coend_simplicial(const Bifunctor& F, const Limits& limits = {}) {
    require(F, Convention::coend, "coend_simplicial");
    SimplexCat s = simplices(F.category, 1, limits);
    FinFunctor qop = opposite(simplex_endpoints(s));
    qop.target = F.functor.base;
    SetFunctor G = compose(F.functor, qop);  // on the opposite of the carrier
    auto off = detail::diagonal_offsets(F);
    Function d0{{}, off.back()}, d1{{}, off.back()};
    const FinCat& k = *s.carrier;
    for (Index a : s.objects_at(1)) {
        // The two coface morphisms (v) -> α over δ^0 and δ^1.
        std::optional<Index> face0, face1;
        for (Index h : k.incoming(a)) {
            if (s.simplices[k.src(h)].level != 0) continue;
            if (s.map_of(h) == coface(1, 0)) face0 = h;
            if (s.map_of(h) == coface(1, 1)) face1 = h;
        }
        Index v0 = k.src(face0.value()), v1 = k.src(face1.value());
        for (Index e = 0; e < G.size(a); ++e) {
            d0.values.push_back(off[v0] + G.apply(*face0, e));
            d1.values.push_back(off[v1] + G.apply(*face1, e));
        }
    }
    Quotient q = coequalizer(d0, d1);
    return detail::diagonal_classes(F, Route::simplicial, q.class_of, q.size());
}

// ---------------------------------------------------------------------------
// Comparisons

struct Comparison {
    bool agree = true;
    std::string witness;     // first disagreement, empty when they agree
    std::vector<Index> map;  // element or class of the first side -> the second
};

inline std::string family_string(const std::vector<Index>& family) {
    std::string s = "(";
    for (Index k = 0; k < family.size(); ++k) s += (k ? "," : "") + std::to_string(family[k]);
    return s + ")";
}

// Matches families componentwise.
inline Comparison compare_ends(const EndResult& a, const EndResult& b) {
    Comparison cmp;
    std::map<std::vector<Index>, Index> index_b;
    for (Index k = 0; k < b.size(); ++k)
        if (!index_b.emplace(b.families[k], k).second) {
            cmp.agree = false;
            cmp.witness = std::string(route_name(b.route)) + " has a repeated family " + family_string(b.families[k]);
            return cmp;
        }
    std::set<Index> hit;
    for (const auto& fam : a.families) {
        auto it = index_b.find(fam);
        if (it == index_b.end() || !hit.insert(it->second).second) {
            cmp.agree = false;
            cmp.witness = "family " + family_string(fam) + " of route " + route_name(a.route) +
                          (it == index_b.end() ? " is missing from route " : " is repeated in route ") +
                          route_name(b.route);
            return cmp;
        }
        cmp.map.push_back(it->second);
    }
    if (hit.size() != b.size()) {
        for (Index k = 0; k < b.size(); ++k)
            if (!hit.count(k)) {
                cmp.agree = false;
                cmp.witness = "family " + family_string(b.families[k]) + " of route " + route_name(b.route) +
                              " is missing from route " + route_name(a.route);
                return cmp;
            }
    }
    return cmp;
}

// Two partitions of one labelled set, given by class_a and class_b. The
// relation {(class_a(d), class_b(d))} must be the graph of a bijection
// between all classes of both sides.
inline Comparison compare_partitions(const std::string& names, const std::vector<Index>& class_a, Index count_a,
                                     const std::vector<Index>& class_b, Index count_b) {
    Comparison cmp;
    const Index none = static_cast<Index>(-1);
    if (class_a.size() != class_b.size()) {
        cmp.agree = false;
        cmp.witness = names + ": the compared sets differ in size";
        return cmp;
    }
    cmp.map.assign(count_a, none);
    std::vector<Index> back(count_b, none);
    for (Index d = 0; d < class_a.size(); ++d) {
        Index ca = class_a[d], cb = class_b[d];
        if ((cmp.map[ca] != none && cmp.map[ca] != cb) || (back[cb] != none && back[cb] != ca)) {
            cmp.agree = false;
            cmp.witness = names + ": element " + std::to_string(d) + " splits or merges classes";
            return cmp;
        }
        cmp.map[ca] = cb;
        back[cb] = ca;
    }
    for (Index k = 0; k < count_a; ++k)
        if (cmp.map[k] == none) {
            cmp.agree = false;
            cmp.witness = names + ": class " + std::to_string(k) + " of the first side is not hit";
            return cmp;
        }
    for (Index k = 0; k < count_b; ++k)
        if (back[k] == none) {
            cmp.agree = false;
            cmp.witness = names + ": class " + std::to_string(k) + " of the second side is not hit";
            return cmp;
        }
    return cmp;
}

// Compares through the diagonal elements; every class must contain one.
inline Comparison compare_coends(const CoendResult& a, const CoendResult& b) {
    return compare_partitions(std::string(route_name(a.route, Convention::coend)) + "/" +
                                  route_name(b.route, Convention::coend),
                              a.diagonal_class, a.classes, b.diagonal_class, b.classes);
}

// ---------------------------------------------------------------------------
// Bousfield–Kan

struct BkResult {
    Quotient quotient;       // of the level-0 set ∐_x F(x)
    ColimitResult direct;
    Comparison comparison;   // BK class -> direct class
};

inline BkResult colim_bk(const SetFunctor& F) {
    const FinCat& c = *F.base;
    std::vector<Index> off;
    Index total = 0;
    for (Index x = 0; x < c.object_count(); ++x) {
        off.push_back(total);
        total += F.size(x);
    }
    Function d1{{}, total}, d0{{}, total};
    for (Index u = 0; u < c.morphism_count(); ++u)
        for (Index s = 0; s < F.size(c.src(u)); ++s) {
            d1.values.push_back(off[c.src(u)] + s);
            d0.values.push_back(off[c.dst(u)] + F.apply(u, s));
        }
    BkResult r{coequalizer(d0, d1), colimit(F), {}};
    // Both sides partition the same level-0 set; compare as coends do.
    CoendResult a{Route::bk, r.quotient.size(), off, r.quotient.class_of};
    CoendResult b{Route::equalizer, r.direct.size(), off, r.direct.class_of};
    r.comparison = compare_coends(a, b);
    return r;
}

// ---------------------------------------------------------------------------
// Fubini

struct FubiniReport {
    EndResult joint;       // over c × d, families indexed by objects (x, y)
    EndResult c_then_d;    // ∫_c ∫_d, flattened to the same indexing
    EndResult d_then_c;    // ∫_d ∫_c
    Comparison joint_vs_cd;
    Comparison joint_vs_dc;

    bool agree() const { return joint_vs_cd.agree && joint_vs_dc.agree; }
};

namespace detail {

// Index arithmetic on (c × d)^op × (c × d) for objects ((x1,y1),(x2,y2)).
struct FubiniShape {
    Index nc, nd, mc, md;

    Index object(Index x1, Index y1, Index x2, Index y2) const { return (x1 * nd + y1) * (nc * nd) + x2 * nd + y2; }
    Index morphism(Index a1, Index b1, Index a2, Index b2) const {
        return (a1 * md + b1) * (mc * md) + a2 * md + b2;
    }
};

// The inner end over `inner` with the outer variables frozen, as a
// bifunctor of the outer variables. `outer_first` says whether the outer
// category is the first factor of the product.
inline EndResult iterated_end(const Bifunctor& F, const CatPtr& outer, const CatPtr& inner, bool outer_first,
                              const Limits& limits) {
    const FinCat& o = *outer;
    const FinCat& in = *inner;
    const FinCat& c = outer_first ? o : in;
    const FinCat& d = outer_first ? in : o;
    FubiniShape sh{c.object_count(), d.object_count(), c.morphism_count(), d.morphism_count()};
    auto obj = [&](Index p1, Index q1, Index p2, Index q2) {
        return outer_first ? sh.object(p1, q1, p2, q2) : sh.object(q1, p1, q2, p2);
    };
    auto mor = [&](Index a1, Index b1, Index a2, Index b2) {
        return outer_first ? sh.morphism(a1, b1, a2, b2) : sh.morphism(b1, a1, b2, a2);
    };
    const SetFunctor& G = F.functor;
    const Index no = o.object_count(), mo = o.morphism_count(), ni = in.object_count(), mi = in.morphism_count();
    CatPtr inner_base = share(product(opposite(in), in));
    CatPtr outer_base = share(product(opposite(o), o));

    // Inner ends, one per pair of outer objects.
    std::vector<std::vector<std::vector<Index>>> inner_families(no * no);
    std::vector<std::map<std::vector<Index>, Index>> inner_index(no * no);
    for (Index p1 = 0; p1 < no; ++p1)
        for (Index p2 = 0; p2 < no; ++p2) {
            SetFunctor H{inner_base, std::vector<std::vector<std::string>>(ni * ni),
                         std::vector<std::vector<Index>>(mi * mi)};
            for (Index q1 = 0; q1 < ni; ++q1)
                for (Index q2 = 0; q2 < ni; ++q2) H.sets[q1 * ni + q2] = G.sets[obj(p1, q1, p2, q2)];
            for (Index b1 = 0; b1 < mi; ++b1)
                for (Index b2 = 0; b2 < mi; ++b2)
                    H.maps[b1 * mi + b2] = G.maps[mor(o.identity(p1), b1, o.identity(p2), b2)];
            EndOptions eo;
            eo.limits = limits;
            auto& fams = inner_families[p1 * no + p2];
            fams = end_via_equalizer({inner, Convention::end, H}, eo).families;
            for (Index k = 0; k < fams.size(); ++k) inner_index[p1 * no + p2].emplace(fams[k], k);
        }
    // The outer bifunctor acts componentwise on inner families.
    SetFunctor outer_functor{outer_base, std::vector<std::vector<std::string>>(no * no),
                             std::vector<std::vector<Index>>(mo * mo)};
    for (Index p = 0; p < no * no; ++p)
        for (const auto& fam : inner_families[p]) outer_functor.sets[p].push_back(family_string(fam));
    for (Index a1 = 0; a1 < mo; ++a1)
        for (Index a2 = 0; a2 < mo; ++a2) {
            // (a1, a2): (p1, p2) -> (p1', p2') with a1: p1' -> p1 in o.
            Index p1 = o.dst(a1), p2 = o.src(a2), p1t = o.src(a1), p2t = o.dst(a2);
            auto& table = outer_functor.maps[a1 * mo + a2];
            for (const auto& fam : inner_families[p1 * no + p2]) {
                std::vector<Index> moved(ni);
                for (Index q = 0; q < ni; ++q) moved[q] = G.apply(mor(a1, in.identity(q), a2, in.identity(q)), fam[q]);
                table.push_back(inner_index[p1t * no + p2t].at(moved));
            }
        }
    EndOptions eo;
    eo.limits = limits;
    EndResult outer_end = end_via_equalizer({outer, Convention::end, outer_functor}, eo);
    EndResult r{Route::equalizer, {}};
    for (const auto& fam : outer_end.families) {
        std::vector<Index> flat(sh.nc * sh.nd);
        for (Index p = 0; p < no; ++p) {
            const auto& inner_fam = inner_families[p * no + p][fam[p]];
            for (Index q = 0; q < ni; ++q) flat[outer_first ? p * sh.nd + q : q * sh.nd + p] = inner_fam[q];
        }
        r.families.push_back(std::move(flat));
    }
    std::sort(r.families.begin(), r.families.end());
    return r;
}

}  // namespace detail

// F is an end-convention bifunctor over c × d.
inline FubiniReport check_fubini(const Bifunctor& F, const CatPtr& c, const CatPtr& d, const Limits& limits = {}) {
    require(F, Convention::end, "check_fubini");
    if (!same_category(F.category, share(product(*c, *d))))
        throw ShapeMismatch("check_fubini: bifunctor is not over c x d");
    FubiniReport r;
    EndOptions eo;
    eo.limits = limits;
    r.joint = end_via_equalizer(F, eo);
    r.c_then_d = detail::iterated_end(F, c, d, true, limits);
    r.d_then_c = detail::iterated_end(F, d, c, false, limits);
    r.joint_vs_cd = compare_ends(r.joint, r.c_then_d);
    r.joint_vs_dc = compare_ends(r.joint, r.d_then_c);
    return r;
}

}  // namespace fincoend
