#pragma once

// The property-check suites run by `fincoend check` and the acceptance
// binary. Each invariant is evaluated on every instance of the seeded
// corpus; exceptions count as failures and become the failure witness.

#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fincoend/coends.hpp"
#include "fincoend/constructions.hpp"
#include "fincoend/corpus.hpp"
#include "fincoend/simplicial.hpp"
#include "fincoend/weighted.hpp"

namespace fincoend::checks {

struct RunConfig {
    std::uint64_t seed = 1;
    std::string suite = "all";  // all | ends | weighted | simplicial | fincat
    Index trunc = 2;
    Index set_cap = 4;
    Index budget = 1'000'000;
    bool structured = false;
    bool mutate = false;  // skip wedge conditions in the equalizer end route

    corpus::Params params() const { return {seed, set_cap, {set_cap, budget}}; }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all", "ends", "weighted", "simplicial", "fincat"};
    return names;
}

struct Failure {
    std::string instance;
    std::string witness;
};

struct InvariantResult {
    std::string suite;
    std::string name;
    Index passed = 0;
    Index failed = 0;
    std::vector<Failure> failures;  // at most max_failures are kept
    double seconds = 0;             // not part of the structured output

    static constexpr Index max_failures = 5;

    Index instances() const { return passed + failed; }
    bool ok() const { return failed == 0; }
};

struct Summary {
    RunConfig config;
    std::vector<InvariantResult> results;

    bool ok() const {
        for (const auto& r : results)
            if (!r.ok()) return false;
        return true;
    }
    const InvariantResult* find(const std::string& name) const {
        for (const auto& r : results)
            if (r.name == name) return &r;
        return nullptr;
    }
};

// A check returns an empty string on success, otherwise a witness.
using Check = std::function<std::string()>;

class Recorder {
public:
    Recorder(Summary& summary, std::string suite, std::string name) : summary_(summary) {
        result_.suite = std::move(suite);
        result_.name = std::move(name);
        start_ = std::chrono::steady_clock::now();
    }
    Recorder(const Recorder&) = delete;
    Recorder& operator=(const Recorder&) = delete;
    ~Recorder() {
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        summary_.results.push_back(std::move(result_));
    }

    void run(const std::string& instance, const Check& check) {
        std::string witness;
        try {
            witness = check();
        } catch (const std::exception& e) {
            witness = std::string("error: ") + e.what();
        }
        if (witness.empty()) {
            ++result_.passed;
            return;
        }
        ++result_.failed;
        if (result_.failures.size() < InvariantResult::max_failures) result_.failures.push_back({instance, witness});
    }

private:
    Summary& summary_;
    InvariantResult result_;
    std::chrono::steady_clock::time_point start_;
};

namespace detail {

inline std::string first_disagreement(std::initializer_list<std::pair<const char*, Comparison>> comparisons) {
    for (const auto& [what, cmp] : comparisons)
        if (!cmp.agree) return std::string(what) + ": " + cmp.witness;
    return {};
}

inline std::string expect(bool condition, const std::string& witness) { return condition ? std::string() : witness; }

}  // namespace detail

// ---------------------------------------------------------------------------
// fincat

inline void run_fincat(const RunConfig& cfg, Summary& out) {
    auto p = cfg.params();
    auto cats = corpus::categories();
    {
        Recorder rec(out, "fincat", "categories_valid");
        for (const auto& [name, c] : cats)
            rec.run(name, [&] {
                auto r = validate_category(*c);
                return r.ok() ? std::string() : r.message;
            });
    }
    {
        Recorder rec(out, "fincat", "opposite_involution");
        for (const auto& [name, c] : cats)
            rec.run(name, [&] { return detail::expect(opposite(opposite(*c)) == *c, "op(op(c)) differs from c"); });
    }
    {
        // Index arithmetic makes ((x,y),z) and (x,(y,z)) the same index, so
        // the identity-index map must be a functor both ways.
        Recorder rec(out, "fincat", "product_associative_unital");
        auto fs = corpus::factors();
        CatPtr t = share(catalog::terminal());
        for (const auto& a : fs)
            for (const auto& b : fs)
                for (const auto& c : fs)
                    rec.run(a.name + "*" + b.name + "*" + c.name, [&] {
                        auto same_indices = [](const CatPtr& x, const CatPtr& y) {
                            FinFunctor F{x, y, {}, {}};
                            for (Index k = 0; k < x->object_count(); ++k) F.object_map.push_back(k);
                            for (Index k = 0; k < x->morphism_count(); ++k) F.morphism_map.push_back(k);
                            return F;
                        };
                        CatPtr left = share(product(product(*a.cat, *b.cat), *c.cat));
                        CatPtr right = share(product(*a.cat, product(*b.cat, *c.cat)));
                        if (!is_isomorphism(same_indices(left, right)))
                            return std::string("associator is not an isomorphism");
                        return detail::expect(is_isomorphism(same_indices(share(product(*t, *a.cat)), a.cat)) &&
                                                  is_isomorphism(same_indices(share(product(*a.cat, *t)), a.cat)),
                                              "unitor is not an isomorphism");
                    });
    }
    {
        Recorder rec(out, "fincat", "functors_valid");
        for (const auto& d : corpus::diagrams(p))
            rec.run(d.name, [&] {
                auto r = validate_set_functor(d.F);
                return r.ok() ? std::string() : r.message;
            });
        for (const auto& d : corpus::presheaves(p))
            rec.run("presheaf " + d.name, [&] {
                auto r = validate_set_functor(d.F);
                return r.ok() ? std::string() : r.message;
            });
    }
    {
        Recorder rec(out, "fincat", "yoneda");
        for (const auto& d : corpus::presheaves(p)) {
            // The presheaf lives on op(c); representables on c are presheaves there.
            CatPtr c = share(opposite(*d.F.base));
            for (Index x = 0; x < c->object_count(); ++x)
                rec.run(d.name + " at " + c->object_id(x), [&] {
                    SetFunctor y = rebase(representable_presheaf(c, x), d.F.base);
                    Index n = enumerate_nat(y, d.F, p.limits).size();
                    return detail::expect(n == d.F.size(x), std::to_string(n) + " transformations, |F(x)| = " +
                                                                std::to_string(d.F.size(x)));
                });
        }
    }
}

// ---------------------------------------------------------------------------
// ends

inline void run_ends(const RunConfig& cfg, Summary& out) {
    auto p = cfg.params();
    EndOptions eo;
    eo.limits = p.limits;
    eo.drop_wedge = cfg.mutate;
    auto ends = corpus::end_instances(p);
    {
        Recorder rec(out, "ends", "end_routes");
        for (const auto& inst : ends)
            rec.run(inst.name, [&] {
                EndResult a = end_via_equalizer(inst.F, eo);
                EndResult b = end_via_tw(inst.F);
                EndResult c = end_via_simplices(inst.F, cfg.trunc, p.limits);
                return detail::first_disagreement({{"equalizer/tw", compare_ends(a, b)},
                                                   {"equalizer/simplices", compare_ends(a, c)}});
            });
    }
    {
        Recorder rec(out, "ends", "coend_routes");
        for (const auto& inst : corpus::coend_instances(p))
            rec.run(inst.name, [&] {
                CoendResult a = coend_via_coequalizer(inst.F);
                CoendResult b = coend_via_tw(inst.F);
                CoendResult c = coend_via_simplices(inst.F, cfg.trunc, p.limits);
                CoendResult d = coend_simplicial(inst.F);
                return detail::first_disagreement({{"coequalizer/tw", compare_coends(a, b)},
                                                   {"coequalizer/simplices", compare_coends(a, c)},
                                                   {"coequalizer/simplicial", compare_coends(a, d)}});
            });
    }
    {
        Recorder rec(out, "ends", "bk");
        for (const auto& d : corpus::diagrams(p))
            rec.run(d.name, [&] {
                BkResult r = colim_bk(d.F);
                return r.comparison.agree ? std::string() : r.comparison.witness;
            });
    }
    {
        Recorder rec(out, "ends", "fubini");
        for (const auto& inst : corpus::fubini_instances(p))
            rec.run(inst.name, [&] {
                FubiniReport r = check_fubini(inst.F, inst.c, inst.d, p.limits);
                return detail::first_disagreement({{"joint/c then d", r.joint_vs_cd}, {"joint/d then c", r.joint_vs_dc}});
            });
    }
    {
        // end_via_simplices(N) itself compares N with N + 1.
        Recorder rec(out, "ends", "stabilization");
        for (const auto& inst : ends)
            rec.run(inst.name, [&] {
                EndResult reference = end_via_equalizer(inst.F, eo);
                for (Index n = 1; n <= 2; ++n) {
                    EndResult r = end_via_simplices(inst.F, n, p.limits);
                    Comparison cmp = compare_ends(reference, r);
                    if (!cmp.agree) return "N=" + std::to_string(n) + ": " + cmp.witness;
                }
                return std::string();
            });
    }
}

// ---------------------------------------------------------------------------
// weighted

inline void run_weighted(const RunConfig& cfg, Summary& out) {
    auto p = cfg.params();
    {
        Recorder rec(out, "weighted", "wlimit_routes");
        for (const auto& inst : corpus::pairs(p, corpus::PairKind::limit))
            rec.run(inst.name, [&] {
                WeightedLimit a = wlimit_via_end(inst.weight, inst.diagram, p.limits);
                WeightedLimit b = wlimit_via_fibration(inst.weight, inst.diagram);
                return detail::first_disagreement({{"formula/fibration", compare_weighted_limits(a, b)}});
            });
    }
    {
        Recorder rec(out, "weighted", "wcolimit_routes");
        for (const auto& inst : corpus::pairs(p, corpus::PairKind::colimit))
            rec.run(inst.name, [&] {
                WeightedColimit a = wcolimit_via_coend(inst.weight, inst.diagram);
                WeightedColimit b = wcolimit_via_fibration(inst.weight, inst.diagram);
                return detail::first_disagreement({{"formula/fibration", compare_weighted_colimits(a, b)}});
            });
    }
    {
        Recorder rec(out, "weighted", "conical");
        for (const auto& d : corpus::diagrams(p))
            rec.run(d.name, [&] {
                const CatPtr& c = d.F.base;
                WeightedColimit w = wcolimit_via_coend(singleton_functor(share(opposite(*c))), d.F);
                ColimitResult col = colimit(d.F);
                Comparison cc = compare_partitions("weighted/conical", w.class_of, w.classes, col.class_of, col.size());
                if (!cc.agree) return "colimit: " + cc.witness;
                WeightedLimit l = wlimit_via_end(singleton_functor(c), d.F, p.limits);
                std::set<std::vector<Index>> families;
                for (const auto& t : l.elements) {
                    std::vector<Index> f;
                    for (const auto& comp : t.components) f.push_back(comp.at(0));
                    families.insert(f);
                }
                auto lim = limit(d.F).elements;
                return detail::expect(families == std::set<std::vector<Index>>(lim.begin(), lim.end()),
                                      "limit: weighted families differ from the limit");
            });
    }
    {
        Recorder rec(out, "weighted", "nat_space");
        for (const auto& inst : corpus::pairs(p, corpus::PairKind::nat))
            rec.run(inst.name, [&] {
                NatSpaceReport r = nat_space(inst.weight, inst.diagram, p.limits);
                return r.comparison.agree ? std::string() : r.comparison.witness;
            });
    }
    {
        Recorder rec(out, "weighted", "density");
        for (const auto& d : corpus::presheaves(p))
            rec.run(d.name, [&] {
                DensityReport r = density_check(d.F);
                for (const auto& e : r.entries)
                    if (!e.well_defined || !e.bijective)
                        return "object " + d.F.base->object_id(e.object) + ": colimit " +
                               std::to_string(e.colimit_size) + ", presheaf " + std::to_string(e.presheaf_size) +
                               (e.well_defined ? ", not bijective" : ", not well defined");
                return std::string();
            });
    }
    {
        Recorder rec(out, "weighted", "coend_as_weighted");
        for (const auto& inst : corpus::coend_instances(p))
            rec.run(inst.name, [&] {
                CoendAsWeightedReport r = coend_as_weighted(inst.F);
                if (!r.isomorphism) return std::string("elements of Hom and Tw^r do not match");
                return r.comparison.agree ? std::string() : r.comparison.witness;
            });
    }
    {
        Recorder rec(out, "weighted", "cocompletion");
        for (const auto& d : corpus::diagrams(p))
            rec.run(d.name, [&] {
                CocompletionReport r = cocompletion_check(d.F, p.limits);
                for (const auto* group : {&r.representables, &r.coproducts, &r.coequalizers})
                    for (const auto& c : *group)
                        if (!c.agree) return c.witness;
                return std::string();
            });
    }
}

// ---------------------------------------------------------------------------
// simplicial

inline void run_simplicial(const RunConfig& /*cfg*/, Summary& out) {
    {
        Recorder rec(out, "simplicial", "delta_homs");
        DeltaTrunc d = delta(4);
        auto binomial = [](Index n, Index k) {
            Index r = 1;
            for (Index i = 1; i <= k; ++i) r = r * (n - k + i) / i;
            return r;
        };
        for (Index n = 0; n <= 4; ++n)
            for (Index m = 0; m <= 4; ++m)
                rec.run("[" + std::to_string(n) + "]->[" + std::to_string(m) + "]", [&] {
                    Index got = d.cat->hom(n, m).size(), want = binomial(n + m + 1, n + 1);
                    return detail::expect(got == want, std::to_string(got) + " maps, expected " + std::to_string(want));
                });
    }
    DeltaStarTrunc s = delta_star(3);
    DeltaTrunc d = delta(3);
    {
        Recorder rec(out, "simplicial", "adjunction_pi_l");
        FinFunctor P = pi_functor(s, d), L = l_functor(d, s);
        for (Index x = 0; x < s.objects.size(); ++x)
            for (Index m = 0; m <= 3; ++m)
                rec.run(s.cat->object_id(x) + " vs [" + std::to_string(m) + "]", [&] {
                    auto lhs = s.cat->hom(x, L.on_object(m));
                    auto rhs = d.cat->hom(s.objects[x].n, m);
                    std::set<Index> image;
                    for (Index h : lhs) image.insert(P.on_morphism(h));
                    if (lhs.size() != rhs.size() || image != std::set<Index>(rhs.begin(), rhs.end()))
                        return std::string("pi is not a bijection on this hom-set");
                    for (Index h : lhs)
                        for (Index k : s.cat->incoming(x))
                            for (Index psi : d.cat->outgoing(m)) {
                                Index moved = s.cat->compose(L.on_morphism(psi), s.cat->compose(h, k));
                                Index want = d.cat->compose(psi, d.cat->compose(P.on_morphism(h), P.on_morphism(k)));
                                if (P.on_morphism(moved) != want)
                                    return "not natural at " + s.cat->morphism_id(h) + ", " + s.cat->morphism_id(k) +
                                           ", " + d.cat->morphism_id(psi);
                            }
                    return std::string();
                });
    }
    {
        Recorder rec(out, "simplicial", "adjunction_l_lambda");
        FinFunctor L = l_functor(d, s), Lam = lambda_functor(s, d);
        for (Index n = 0; n <= 3; ++n)
            for (Index y = 0; y < s.objects.size(); ++y)
                rec.run("[" + std::to_string(n) + "] vs " + s.cat->object_id(y), [&] {
                    auto lhs = s.cat->hom(L.on_object(n), y);
                    auto rhs = d.cat->hom(n, s.objects[y].i);
                    std::set<Index> image;
                    for (Index h : lhs) image.insert(Lam.on_morphism(h));
                    if (lhs.size() != rhs.size() || image != std::set<Index>(rhs.begin(), rhs.end()))
                        return std::string("lambda is not a bijection on this hom-set");
                    for (Index h : lhs)
                        for (Index phi : d.cat->incoming(n))
                            for (Index k : s.cat->outgoing(y)) {
                                Index moved = s.cat->compose(k, s.cat->compose(h, L.on_morphism(phi)));
                                Index want =
                                    d.cat->compose(Lam.on_morphism(k), d.cat->compose(Lam.on_morphism(h), phi));
                                if (Lam.on_morphism(moved) != want)
                                    return "not natural at " + s.cat->morphism_id(h) + ", " + d.cat->morphism_id(phi) +
                                           ", " + s.cat->morphism_id(k);
                            }
                    return std::string();
                });
    }
    {
        Recorder rec(out, "simplicial", "localization_lemma");
        for (const auto& h : s.morphisms)
            rec.run(h.map.id(), [&] {
                if (is_cocartesian(h) != has_cocartesian_factorization(s, h))
                    return std::string("classification disagrees with the factorization property");
                return detail::expect(!is_cocartesian(h) || lambda(h).lv(), "cocartesian but lambda is not LV");
            });
        for (const auto& x : s.objects)
            rec.run("counit at ([" + std::to_string(x.n) + "]," + std::to_string(x.i) + ")", [&] {
                PointedMorphism c = counit(x);
                return detail::expect(is_cocartesian(c) && has_cocartesian_factorization(s, c) && c.map.iv(),
                                      "counit is not a cocartesian IV morphism");
            });
        for (Index n = 0; n <= 3; ++n)
            for (Index m = 0; m <= 3; ++m)
                for (const auto& phi : monotone_maps(n, m))
                    if (phi.lv())
                        rec.run("l(" + phi.id() + ")", [&] {
                            return detail::expect(is_cocartesian(l(phi)) && unit(n).lv(), "l(LV) is not cocartesian");
                        });
    }
    {
        Recorder rec(out, "simplicial", "rev_involution");
        for (Index n = 0; n <= 3; ++n)
            for (Index m = 0; m <= 3; ++m)
                for (const auto& phi : monotone_maps(n, m))
                    rec.run(phi.id(), [&] {
                        MonotoneMap r = rev(phi);
                        return detail::expect(r.is_monotone() && rev(r) == phi && r.lv() == phi.iv() &&
                                                  r.iv() == phi.lv(),
                                              "rev(" + phi.id() + ") = " + r.id());
                    });
        rec.run("rev functor", [&] {
            FinFunctor R = rev_functor(d);
            return detail::expect(is_isomorphism(R) && compose(R, R) == identity_functor(d.cat),
                                  "rev is not an involutive automorphism");
        });
    }
    {
        Recorder rec(out, "simplicial", "epsilon_lv");
        for (Index n = 0; n <= 2; ++n)
            for (Index m = 0; m <= 3; ++m)
                for (const auto& phi : monotone_maps(n, m))
                    rec.run(phi.id(), [&] {
                        MonotoneMap e = epsilon(phi);
                        for (Index k = 0; k <= 3; ++k)
                            for (const auto& psi : monotone_maps(m, k))
                                if (epsilon(compose(psi, phi)) != compose(epsilon(psi), e))
                                    return "not functorial after " + psi.id();
                        if (compose(e, iota(n)) != compose(iota(m), phi)) return std::string("iota not natural");
                        if (compose(e, rho(n)) != compose(rho(m), rev(phi))) return std::string("rho not natural");
                        return detail::expect(!phi.lv() || (e.iv() && e.lv()),
                                              "LV map sent to " + e.id() + ", not in IV and LV");
                    });
    }
    auto cats = corpus::categories();
    {
        Recorder rec(out, "simplicial", "tw_chain_posets");
        for (Index n = 0; n <= 3; ++n)
            rec.run("[" + std::to_string(n) + "]", [&] {
                CatPtr c = share(catalog::chain(n));
                TwCat tw = twisted(c);
                const FinCat& t = *tw.carrier;
                if (t.object_count() != (n + 1) * (n + 2) / 2) return std::string("wrong number of objects");
                for (Index a = 0; a < t.object_count(); ++a)
                    for (Index b = 0; b < t.object_count(); ++b) {
                        Index i = c->src(a), j = c->dst(a), i2 = c->src(b), j2 = c->dst(b);
                        Index want = (i2 <= i && i <= j && j <= j2) ? 1 : 0;
                        if (t.hom(a, b).size() != want) return "hom " + t.object_id(a) + " -> " + t.object_id(b);
                    }
                Index top = t.object("(0," + std::to_string(n) + ")");
                for (Index a = 0; a < t.object_count(); ++a)
                    if (t.hom(a, top).size() != 1) return "(0,n) is not terminal: " + t.object_id(a);
                return std::string();
            });
    }
    {
        Recorder rec(out, "simplicial", "tw_right_opposite");
        for (const auto& [name, c] : cats)
            rec.run(name, [&] {
                TwCat l = twisted(c, Handedness::left), r = twisted(c, Handedness::right);
                if (!validate_category(*l.carrier).ok()) return std::string("Tw^l is not a category");
                if (!validate_functor(l.eta).ok() || !validate_functor(r.eta).ok()) return std::string("eta is not a functor");
                return detail::expect(*r.carrier == opposite(*l.carrier), "Tw^r differs from op(Tw^l)");
            });
    }
    {
        Recorder rec(out, "simplicial", "tw_simplex_levels");
        for (const auto& [name, c] : cats)
            rec.run(name, [&] {
                EpsilonComparison e = epsilon_compare(c, 1);
                if (!validate_functor(e.functor).ok()) return std::string("comparison is not a functor");
                for (Index n = 0; n <= 1; ++n) {
                    auto src = e.tw_simplices.objects_at(n), dst = e.base_simplices.objects_at(2 * n + 1);
                    std::set<Index> image;
                    for (Index b : src) image.insert(e.functor.on_object(b));
                    if (src.size() != dst.size() || image != std::set<Index>(dst.begin(), dst.end()))
                        return "level " + std::to_string(n) + ": " + std::to_string(src.size()) + " vs " +
                               std::to_string(dst.size()) + " simplices";
                }
                return std::string();
            });
    }
    {
        Recorder rec(out, "simplicial", "twisted_square");
        for (const auto& [name, c] : cats)
            rec.run(name, [&] {
                EpsilonComparison e = epsilon_compare(c, 1);
                TwCat tw = twisted(c);
                FinFunctor lhs = compose(simplex_endpoints(e.base_simplices, tw.eta.target), e.functor);
                FinFunctor rhs = compose(tw.eta, last_vertex(e.tw_simplices));
                if (lhs == rhs) return std::string();
                for (Index k = 0; k < lhs.morphism_map.size(); ++k)
                    if (lhs.morphism_map[k] != rhs.morphism_map[k])
                        return "square fails at " + e.tw_simplices.carrier->morphism_id(k);
                return std::string("square fails on objects");
            });
    }
}

inline Summary run(const RunConfig& cfg) {
    bool known = false;
    for (const auto& n : suite_names()) known = known || n == cfg.suite;
    if (!known) throw ParseError("unknown suite '" + cfg.suite + "'");
    Summary out;
    out.config = cfg;
    auto want = [&](const char* s) { return cfg.suite == "all" || cfg.suite == s; };
    if (want("fincat")) run_fincat(cfg, out);
    if (want("ends")) run_ends(cfg, out);
    if (want("weighted")) run_weighted(cfg, out);
    if (want("simplicial")) run_simplicial(cfg, out);
    return out;
}

// ---------------------------------------------------------------------------
// Reporting. Structured output is one JSON record per line with a fixed
// field order; human output is derived from the same records.

inline std::vector<nlohmann::ordered_json> records(const Summary& s) {
    using J = nlohmann::ordered_json;
    std::vector<J> out;
    const RunConfig& c = s.config;
    out.push_back(J{{"record", "config"},
                    {"seed", c.seed},
                    {"suite", c.suite},
                    {"trunc", c.trunc},
                    {"set_cap", c.set_cap},
                    {"budget", c.budget},
                    {"mutate", c.mutate}});
    Index passed = 0, failed = 0;
    for (const auto& r : s.results) {
        out.push_back(J{{"record", "invariant"},
                        {"suite", r.suite},
                        {"name", r.name},
                        {"passed", r.passed},
                        {"failed", r.failed}});
        for (const auto& f : r.failures)
            out.push_back(J{{"record", "failure"}, {"invariant", r.name}, {"instance", f.instance}, {"witness", f.witness}});
        passed += r.passed;
        failed += r.failed;
    }
    out.push_back(J{{"record", "summary"}, {"passed", passed}, {"failed", failed}, {"ok", s.ok()}});
    return out;
}

inline std::string render(const Summary& s, bool structured) {
    std::ostringstream os;
    for (const auto& r : records(s)) {
        if (structured) {
            os << r.dump() << "\n";
            continue;
        }
        const std::string kind = r["record"];
        if (kind == "config") {
            os << "seed " << r["seed"] << ", suite " << r["suite"].get<std::string>() << ", trunc " << r["trunc"]
               << ", set cap " << r["set_cap"] << (r["mutate"].get<bool>() ? ", MUTATED" : "") << "\n";
        } else if (kind == "invariant") {
            os << (r["failed"].get<Index>() ? "FAIL " : "ok   ") << r["suite"].get<std::string>() << "/"
               << r["name"].get<std::string>() << ": " << r["passed"] << " passed, " << r["failed"] << " failed\n";
        } else if (kind == "failure") {
            os << "     " << r["instance"].get<std::string>() << ": " << r["witness"].get<std::string>() << "\n";
        } else {
            os << (r["ok"].get<bool>() ? "all checks passed" : "some checks FAILED") << " (" << r["passed"]
               << " passed, " << r["failed"] << " failed)\n";
        }
    }
    return os.str();
}

}  // namespace fincoend::checks
