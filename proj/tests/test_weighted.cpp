#include <gtest/gtest.h>

#include "fincoend/catalog.hpp"
#include "fincoend/weighted.hpp"
#include "oracles.hpp"

using namespace fincoend;

namespace {

CatPtr arrow() { return share(catalog::walking_arrow()); }
CatPtr op(const CatPtr& c) { return share(opposite(*c)); }

std::vector<CatPtr> bases() {
    return {share(catalog::terminal()),
            arrow(),
            share(catalog::chain(2)),
            share(catalog::cyclic2()),
            share(catalog::idempotent()),
            share(catalog::poset({"0", "l", "r", "1"}, {{"0", "l"}, {"0", "r"}, {"l", "1"}, {"r", "1"}})),
            share(catalog::free_category({"a", "b"}, {{"f", "a", "b"}, {"g", "a", "b"}})),
            share(catalog::free_category({"a", "b", "c"}, {{"f", "a", "b"}, {"g", "b", "c"}}))};
}

std::vector<SetFunctor> covariant_pool(const CatPtr& c) {
    std::vector<SetFunctor> out{singleton_functor(c), constant_functor(c, {"0", "1"})};
    for (Index x = 0; x < c->object_count(); ++x) out.push_back(corepresentable(c, x));
    out.push_back(coproduct(corepresentable(c, 0), singleton_functor(c)));
    return out;
}

std::vector<SetFunctor> presheaf_pool(const CatPtr& c) {
    CatPtr o = op(c);
    std::vector<SetFunctor> out{singleton_functor(o), empty_functor(o)};
    for (Index x = 0; x < c->object_count(); ++x) out.push_back(rebase(representable_presheaf(c, x), o));
    out.push_back(coproduct(out.back(), singleton_functor(o)));
    return out;
}

// The fincat example pair on 2: W(a)={0}, W(b)={0,1}; ψ(a)={x,y}, ψ(b)={z,w}.
SetFunctor example_weight(const CatPtr& c) {
    return make_set_functor(c, {{"a", {"0"}}, {"b", {"0", "1"}}}, {{"u", {{"0", "0"}}}});
}
SetFunctor example_diagram(const CatPtr& c) {
    return make_set_functor(c, {{"a", {"x", "y"}}, {"b", {"z", "w"}}}, {{"u", {{"x", "z"}, {"y", "z"}}}});
}

// φ(a)={p}, φ(b)={q,r}, u: p ↦ q.
SetFunctor pqr(const CatPtr& c) {
    return make_set_functor(c, {{"a", {"p"}}, {"b", {"q", "r"}}}, {{"u", {{"p", "q"}}}});
}

// i ↦ X^{φ(i)} as a presheaf, u acting by precomposition with φ(u).
SetFunctor maps_into(const SetFunctor& phi, Index x_size) {
    const FinCat& c = *phi.base;
    SetFunctor M{op(phi.base), {}, {}};
    for (Index i = 0; i < c.object_count(); ++i) {
        std::vector<std::string> labels;
        for (Index k = 0; k < oracle::power(x_size, phi.size(i)); ++k) labels.push_back(std::to_string(k));
        M.sets.push_back(labels);
    }
    for (Index u = 0; u < c.morphism_count(); ++u) {
        Index i = c.src(u), ip = c.dst(u);
        std::vector<Index> table;
        for (Index code = 0; code < M.size(ip); ++code) {
            auto g = oracle::decode_function(code, phi.size(ip), x_size);
            Index back = 0;
            for (Index s = phi.size(i); s-- > 0;) back = back * x_size + g[phi.apply(u, s)];
            table.push_back(back);
        }
        M.maps.push_back(table);
    }
    return M;
}

}  // namespace

TEST(WeightedLimit, TerminalBaseCountsFunctions) {
    CatPtr t = share(catalog::terminal());
    SetFunctor W = constant_functor(t, {"0", "1"}), psi = constant_functor(t, {"x", "y", "z"});
    EXPECT_EQ(wlimit_via_end(W, psi).size(), 9u);
    EXPECT_EQ(wlimit_via_fibration(W, psi).size(), 9u);
}

TEST(WeightedLimit, ArrowExampleHasFourElements) {
    CatPtr c = arrow();
    SetFunctor W = example_weight(c), psi = example_diagram(c);
    WeightedLimit a = wlimit_via_end(W, psi), b = wlimit_via_fibration(W, psi);
    EXPECT_EQ(a.size(), 4u);
    EXPECT_EQ(a.size(), oracle::nat_count(W, psi));
    EXPECT_TRUE(compare_weighted_limits(a, b).agree);
    for (const auto& t : a.elements) EXPECT_TRUE(validate_nat(W, psi, t).ok());
}

TEST(WeightedLimit, SelfWeightContainsIdentity) {
    for (const auto& c : bases())
        for (const auto& F : covariant_pool(c)) {
            NatTransf id;
            for (Index x = 0; x < c->object_count(); ++x) {
                std::vector<Index> t(F.size(x));
                for (Index e = 0; e < t.size(); ++e) t[e] = e;
                id.components.push_back(t);
            }
            auto r = wlimit_via_end(F, F);
            EXPECT_TRUE(std::binary_search(r.elements.begin(), r.elements.end(), id));
        }
}

TEST(WeightedLimit, RoutesAgreeWithOracle) {
    for (const auto& c : bases()) {
        auto pool = covariant_pool(c);
        for (const auto& W : pool)
            for (const auto& psi : pool) {
                WeightedLimit a = wlimit_via_end(W, psi), b = wlimit_via_fibration(W, psi);
                EXPECT_EQ(a.size(), oracle::nat_count(W, psi));
                Comparison cmp = compare_weighted_limits(a, b);
                EXPECT_TRUE(cmp.agree) << cmp.witness;
            }
    }
}

TEST(WeightedLimit, SingletonWeightIsConicalLimit) {
    for (const auto& c : bases())
        for (const auto& psi : covariant_pool(c)) {
            WeightedLimit w = wlimit_via_end(singleton_functor(c), psi);
            LimitResult lim = limit(psi);
            ASSERT_EQ(w.size(), lim.elements.size());
            std::set<std::vector<Index>> families;
            for (const auto& t : w.elements) {
                std::vector<Index> f;
                for (const auto& comp : t.components) f.push_back(comp.at(0));
                families.insert(f);
            }
            EXPECT_EQ(families, std::set<std::vector<Index>>(lim.elements.begin(), lim.elements.end()));
        }
}

TEST(WeightedLimit, RejectsMismatchedBases) {
    EXPECT_THROW(wlimit_via_end(singleton_functor(arrow()), singleton_functor(share(catalog::terminal()))),
                 ConventionMismatch);
    EXPECT_THROW(wlimit_via_fibration(singleton_functor(arrow()), singleton_functor(op(arrow()))), ConventionMismatch);
}

TEST(WeightedColimit, SingletonWeightIsConicalColimit) {
    for (const auto& c : bases())
        for (const auto& phi : covariant_pool(c)) {
            WeightedColimit w = wcolimit_via_coend(singleton_functor(op(c)), phi);
            ColimitResult col = colimit(phi);
            Comparison cmp = compare_partitions("weighted/conical", w.class_of, w.classes, col.class_of, col.size());
            EXPECT_TRUE(cmp.agree) << cmp.witness;
        }
}

TEST(WeightedColimit, RepresentableWeightsOnArrow) {
    CatPtr c = arrow();
    SetFunctor phi = pqr(c);
    SetFunctor hb = rebase(representable_presheaf(c, 1), op(c)), ha = rebase(representable_presheaf(c, 0), op(c));
    EXPECT_EQ(wcolimit_via_coend(hb, phi).size(), 2u);
    EXPECT_EQ(wcolimit_via_fibration(hb, phi).size(), 2u);
    EXPECT_EQ(wcolimit_via_coend(ha, phi).size(), 1u);
    EXPECT_EQ(wcolimit_via_fibration(ha, phi).size(), 1u);
}

TEST(WeightedColimit, RoutesAgreeWithOracle) {
    for (const auto& c : bases())
        for (const auto& W : presheaf_pool(c))
            for (const auto& phi : covariant_pool(c)) {
                WeightedColimit a = wcolimit_via_coend(W, phi), b = wcolimit_via_fibration(W, phi);
                EXPECT_EQ(a.size(), oracle::weighted_colimit_class_count(W, phi));
                Comparison cmp = compare_weighted_colimits(a, b);
                EXPECT_TRUE(cmp.agree) << cmp.witness;
            }
}

TEST(WeightedColimit, UniversalPropertyAgainstSmallTargets) {
    for (const auto& c : bases())
        for (const auto& W : presheaf_pool(c))
            for (const auto& phi : covariant_pool(c)) {
                Index classes = wcolimit_via_coend(W, phi).size();
                for (Index x = 1; x <= 2; ++x)
                    EXPECT_EQ(oracle::nat_count(W, maps_into(phi, x)), oracle::power(x, classes));
            }
}

TEST(WeightedColimit, RejectsCovariantWeight) {
    CatPtr c = arrow();
    EXPECT_THROW(wcolimit_via_coend(singleton_functor(c), pqr(c)), ConventionMismatch);
    EXPECT_THROW(wcolimit_via_fibration(singleton_functor(c), pqr(c)), ConventionMismatch);
}

TEST(NatSpace, YonedaOnArrow) {
    CatPtr c = arrow();
    SetFunctor y = rebase(representable_presheaf(c, 1), op(c));
    for (const auto& psi : presheaf_pool(c)) {
        NatSpaceReport r = nat_space(y, psi);
        EXPECT_EQ(r.nat.size(), psi.size(1));
        EXPECT_EQ(r.weighted.size(), psi.size(1));
        EXPECT_TRUE(r.comparison.agree) << r.comparison.witness;
    }
}

TEST(NatSpace, BijectionOnPool) {
    for (const auto& c : bases()) {
        auto pool = presheaf_pool(c);
        for (const auto& phi : pool)
            for (const auto& psi : pool) {
                NatSpaceReport r = nat_space(phi, psi);
                EXPECT_EQ(r.nat.size(), oracle::nat_count(phi, psi));
                EXPECT_TRUE(r.comparison.agree) << r.comparison.witness;
            }
    }
}

TEST(Density, Examples) {
    CatPtr c = arrow();
    SetFunctor phi = make_set_functor(op(c), {{"a", {"0", "1"}}, {"b", {"0"}}}, {{"u", {{"0", "0"}}}});
    DensityReport r = density_check(phi);
    ASSERT_EQ(r.entries.size(), 2u);
    EXPECT_EQ(r.entries[0].colimit_size, 2u);
    EXPECT_EQ(r.entries[1].colimit_size, 1u);
    EXPECT_TRUE(r.ok());

    DensityReport empty = density_check(empty_functor(op(c)));
    EXPECT_TRUE(empty.ok());
    for (const auto& e : empty.entries) EXPECT_EQ(e.colimit_size, 0u);
}

TEST(Density, HoldsOnPool) {
    for (const auto& c : bases())
        for (const auto& phi : presheaf_pool(c)) {
            DensityReport r = density_check(phi);
            EXPECT_TRUE(r.ok());
            for (const auto& e : r.entries) EXPECT_EQ(e.colimit_size, e.presheaf_size);
        }
}

TEST(Cocompletion, RepresentablesOnArrow) {
    CatPtr c = arrow();
    SetFunctor W = pqr(c);
    for (Index i = 0; i < 2; ++i)
        EXPECT_EQ(wcolimit_via_coend(rebase(representable_presheaf(c, i), op(c)), W).size(), W.size(i));
    EXPECT_TRUE(cocompletion_check(W).ok());
}

TEST(Cocompletion, HoldsOnPool) {
    for (const auto& c : bases())
        for (const auto& W : covariant_pool(c)) {
            CocompletionReport r = cocompletion_check(W);
            EXPECT_TRUE(r.ok());
            EXPECT_GE(r.coequalizers.size(), 1u);
        }
}

TEST(CoendAsWeighted, Examples) {
    CatPtr t = share(catalog::terminal());
    SetFunctor three = constant_functor(hom_coend(t).base, {"0", "1", "2"});
    auto r = coend_as_weighted(coend_bifunctor(t, three));
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.weighted.classes, 3u);

    CatPtr c = arrow();
    auto h = coend_as_weighted(coend_bifunctor(c, hom_coend(c)));
    EXPECT_TRUE(h.ok()) << h.comparison.witness;
    EXPECT_EQ(h.weighted.classes, 2u);

    // Z/2 is abelian, so each element is its own conjugacy class.
    CatPtr z = share(catalog::cyclic2());
    auto hz = coend_as_weighted(coend_bifunctor(z, hom_coend(z)));
    EXPECT_TRUE(hz.ok());
    EXPECT_EQ(hz.weighted.classes, 2u);
}

TEST(CoendAsWeighted, AgreesWithOracleOnPool) {
    for (const auto& c : bases()) {
        SetFunctor h = hom_coend(c);
        std::vector<SetFunctor> fs{h, singleton_functor(h.base), coproduct(h, h),
                                   pointwise_product(h, constant_functor(h.base, {"0", "1"}))};
        for (const auto& F : fs) {
            auto r = coend_as_weighted(coend_bifunctor(c, F));
            EXPECT_TRUE(r.ok()) << r.comparison.witness;
            EXPECT_EQ(r.weighted.classes, oracle::coend_class_count(*c, F));
        }
    }
}
