#include <gtest/gtest.h>

#include "fincoend/catalog.hpp"
#include "fincoend/constructions.hpp"
#include "fincoend/functors.hpp"
#include "fincoend/setops.hpp"
#include "oracles.hpp"

using namespace fincoend;

namespace {

CatPtr arrow() { return share(catalog::walking_arrow()); }

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

// Counts quadruples (f, a, b) with b ∘ f ∘ a defined, by scanning all
// morphism triples.
Index twisted_morphism_count(const FinCat& c) {
    Index count = 0;
    for (Index f = 0; f < c.morphism_count(); ++f)
        for (Index a = 0; a < c.morphism_count(); ++a)
            for (Index b = 0; b < c.morphism_count(); ++b)
                if (c.dst(a) == c.src(f) && c.src(b) == c.dst(f)) ++count;
    return count;
}

Index non_identity_count(const FinCat& c) { return c.morphism_count() - c.object_count(); }

}  // namespace

TEST(Twisted, ChainsArePosetsOfPairs) {
    for (Index n = 0; n <= 3; ++n) {
        CatPtr c = share(catalog::chain(n));
        TwCat tw = twisted(c);
        const FinCat& t = *tw.carrier;
        EXPECT_TRUE(validate_category(t).ok());
        ASSERT_EQ(t.object_count(), (n + 1) * (n + 2) / 2);
        for (Index p = 0; p < t.object_count(); ++p)
            for (Index q = 0; q < t.object_count(); ++q) {
                Index i = c->src(p), j = c->dst(p), i2 = c->src(q), j2 = c->dst(q);
                Index expected = (i2 <= i && i <= j && j <= j2) ? 1 : 0;
                EXPECT_EQ(t.hom(p, q).size(), expected) << t.object_id(p) << " " << t.object_id(q);
            }
        Index top = t.object("(0," + std::to_string(n) + ")");
        for (Index p = 0; p < t.object_count(); ++p) EXPECT_EQ(t.hom(p, top).size(), 1u);
    }
}

TEST(Twisted, SmallExamples) {
    TwCat term = twisted(share(catalog::terminal()));
    EXPECT_EQ(term.carrier->object_count(), 1u);
    EXPECT_EQ(term.carrier->morphism_count(), 1u);
    TwCat tw2 = twisted(arrow());
    EXPECT_EQ(tw2.carrier->object_count(), 3u);
    EXPECT_EQ(non_identity_count(*tw2.carrier), 2u);
    EXPECT_TRUE(tw2.carrier->find_morphism("id_a-(id_a,u)->u").has_value());
    EXPECT_TRUE(tw2.carrier->find_morphism("id_b-(u,id_b)->u").has_value());
}

TEST(Twisted, RightIsOppositeOfLeftAndEtaIsAFunctor) {
    for (const auto& c : bases()) {
        TwCat l = twisted(c, Handedness::left), r = twisted(c, Handedness::right);
        EXPECT_TRUE(validate_category(*l.carrier).ok());
        EXPECT_EQ(*r.carrier, opposite(*l.carrier));
        EXPECT_EQ(l.carrier->morphism_count(), twisted_morphism_count(*c));
        EXPECT_TRUE(validate_functor(l.eta).ok());
        EXPECT_TRUE(validate_functor(r.eta).ok());
        for (Index f = 0; f < c->morphism_count(); ++f)
            EXPECT_EQ(l.eta.target->object_id(l.eta.on_object(f)),
                      pair_id(c->object_id(c->src(f)), c->object_id(c->dst(f))));
    }
}

TEST(Simplices, LevelCountsMatchFunctorEnumeration) {
    for (const auto& c : bases()) {
        SimplexCat s = simplices(c, 3);
        EXPECT_TRUE(validate_category(*s.carrier).ok());
        EXPECT_TRUE(validate_functor(s.level).ok());
        for (Index n = 0; n <= 3; ++n)
            EXPECT_EQ(s.objects_at(n).size(), functor_category_objects(share(catalog::chain(n)), c).size());
        // Fibers of the level map are discrete.
        for (Index k = 0; k < s.carrier->morphism_count(); ++k)
            if (s.level.on_morphism(k) == s.delta->cat->identity(s.level.on_object(s.carrier->src(k)))) {
                EXPECT_TRUE(s.carrier->is_identity(k));
            }
    }
}

TEST(Simplices, WalkingArrow) {
    SimplexCat s = simplices(arrow(), 2);
    EXPECT_EQ(s.objects_at(0).size(), 2u);
    EXPECT_EQ(s.objects_at(1).size(), 3u);
    EXPECT_EQ(s.objects_at(2).size(), 4u);
    const FinCat& k = *s.carrier;
    auto hom = k.hom(k.object("(a)"), k.object("[u]"));
    ASSERT_EQ(hom.size(), 1u);
    EXPECT_EQ(s.map_of(hom[0]), coface(1, 1));
    for (const auto& sx : s.simplices) EXPECT_EQ(s.find(sx).has_value(), true);

    SimplexCat t = simplices(share(catalog::terminal()), 3);
    for (Index n = 0; n <= 3; ++n) EXPECT_EQ(t.objects_at(n).size(), 1u);
}

TEST(Simplices, EndpointFunctors) {
    CatPtr c = arrow();
    SimplexCat s = simplices(c, 2);
    const FinCat& k = *s.carrier;
    FinFunctor L = last_vertex(s), I = initial_vertex(s), Q = simplex_endpoints(s);
    EXPECT_TRUE(validate_functor(L).ok());
    EXPECT_TRUE(validate_functor(I).ok());
    EXPECT_TRUE(validate_functor(Q).ok());
    Index u = k.object("[u]");
    EXPECT_EQ(c->object_id(L.on_object(u)), "b");
    EXPECT_EQ(c->object_id(I.on_object(u)), "a");
    Index from_b = k.hom(k.object("(b)"), u).at(0), from_a = k.hom(k.object("(a)"), u).at(0);
    EXPECT_EQ(c->morphism_id(L.on_morphism(from_b)), "id_b");
    EXPECT_EQ(c->morphism_id(L.on_morphism(from_a)), "u");
    EXPECT_EQ(c->morphism_id(I.on_morphism(from_a)), "id_a");
    EXPECT_EQ(c->morphism_id(I.on_morphism(from_b)), "u");
    EXPECT_EQ(Q.target->morphism_id(Q.on_morphism(from_a)), "(id_a,u)");
    EXPECT_EQ(Q.target->morphism_id(Q.on_morphism(from_b)), "(u,id_b)");
}

TEST(Simplices, LastVertexInvertsLVAndInitialVertexInvertsIV) {
    for (const auto& c : bases()) {
        SimplexCat s = simplices(c, 2);
        FinFunctor L = last_vertex(s), I = initial_vertex(s);
        EXPECT_TRUE(validate_functor(L).ok());
        EXPECT_TRUE(validate_functor(I).ok());
        for (Index k = 0; k < s.carrier->morphism_count(); ++k) {
            if (s.map_of(k).lv()) {
                EXPECT_TRUE(c->is_identity(L.on_morphism(k)));
            }
            if (s.map_of(k).iv()) {
                EXPECT_TRUE(c->is_identity(I.on_morphism(k)));
            }
        }
    }
}

TEST(Simplices, OppositeIsReversal) {
    for (const auto& c : bases()) {
        SimplexCat s = simplices(c, 2), o = simplices(share(opposite(*c)), 2);
        FinFunctor R = reversal_isomorphism(o, s);
        EXPECT_TRUE(is_isomorphism(R));
        FinFunctor rev_d = rev_functor(*s.delta);
        for (Index k = 0; k < o.carrier->morphism_count(); ++k)
            EXPECT_EQ(s.level.on_morphism(R.on_morphism(k)), rev_d.on_morphism(o.level.on_morphism(k)));
    }
}

TEST(EpsilonCompare, WalkingArrowCounts) {
    EpsilonComparison e = epsilon_compare(arrow(), 1);
    EXPECT_EQ(e.tw_simplices.objects_at(1).size(), 5u);
    EXPECT_EQ(e.base_simplices.objects_at(3).size(), 5u);
    EXPECT_EQ(e.tw_simplices.objects_at(0).size(), arrow()->morphism_count());
}

TEST(EpsilonCompare, LevelBijectionAndSquare) {
    for (const auto& c : bases()) {
        EpsilonComparison e = epsilon_compare(c, 1);
        ASSERT_TRUE(validate_functor(e.functor).ok());
        for (Index n = 0; n <= 1; ++n) {
            auto src = e.tw_simplices.objects_at(n), dst = e.base_simplices.objects_at(2 * n + 1);
            ASSERT_EQ(src.size(), dst.size());
            std::set<Index> image;
            for (Index b : src) image.insert(e.functor.on_object(b));
            EXPECT_EQ(image, std::set<Index>(dst.begin(), dst.end()));
        }
        TwCat tw = twisted(c);
        FinFunctor lhs = compose(simplex_endpoints(e.base_simplices, tw.eta.target), e.functor);
        FinFunctor rhs = compose(tw.eta, last_vertex(e.tw_simplices));
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(Elements, Examples) {
    CatPtr c = arrow();
    SetFunctor W = make_set_functor(c, {{"a", {"0"}}, {"b", {"0", "1"}}}, {{"u", {{"0", "0"}}}});
    ElementsCat el = elements(W, Variance::covariant);
    EXPECT_TRUE(validate_category(*el.carrier).ok());
    EXPECT_TRUE(validate_functor(el.projection).ok());
    EXPECT_EQ(el.carrier->object_count(), 3u);
    EXPECT_EQ(non_identity_count(*el.carrier), 1u);
    EXPECT_TRUE(el.carrier->find_morphism("(a,0)-u->(b,0)").has_value());

    SetFunctor yb = representable_presheaf(c, c->object("b"));
    ElementsCat slice = elements(yb, Variance::contravariant);
    EXPECT_EQ(slice.carrier->object_count(), 2u);
    EXPECT_EQ(non_identity_count(*slice.carrier), 1u);
    EXPECT_TRUE(same_category(slice.projection.target, c));
    EXPECT_TRUE(validate_functor(slice.projection).ok());
    EXPECT_TRUE(slice.carrier->find_morphism("(a,u)-u->(b,id_b)").has_value());

    for (const auto& base : bases()) {
        ElementsCat e = elements(singleton_functor(base), Variance::covariant);
        EXPECT_EQ(e.carrier->object_count(), base->object_count());
        EXPECT_EQ(e.carrier->morphism_count(), base->morphism_count());
    }
}

// Sections of the covariant projection correspond to compatible families.
TEST(Elements, SectionsAreLimitElements) {
    CatPtr c = arrow();
    std::vector<SetFunctor> ws{
        make_set_functor(c, {{"a", {"x", "y"}}, {"b", {"z", "w"}}}, {{"u", {{"x", "z"}, {"y", "z"}}}}),
        make_set_functor(c, {{"a", {"0"}}, {"b", {"0", "1"}}}, {{"u", {{"0", "0"}}}}),
        corepresentable(share(catalog::cyclic2()), 0)};
    for (const auto& W : ws) {
        ElementsCat el = elements(W, Variance::covariant);
        Index sections = 0;
        for (const auto& s : functor_category_objects(W.base, el.carrier))
            if (compose(el.projection, s) == identity_functor(W.base)) ++sections;
        EXPECT_EQ(sections, limit(W).size());
        EXPECT_EQ(sections, oracle::limit_families(W).size());
    }
}

TEST(Elements, HomPresheafIsRightTwistedArrows) {
    for (const auto& c : bases()) {
        HomElementsComparison h = elements_of_hom(c);
        EXPECT_TRUE(validate_category(*h.elements.carrier).ok());
        EXPECT_TRUE(is_isomorphism(h.iso)) << c->object_id(0);
    }
    HomElementsComparison t = elements_of_hom(share(catalog::terminal()));
    EXPECT_EQ(t.elements.carrier->morphism_count(), 1u);
    HomElementsComparison a = elements_of_hom(arrow());
    EXPECT_EQ(a.elements.carrier->object_count(), 3u);
    EXPECT_EQ(non_identity_count(*a.elements.carrier), 2u);
    HomElementsComparison z = elements_of_hom(share(catalog::cyclic2()));
    EXPECT_EQ(z.elements.carrier->object_count(), 2u);
    EXPECT_EQ(z.elements.carrier->morphism_count(), z.twisted_right.carrier->morphism_count());
}
