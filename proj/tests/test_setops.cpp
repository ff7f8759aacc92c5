#include <gtest/gtest.h>

#include <set>

#include "fincoend/catalog.hpp"
#include "fincoend/functors.hpp"
#include "fincoend/setops.hpp"
#include "oracles.hpp"

using namespace fincoend;

namespace {

CatPtr arrow() { return share(catalog::walking_arrow()); }

std::vector<SetFunctor> sample_diagrams() {
    std::vector<SetFunctor> out;
    CatPtr a = arrow();
    out.push_back(make_set_functor(a, {{"a", {"x", "y"}}, {"b", {"z", "w"}}}, {{"u", {{"x", "z"}, {"y", "z"}}}}));
    out.push_back(make_set_functor(a, {{"a", {"p"}}, {"b", {"q", "r"}}}, {{"u", {{"p", "q"}}}}));
    out.push_back(make_set_functor(a, {{"a", {}}, {"b", {"q"}}}, {}));
    CatPtr span = share(catalog::poset({"l", "m", "r"}, {{"m", "l"}, {"m", "r"}}));
    out.push_back(make_set_functor(span, {{"l", {"0", "1"}}, {"m", {"a", "b", "c"}}, {"r", {"0", "1"}}},
                                   {{"m<l", {{"a", "0"}, {"b", "0"}, {"c", "1"}}},
                                    {"m<r", {{"a", "0"}, {"b", "1"}, {"c", "1"}}}}));
    CatPtr z = share(catalog::cyclic2());
    SetFunctor flip = constant_functor(z, {"0", "1", "2"});
    flip.maps[z->morphism_index("t")] = {1, 0, 2};
    out.push_back(flip);
    CatPtr pair = share(catalog::free_category({"a", "b"}, {{"f", "a", "b"}, {"g", "a", "b"}}));
    out.push_back(make_set_functor(pair, {{"a", {"0", "1"}}, {"b", {"0", "1", "2"}}},
                                   {{"f", {{"0", "0"}, {"1", "1"}}}, {"g", {{"0", "1"}, {"1", "2"}}}}));
    return out;
}

}  // namespace

TEST(Limit, SpecExamples) {
    auto ds = sample_diagrams();
    LimitResult r = limit(ds[0]);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r.elements[0], (std::vector<Index>{0, 0}));
    EXPECT_EQ(r.elements[1], (std::vector<Index>{1, 0}));

    CatPtr d = share(catalog::discrete({"p", "q"}));
    SetFunctor F = make_set_functor(d, {{"p", {"0", "1"}}, {"q", {"0", "1", "2"}}}, {});
    EXPECT_EQ(limit(F).size(), 6u);
    EXPECT_EQ(colimit(F).size(), 5u);

    for (const auto& c : {catalog::chain(2), catalog::cyclic2(), catalog::walking_arrow()})
        EXPECT_EQ(limit(singleton_functor(share(c))).size(), 1u);
}

TEST(Limit, EmptyBase) {
    CatPtr e = share(catalog::empty());
    SetFunctor F{e, {}, {}};
    EXPECT_EQ(limit(F).size(), 1u);
    EXPECT_EQ(colimit(F).size(), 0u);
}

TEST(Limit, MatchesBruteForceFamilies) {
    for (const auto& F : sample_diagrams()) {
        auto expected = oracle::limit_families(F);
        auto got = limit(F).elements;
        EXPECT_EQ(std::set<std::vector<Index>>(got.begin(), got.end()), expected);
        EXPECT_EQ(got.size(), expected.size());
    }
}

TEST(Limit, ProjectionsCommute) {
    for (const auto& F : sample_diagrams()) {
        LimitResult r = limit(F);
        const FinCat& c = *F.base;
        for (Index u = 0; u < c.morphism_count(); ++u) {
            auto ps = r.projection(c.src(u)), pt = r.projection(c.dst(u));
            for (Index k = 0; k < r.size(); ++k) EXPECT_EQ(F.apply(u, ps[k]), pt[k]);
        }
    }
}

// Every cocone into a two-element set factors uniquely through the colimit:
// the number of cocones equals 2^|colim|, and each is constant on classes.
TEST(Colimit, UniversalPropertyAgainstEnumeratedCocones) {
    for (const auto& F : sample_diagrams()) {
        const FinCat& c = *F.base;
        ColimitResult r = colimit(F);
        std::vector<Index> sizes;
        for (Index x = 0; x < c.object_count(); ++x) sizes.push_back(oracle::power(2, F.size(x)));
        Index cocones = 0;
        oracle::for_each_tuple(sizes, [&](const std::vector<Index>& codes) {
            std::vector<std::vector<Index>> leg;
            for (Index x = 0; x < c.object_count(); ++x) leg.push_back(oracle::decode_function(codes[x], F.size(x), 2));
            for (Index u = 0; u < c.morphism_count(); ++u)
                for (Index e = 0; e < F.size(c.src(u)); ++e)
                    if (leg[c.dst(u)][F.apply(u, e)] != leg[c.src(u)][e]) return;
            ++cocones;
            for (const auto& cls : r.classes)
                for (const auto& [x, e] : cls) EXPECT_EQ(leg[x][e], leg[cls.front().first][cls.front().second]);
        });
        EXPECT_EQ(cocones, oracle::power(2, r.size()));
        EXPECT_EQ(r.size(), oracle::colimit_class_count(F));
    }
}

TEST(Colimit, SpecExample) {
    auto ds = sample_diagrams();
    ColimitResult r = colimit(ds[1]);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r.injection(0, 0), r.injection(1, 0));
    EXPECT_NE(r.injection(1, 1), r.injection(1, 0));
    EXPECT_EQ(r.representative(0), (std::pair<Index, Index>{0, 0}));
    EXPECT_EQ(r.representative(1), (std::pair<Index, Index>{1, 1}));
}

TEST(Colimit, CoconeConditionOnInjections) {
    for (const auto& F : sample_diagrams()) {
        ColimitResult r = colimit(F);
        const FinCat& c = *F.base;
        for (Index u = 0; u < c.morphism_count(); ++u)
            for (Index e = 0; e < F.size(c.src(u)); ++e)
                EXPECT_EQ(r.injection(c.src(u), e), r.injection(c.dst(u), F.apply(u, e)));
    }
}

TEST(Colimit, InvariantUnderDoubleOppositeBase) {
    for (const auto& F : sample_diagrams()) {
        SetFunctor G = F;
        G.base = share(opposite(opposite(*F.base)));
        EXPECT_EQ(colimit(G).class_of, colimit(F).class_of);
        EXPECT_EQ(limit(G).elements, limit(F).elements);
    }
}

TEST(Equalizer, Examples) {
    Function id{{0, 1}, 2}, zero{{0, 0}, 2};
    EXPECT_EQ(equalizer(id, id), (std::vector<Index>{0, 1}));
    EXPECT_EQ(equalizer(id, zero), (std::vector<Index>{0}));
    EXPECT_THROW(equalizer(id, Function{{0}, 2}), ShapeMismatch);
}

TEST(Coequalizer, Examples) {
    Function f{{0, 1}, 3};
    EXPECT_EQ(coequalizer(f, f).size(), 3u);
    EXPECT_EQ(coequalizer(Function{{0}, 2}, Function{{1}, 2}).size(), 1u);
    EXPECT_THROW(coequalizer(f, Function{{0, 1}, 2}), ShapeMismatch);
}

// Level-1 of the diagram of the p/q/r example: one summand per morphism u
// with copies of F(src u), mapped to (src u, s) and (dst u, F(u)s).
TEST(Coequalizer, LevelOneOfPointedArrowDiagram) {
    SetFunctor F = sample_diagrams()[1];
    const FinCat& c = *F.base;
    std::vector<Index> offset{0, F.size(0)};
    Function d1{{}, F.total_size()}, d0{{}, F.total_size()};
    for (Index u = 0; u < c.morphism_count(); ++u)
        for (Index s = 0; s < F.size(c.src(u)); ++s) {
            d1.values.push_back(offset[c.src(u)] + s);
            d0.values.push_back(offset[c.dst(u)] + F.apply(u, s));
        }
    EXPECT_EQ(coequalizer(d0, d1).size(), 2u);
}
