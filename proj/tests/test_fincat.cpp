#include <gtest/gtest.h>

#include "fincoend/catalog.hpp"
#include "fincoend/fincat.hpp"
#include "fincoend/functors.hpp"
#include "oracles.hpp"

using namespace fincoend;

namespace {

CatPtr arrow() { return share(catalog::walking_arrow()); }

std::vector<FinCat> small_categories() {
    return {catalog::terminal(),
            catalog::walking_arrow(),
            catalog::chain(2),
            catalog::cyclic2(),
            catalog::idempotent(),
            catalog::poset({"0", "l", "r", "1"}, {{"0", "l"}, {"0", "r"}, {"l", "1"}, {"r", "1"}}),
            catalog::free_category({"a", "b"}, {{"f", "a", "b"}, {"g", "a", "b"}}),
            catalog::free_category({"a", "b", "c"}, {{"f", "a", "b"}, {"g", "b", "c"}})};
}

}  // namespace

TEST(Validate, CatalogCategoriesPass) {
    for (const auto& c : small_categories()) {
        auto r = validate_category(c);
        EXPECT_TRUE(r.ok()) << r.message;
        EXPECT_TRUE(validate_category(opposite(c)).ok());
    }
}

TEST(Validate, RedirectedIdentityComposite) {
    FinCat::Builder b;
    Index a = b.add_object("a");
    Index bb = b.add_object("b");
    Index u = b.add_morphism("u", a, bb);
    b.set_compose(u, b.identity(a), b.identity(a));
    FinCat c = std::move(b).build();
    auto r = validate_category(c);
    EXPECT_EQ(r.violated, Law::identity);
    ASSERT_FALSE(r.witnesses.empty());
    EXPECT_EQ(r.witnesses.front(), "u");
}

TEST(Validate, NonAssociativeMonoidTable) {
    // {1, p, q}: p*p = q, p*q = p, q*p = q, q*q = q. (p*p)*p = q*p = q, p*(p*p) = p*q = p.
    FinCat c = catalog::monoid({"1", "p", "q"}, {{0, 1, 2}, {1, 2, 1}, {2, 2, 2}});
    EXPECT_EQ(validate_category(c).violated, Law::associativity);
}

TEST(Validate, MissingComposite) {
    FinCat::Builder b;
    Index a = b.add_object("a");
    Index bb = b.add_object("b");
    Index cc = b.add_object("c");
    b.add_morphism("f", a, bb);
    b.add_morphism("g", bb, cc);
    EXPECT_EQ(validate_category(std::move(b).build()).violated, Law::closure);
}

TEST(Opposite, Involution) {
    for (const auto& c : small_categories()) EXPECT_EQ(opposite(opposite(c)), c);
    FinCat t = catalog::terminal();
    EXPECT_EQ(opposite(t), t);
}

TEST(Opposite, ArrowReversed) {
    FinCat op = opposite(catalog::walking_arrow());
    Index u = op.morphism_index("u");
    EXPECT_EQ(op.object_id(op.src(u)), "b");
    EXPECT_EQ(op.object_id(op.dst(u)), "a");
}

TEST(Product, Counts) {
    FinCat a = catalog::walking_arrow();
    FinCat p = product(a, a);
    EXPECT_EQ(p.object_count(), 4u);
    EXPECT_EQ(p.morphism_count(), 9u);
    EXPECT_TRUE(validate_category(p).ok());
}

TEST(Product, HomSetInMixedVariance) {
    FinCat a = catalog::walking_arrow();
    FinCat p = product(a, opposite(a));
    EXPECT_EQ(p.hom(p.object("(a,b)"), p.object("(b,a)")).size(), 1u);
    EXPECT_EQ(p.hom(p.object("(b,a)"), p.object("(a,b)")).size(), 0u);
}

TEST(Product, UnitAndAssociativityUpToIdentifiers) {
    FinCat t = catalog::terminal();
    for (const auto& c : small_categories()) {
        FinCat tc = product(t, c);
        ASSERT_EQ(tc.object_count(), c.object_count());
        ASSERT_EQ(tc.morphism_count(), c.morphism_count());
        for (Index g = 0; g < c.morphism_count(); ++g) {
            EXPECT_EQ(tc.morphism_id(g), pair_id("id_*", c.morphism_id(g)));
            EXPECT_EQ(tc.composites_after(g), c.composites_after(g));
        }
    }
    FinCat a = catalog::walking_arrow(), z = catalog::cyclic2(), ch = catalog::chain(1);
    FinCat left = product(product(a, z), ch), right = product(a, product(z, ch));
    ASSERT_EQ(left.morphism_count(), right.morphism_count());
    // Index arithmetic is row-major in both bracketings, so the tables coincide.
    for (Index g = 0; g < left.morphism_count(); ++g) {
        EXPECT_EQ(left.composites_after(g), right.composites_after(g));
        EXPECT_EQ(left.src(g), right.src(g));
        EXPECT_EQ(left.dst(g), right.dst(g));
    }
}

TEST(Product, OppositeCommutes) {
    FinCat a = catalog::walking_arrow(), z = catalog::idempotent();
    EXPECT_EQ(opposite(product(a, z)), product(opposite(a), opposite(z)));
}

TEST(FunctorEnumeration, ChainsIntoArrow) {
    CatPtr d = arrow();
    for (Index n : {0, 1, 2}) {
        CatPtr c = share(catalog::chain(n));
        auto fs = functor_category_objects(c, d);
        EXPECT_EQ(fs.size(), oracle::functor_count(*c, *d)) << n;
        for (const auto& F : fs) EXPECT_TRUE(validate_functor(F).ok());
    }
    EXPECT_EQ(functor_category_objects(share(catalog::chain(0)), d).size(), 2u);
    EXPECT_EQ(functor_category_objects(share(catalog::chain(1)), d).size(), 3u);
    EXPECT_EQ(functor_category_objects(share(catalog::chain(2)), d).size(), 4u);
}

TEST(FunctorEnumeration, AgreesWithBruteForce) {
    auto cats = small_categories();
    for (Index i = 0; i < cats.size(); ++i)
        for (Index j = 0; j < cats.size(); ++j) {
            if (cats[i].morphism_count() > 6 || cats[j].morphism_count() > 6) continue;
            if (cats[i].morphism_count() * cats[j].morphism_count() > 24) continue;
            CatPtr c = share(cats[i]), d = share(cats[j]);
            EXPECT_EQ(functor_category_objects(c, d).size(), oracle::functor_count(*c, *d)) << i << "," << j;
        }
}

TEST(FunctorEnumeration, Budget) {
    Limits tight{4, 5};
    EXPECT_THROW(functor_category_objects(share(catalog::chain(3)), share(catalog::chain(3)), tight), BudgetExceeded);
}

TEST(NatEnumeration, SpecExample) {
    CatPtr c = arrow();
    SetFunctor f = make_set_functor(c, {{"a", {"0"}}, {"b", {"0", "1"}}}, {{"u", {{"0", "0"}}}});
    SetFunctor g = make_set_functor(c, {{"a", {"x", "y"}}, {"b", {"z", "w"}}}, {{"u", {{"x", "z"}, {"y", "z"}}}});
    ASSERT_TRUE(validate_set_functor(f).ok());
    ASSERT_TRUE(validate_set_functor(g).ok());
    auto nats = enumerate_nat(f, g);
    EXPECT_EQ(nats.size(), oracle::nat_count(f, g));
    EXPECT_EQ(nats.size(), 4u);
    for (const auto& t : nats) EXPECT_TRUE(validate_nat(f, g, t).ok());
}

TEST(NatEnumeration, ConstantSingleton) {
    for (const auto& c0 : small_categories()) {
        CatPtr c = share(c0);
        EXPECT_EQ(enumerate_nat(singleton_functor(c), singleton_functor(c)).size(), 1u);
    }
}

TEST(NatEnumeration, Yoneda) {
    for (const auto& c0 : small_categories()) {
        CatPtr c = share(c0);
        for (Index y = 0; y < c->object_count(); ++y) {
            // Presheaf G = Hom(-, z) for each z, nat(Hom(-, y), G) = |G(y)| = |Hom(y, z)|.
            SetFunctor rep = representable_presheaf(c, y);
            for (Index z = 0; z < c->object_count(); ++z) {
                SetFunctor G = rebase(representable_presheaf(c, z), rep.base);
                EXPECT_EQ(enumerate_nat(rep, G).size(), c->hom(y, z).size());
            }
            // Covariant: nat(Hom(y, -), Hom(z, -)) = |Hom(z, y)|.
            SetFunctor corep = corepresentable(c, y);
            for (Index z = 0; z < c->object_count(); ++z)
                EXPECT_EQ(enumerate_nat(corep, corepresentable(c, z)).size(), c->hom(z, y).size());
        }
    }
}

TEST(NatEnumeration, YonedaOnArrowWithArbitraryTarget) {
    CatPtr c = arrow();
    SetFunctor yb = representable_presheaf(c, c->object("b"));
    EXPECT_EQ(yb.sets[c->object("a")], std::vector<std::string>{"u"});
    EXPECT_EQ(yb.sets[c->object("b")], std::vector<std::string>{"id_b"});
    SetFunctor g = make_set_functor(yb.base, {{"a", {"p", "q", "r"}}, {"b", {"s", "t"}}},
                                    {{"u", {{"s", "p"}, {"t", "p"}}}});
    ASSERT_TRUE(validate_set_functor(g).ok());
    EXPECT_EQ(enumerate_nat(yb, g).size(), 2u);
    EXPECT_EQ(oracle::nat_count(yb, g), 2u);
}

TEST(SetFunctors, StandardConstructionsAreFunctors) {
    for (const auto& c0 : small_categories()) {
        CatPtr c = share(c0);
        EXPECT_TRUE(validate_set_functor(hom_end(c)).ok());
        EXPECT_TRUE(validate_set_functor(hom_coend(c)).ok());
        for (Index x = 0; x < c->object_count(); ++x) {
            EXPECT_TRUE(validate_set_functor(corepresentable(c, x)).ok());
            EXPECT_TRUE(validate_set_functor(representable_presheaf(c, x)).ok());
        }
        SetFunctor h = corepresentable(c, 0);
        EXPECT_TRUE(validate_set_functor(coproduct(h, singleton_functor(c))).ok());
        EXPECT_TRUE(validate_set_functor(pointwise_product(h, h)).ok());
    }
}

TEST(SetFunctors, ExternalProductAndSwap) {
    CatPtr a = arrow();
    CatPtr z = share(catalog::cyclic2());
    SetFunctor F = corepresentable(a, 0);
    SetFunctor G = constant_functor(z, {"x", "y"});
    G.maps[z->morphism_index("t")] = {1, 0};
    ASSERT_TRUE(validate_set_functor(G).ok());
    SetFunctor P = external_product(F, G);
    EXPECT_TRUE(validate_set_functor(P).ok());
    SetFunctor S = swap_variables(P, *a, *z);
    EXPECT_TRUE(validate_set_functor(S).ok());
    EXPECT_EQ(swap_variables(S, *z, *a).sets, P.sets);
    EXPECT_EQ(swap_variables(S, *z, *a).maps, P.maps);
}

TEST(SetFunctors, ValidationCatchesBrokenComposition) {
    CatPtr c = share(catalog::chain(2));
    SetFunctor F = constant_functor(c, {"x", "y"});
    F.maps[c->morphism_index("(0,2)")] = {1, 0};
    EXPECT_EQ(validate_set_functor(F).violated, Law::functoriality);
}
