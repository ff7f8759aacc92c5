#include <gtest/gtest.h>

#include "fincoend/corpus.hpp"
#include "fincoend/format.hpp"

using namespace fincoend;
using format::Json;

namespace {

Json arrow_doc() {
    return Json::parse(R"({"kind": "category", "objects": ["a", "b"],
                           "morphisms": [{"id": "u", "src": "a", "dst": "b"}]})");
}

}  // namespace

TEST(Format, OmittedIdentitiesAreSynthesized) {
    CatPtr c = format::category_from_json(arrow_doc());
    EXPECT_EQ(*c, catalog::walking_arrow());
    EXPECT_EQ(c->morphism_id(c->identity(0)), "id_a");
    EXPECT_TRUE(validate_category(*c).ok());
}

TEST(Format, CategoriesRoundTrip) {
    for (const auto& [name, c] : corpus::categories()) {
        Json j = format::to_json(*c, name);
        format::Document d = format::document_from_json(format::parse_json(j.dump()));
        ASSERT_TRUE(d.category) << name;
        EXPECT_EQ(*d.category, *c) << name;
        EXPECT_EQ(d.name, name);
    }
}

TEST(Format, SetFunctorsRoundTrip) {
    corpus::Params p;
    for (const auto& inst : corpus::diagrams(p)) {
        SetFunctor F = format::setfunctor_from_json(format::to_json(inst.F));
        EXPECT_EQ(*F.base, *inst.F.base);
        EXPECT_EQ(F.sets, inst.F.sets);
        EXPECT_EQ(F.maps, inst.F.maps);
    }
}

TEST(Format, FunctorsRoundTrip) {
    CatPtr c = share(catalog::chain(2));
    for (const auto& F : functor_category_objects(share(catalog::chain(1)), c, {})) {
        FinFunctor G = format::functor_from_json(format::to_json(F));
        EXPECT_EQ(G.object_map, F.object_map);
        EXPECT_EQ(G.morphism_map, F.morphism_map);
        EXPECT_TRUE(validate_functor(G).ok());
    }
}

TEST(Format, CategoryReferences) {
    CatPtr op = format::category_from_json(Json::parse(R"({"opposite": "builtin:arrow"})"));
    EXPECT_EQ(*op, opposite(catalog::walking_arrow()));
    CatPtr pr = format::category_from_json(Json::parse(R"({"product": ["builtin:arrow", "builtin:Z2"]})"));
    EXPECT_EQ(*pr, product(catalog::walking_arrow(), catalog::cyclic2()));
    EXPECT_EQ(*format::builtin_category("chain3"), catalog::chain(3));
    EXPECT_THROW(format::builtin_category("nonesuch"), ParseError);
}

TEST(Format, UnknownFieldsAreRejected) {
    Json j = arrow_doc();
    j["colour"] = "red";
    EXPECT_THROW(format::document_from_json(j), ParseError);
    Json k = arrow_doc();
    k["morphisms"][0]["weight"] = 1;
    EXPECT_THROW(format::document_from_json(k), ParseError);
    Json s = Json::parse(R"({"kind": "setfunctor", "base": "builtin:arrow", "sets": {}, "extra": 0})");
    EXPECT_THROW(format::document_from_json(s), ParseError);
}

TEST(Format, MalformedDocumentsAreParseErrors) {
    EXPECT_THROW(format::parse_json("{\"kind\": "), ParseError);
    EXPECT_THROW(format::document_from_json(Json::parse(R"({"objects": []})")), ParseError);
    EXPECT_THROW(format::document_from_json(Json::parse(R"({"kind": "monad"})")), ParseError);
    Json dangling = arrow_doc();
    dangling["morphisms"][0]["dst"] = "c";
    EXPECT_THROW(format::document_from_json(dangling), ParseError);
    Json bad_triple = arrow_doc();
    bad_triple["compose"] = Json::parse(R"([["u", "id_a"]])");
    EXPECT_THROW(format::document_from_json(bad_triple), ParseError);
}

TEST(Format, CorruptedCompositionFailsValidation) {
    Json j = arrow_doc();
    j["compose"] = Json::parse(R"([["u", "id_a", "id_a"]])");
    CatPtr c = format::category_from_json(j);
    ValidationReport r = validate_category(*c);
    EXPECT_FALSE(r.ok());
    EXPECT_FALSE(r.witnesses.empty());
}

TEST(Format, StructuralProblemsAreValidationErrors) {
    Json dup = arrow_doc();
    dup["morphisms"].push_back(Json::parse(R"({"id": "u", "src": "a", "dst": "b"})"));
    EXPECT_THROW(format::document_from_json(dup), ValidationError);
    Json missing_map = Json::parse(
        R"({"kind": "setfunctor", "base": "builtin:arrow", "sets": {"a": ["p"], "b": ["q"]}})");
    EXPECT_THROW(format::document_from_json(missing_map), ValidationError);
    Json bad_target = Json::parse(
        R"({"kind": "setfunctor", "base": "builtin:arrow", "sets": {"a": ["p"], "b": ["q"]},
            "maps": {"u": {"p": "z"}}})");
    EXPECT_THROW(format::document_from_json(bad_target), ValidationError);
}
