#pragma once

// JSON reading and writing of categories, functors and Set-valued functors.
// The schema is described in docs/format.md. Unknown fields are rejected.
//
// Schema problems (bad JSON, wrong types, missing or unknown fields,
// references to undeclared ids) raise ParseError; well-formed documents that
// fail to describe a category or functor raise ValidationError.

#include <array>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fincoend/catalog.hpp"
#include "fincoend/corpus.hpp"
#include "fincoend/error.hpp"
#include "fincoend/fincat.hpp"
#include "fincoend/functors.hpp"

namespace fincoend::format {

using Json = nlohmann::ordered_json;

namespace detail {

inline void check_fields(const Json& j, const std::string& where, const std::set<std::string>& required,
                         const std::set<std::string>& optional = {}) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    for (const auto& [key, value] : j.items())
        if (!required.count(key) && !optional.count(key)) throw ParseError(where + ": unknown field '" + key + "'");
    for (const auto& key : required)
        if (!j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
}

inline const std::string& as_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a string");
    return j.get_ref<const std::string&>();
}

inline std::vector<std::string> as_strings(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) out.push_back(as_string(e, where));
    return out;
}

inline void check_kind(const Json& j, const std::string& kind, bool required) {
    if (!j.contains("kind")) {
        if (required) throw ParseError("missing field 'kind'");
        return;
    }
    if (as_string(j["kind"], "kind") != kind)
        throw ParseError("expected kind '" + kind + "', found '" + j["kind"].get<std::string>() + "'");
}

// Runs a construction whose generic errors mean the document does not
// describe a valid structure.
template <class F>
auto structural(const std::string& where, F&& f) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

}  // namespace detail

// builtin:<name> for the catalog and corpus categories, plus chain<n>
// ([n] = 0 < ... < n) and discrete<n>.
inline CatPtr builtin_category(const std::string& name) {
    static const std::regex chain_re("chain([0-9])"), discrete_re("discrete([0-9])");
    std::smatch m;
    if (std::regex_match(name, m, chain_re)) return share(catalog::chain(std::stoul(m[1])));
    if (std::regex_match(name, m, discrete_re)) {
        std::vector<std::string> objects;
        for (Index k = 0; k < std::stoul(m[1]); ++k) objects.push_back(std::to_string(k));
        return share(catalog::discrete(objects));
    }
    if (name == "empty") return share(catalog::empty());
    for (const auto& [n, c] : corpus::categories())
        if (n == name) return c;
    throw ParseError("unknown builtin category '" + name + "'");
}

inline std::vector<std::string> builtin_category_names() {
    std::vector<std::string> out{"empty", "chain<n>", "discrete<n>"};
    for (const auto& [n, c] : corpus::categories()) out.push_back(n);
    return out;
}

inline CatPtr category_from_json(const Json& j);

namespace detail {

inline CatPtr inline_category(const Json& j) {
    check_fields(j, "category", {"objects", "morphisms"}, {"kind", "name", "identities", "compose"});
    check_kind(j, "category", false);
    auto objects = as_strings(j["objects"], "objects");
    std::map<std::string, std::string> identities;
    if (j.contains("identities")) {
        if (!j["identities"].is_object()) throw ParseError("identities: expected an object");
        for (const auto& [obj, id] : j["identities"].items()) identities[obj] = as_string(id, "identities");
    }
    if (!j["morphisms"].is_array()) throw ParseError("morphisms: expected an array");
    struct Entry {
        std::string id, src, dst;
    };
    std::vector<Entry> morphisms;
    for (const auto& m : j["morphisms"]) {
        check_fields(m, "morphism", {"id", "src", "dst"});
        morphisms.push_back({as_string(m["id"], "morphism id"), as_string(m["src"], "morphism src"),
                             as_string(m["dst"], "morphism dst")});
    }
    std::vector<std::array<std::string, 3>> triples;
    if (j.contains("compose")) {
        if (!j["compose"].is_array()) throw ParseError("compose: expected an array of [g, f, gf] triples");
        for (const auto& t : j["compose"]) {
            auto s = as_strings(t, "compose");
            if (s.size() != 3) throw ParseError("compose: expected an array of [g, f, gf] triples");
            triples.push_back({s[0], s[1], s[2]});
        }
    }
    return structural("category", [&] {
        FinCat::Builder b;
        std::set<std::string> declared;
        for (const auto& m : morphisms) declared.insert(m.id);
        for (const auto& [obj, id] : identities)
            if (std::find(objects.begin(), objects.end(), obj) == objects.end())
                throw ParseError("identities: unknown object '" + obj + "'");
        // Objects without a declared identity get "id_<object>".
        for (const auto& x : objects) {
            auto it = identities.find(x);
            if (it == identities.end()) {
                b.add_object(x);
            } else {
                if (!declared.count(it->second))
                    throw ParseError("identity '" + it->second + "' is not listed among the morphisms");
                b.add_bare_object(x);
            }
        }
        auto object = [&](const std::string& id) {
            auto x = b.find_object(id);
            if (!x) throw ParseError("morphism references unknown object '" + id + "'");
            return *x;
        };
        for (const auto& m : morphisms) b.add_morphism(m.id, object(m.src), object(m.dst));
        for (const auto& [obj, id] : identities) {
            Index x = *b.find_object(obj), f = *b.find_morphism(id);
            if (b.src(f) != x || b.dst(f) != x)
                throw ValidationError("identity '" + id + "' is not an endomorphism of '" + obj + "'");
            b.set_identity(x, f);
        }
        auto morphism = [&](const std::string& id) {
            auto f = b.find_morphism(id);
            if (!f) throw ParseError("compose references unknown morphism '" + id + "'");
            return *f;
        };
        for (const auto& [g, f, gf] : triples) b.set_compose(morphism(g), morphism(f), morphism(gf));
        return share(std::move(b).build());
    });
}

}  // namespace detail

// A category reference: an inline document, "builtin:<name>",
// {"opposite": ref} or {"product": [ref, ref]}.
inline CatPtr category_from_json(const Json& j) {
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (s.rfind("builtin:", 0) != 0) throw ParseError("category reference '" + s + "' must start with builtin:");
        return builtin_category(s.substr(8));
    }
    if (j.is_object() && j.contains("opposite")) {
        detail::check_fields(j, "opposite", {"opposite"});
        return share(opposite(*category_from_json(j["opposite"])));
    }
    if (j.is_object() && j.contains("product")) {
        detail::check_fields(j, "product", {"product"});
        if (!j["product"].is_array() || j["product"].size() != 2)
            throw ParseError("product: expected two category references");
        return share(product(*category_from_json(j["product"][0]), *category_from_json(j["product"][1])));
    }
    return detail::inline_category(j);
}

inline SetFunctor setfunctor_from_json(const Json& j) {
    detail::check_fields(j, "setfunctor", {"base", "sets"}, {"kind", "name", "maps"});
    detail::check_kind(j, "setfunctor", false);
    CatPtr base = category_from_json(j["base"]);
    if (!j["sets"].is_object()) throw ParseError("sets: expected an object");
    std::map<std::string, std::vector<std::string>> sets;
    for (const auto& [obj, elements] : j["sets"].items()) sets[obj] = detail::as_strings(elements, "sets");
    std::map<std::string, std::map<std::string, std::string>> maps;
    if (j.contains("maps")) {
        if (!j["maps"].is_object()) throw ParseError("maps: expected an object");
        for (const auto& [mor, table] : j["maps"].items()) {
            if (!table.is_object()) throw ParseError("maps: expected an object per morphism");
            for (const auto& [from, to] : table.items()) maps[mor][from] = detail::as_string(to, "maps");
        }
    }
    return detail::structural("setfunctor", [&] {
        for (const auto& [obj, elements] : sets) {
            if (!base->find_object(obj)) throw ParseError("sets: unknown object '" + obj + "'");
            if (std::set<std::string>(elements.begin(), elements.end()).size() != elements.size())
                throw ValidationError("sets: repeated element at '" + obj + "'");
        }
        for (const auto& [mor, table] : maps)
            if (!base->find_morphism(mor)) throw ParseError("maps: unknown morphism '" + mor + "'");
        return make_set_functor(base, sets, maps);
    });
}

inline FinFunctor functor_from_json(const Json& j) {
    detail::check_fields(j, "functor", {"source", "target", "objects"}, {"kind", "name", "morphisms"});
    detail::check_kind(j, "functor", false);
    CatPtr source = category_from_json(j["source"]), target = category_from_json(j["target"]);
    if (!j["objects"].is_object()) throw ParseError("objects: expected an object");
    std::map<std::string, std::string> objects, morphisms;
    for (const auto& [k, v] : j["objects"].items()) objects[k] = detail::as_string(v, "objects");
    if (j.contains("morphisms")) {
        if (!j["morphisms"].is_object()) throw ParseError("morphisms: expected an object");
        for (const auto& [k, v] : j["morphisms"].items()) morphisms[k] = detail::as_string(v, "morphisms");
    }
    return detail::structural("functor", [&] {
        FinFunctor F{source, target, std::vector<Index>(source->object_count()),
                     std::vector<Index>(source->morphism_count())};
        auto known = [](const CatPtr& c, const std::string& id, bool object) {
            auto found = object ? c->find_object(id) : c->find_morphism(id);
            if (!found) throw ParseError(std::string("functor: unknown ") + (object ? "object '" : "morphism '") + id + "'");
            return *found;
        };
        for (const auto& [k, v] : objects) known(source, k, true);
        for (const auto& [k, v] : morphisms) known(source, k, false);
        for (Index x = 0; x < source->object_count(); ++x) {
            auto it = objects.find(source->object_id(x));
            if (it == objects.end()) throw ValidationError("no image for object '" + source->object_id(x) + "'");
            F.object_map[x] = known(target, it->second, true);
        }
        for (Index f = 0; f < source->morphism_count(); ++f) {
            auto it = morphisms.find(source->morphism_id(f));
            if (it != morphisms.end()) {
                F.morphism_map[f] = known(target, it->second, false);
            } else if (source->is_identity(f)) {
                F.morphism_map[f] = target->identity(F.object_map[source->src(f)]);
            } else {
                throw ValidationError("no image for morphism '" + source->morphism_id(f) + "'");
            }
        }
        return F;
    });
}

struct Document {
    std::string kind;
    std::string name;
    CatPtr category;
    std::optional<FinFunctor> functor;
    std::optional<SetFunctor> setfunctor;
};

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

inline Document document_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("document needs a 'kind' field");
    Document d;
    d.kind = detail::as_string(j["kind"], "kind");
    if (j.contains("name")) d.name = detail::as_string(j["name"], "name");
    if (d.kind == "category") {
        d.category = category_from_json(j);
    } else if (d.kind == "functor") {
        d.functor = functor_from_json(j);
    } else if (d.kind == "setfunctor") {
        d.setfunctor = setfunctor_from_json(j);
    } else {
        throw ParseError("unknown kind '" + d.kind + "'");
    }
    return d;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Document read_document(const std::string& path) { return document_from_json(parse_json(read_file(path))); }

// A category argument: "builtin:<name>" or a path to a category document.
inline CatPtr load_category(const std::string& arg) {
    if (arg.rfind("builtin:", 0) == 0) return builtin_category(arg.substr(8));
    Document d = read_document(arg);
    if (!d.category) throw ParseError("'" + arg + "' is a " + d.kind + " document, expected a category");
    return d.category;
}

inline SetFunctor load_setfunctor(const std::string& path) {
    Document d = read_document(path);
    if (!d.setfunctor) throw ParseError("'" + path + "' is a " + d.kind + " document, expected a setfunctor");
    return *d.setfunctor;
}

// ---------------------------------------------------------------------------
// Writing

// Identities are listed explicitly; composites with an identity are left
// for the reader to synthesize.
inline Json to_json(const FinCat& c, const std::string& name = "") {
    Json j;
    j["kind"] = "category";
    if (!name.empty()) j["name"] = name;
    j["objects"] = c.object_ids();
    Json ids = Json::object();
    for (Index x = 0; x < c.object_count(); ++x) ids[c.object_id(x)] = c.morphism_id(c.identity(x));
    j["identities"] = ids;
    Json mors = Json::array();
    for (const auto& m : c.morphisms())
        mors.push_back({{"id", m.id}, {"src", c.object_id(m.src)}, {"dst", c.object_id(m.dst)}});
    j["morphisms"] = mors;
    Json comp = Json::array();
    for (Index g = 0; g < c.morphism_count(); ++g) {
        if (c.is_identity(g)) continue;
        for (const auto& [f, gf] : c.composites_after(g))
            if (!c.is_identity(f)) comp.push_back({c.morphism_id(g), c.morphism_id(f), c.morphism_id(gf)});
    }
    j["compose"] = comp;
    return j;
}

inline Json to_json(const SetFunctor& F, const std::string& name = "") {
    Json j;
    j["kind"] = "setfunctor";
    if (!name.empty()) j["name"] = name;
    Json base = to_json(*F.base);
    base.erase("kind");
    j["base"] = base;
    const FinCat& c = *F.base;
    Json sets = Json::object();
    for (Index x = 0; x < c.object_count(); ++x) sets[c.object_id(x)] = F.sets[x];
    j["sets"] = sets;
    Json maps = Json::object();
    for (Index u = 0; u < c.morphism_count(); ++u) {
        if (c.is_identity(u)) continue;
        Json table = Json::object();
        for (Index e = 0; e < F.size(c.src(u)); ++e) table[F.label(c.src(u), e)] = F.label(c.dst(u), F.apply(u, e));
        maps[c.morphism_id(u)] = table;
    }
    j["maps"] = maps;
    return j;
}

inline Json to_json(const FinFunctor& F, const std::string& name = "") {
    Json j;
    j["kind"] = "functor";
    if (!name.empty()) j["name"] = name;
    Json s = to_json(*F.source), t = to_json(*F.target);
    s.erase("kind");
    t.erase("kind");
    j["source"] = s;
    j["target"] = t;
    Json objects = Json::object(), morphisms = Json::object();
    for (Index x = 0; x < F.source->object_count(); ++x)
        objects[F.source->object_id(x)] = F.target->object_id(F.object_map[x]);
    for (Index f = 0; f < F.source->morphism_count(); ++f)
        morphisms[F.source->morphism_id(f)] = F.target->morphism_id(F.morphism_map[f]);
    j["objects"] = objects;
    j["morphisms"] = morphisms;
    return j;
}

}  // namespace fincoend::format
