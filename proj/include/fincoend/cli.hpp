#pragma once

// The fincoend command line. run() parses arguments with CLI11, executes one
// subcommand and returns its exit status:
//   0 success, 1 routes disagree, 2 validation failure, 3 parse error,
//   4 budget or truncation error.

#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fincoend/checks.hpp"
#include "fincoend/coends.hpp"
#include "fincoend/constructions.hpp"
#include "fincoend/format.hpp"
#include "fincoend/weighted.hpp"

namespace fincoend::cli {

enum Exit : int { ok = 0, disagree = 1, invalid = 2, parse_error = 3, budget = 4 };

using Json = nlohmann::ordered_json;

// Reports are lists of records; the structured format prints them one per
// line and the human format renders each kind as text.
class Report {
public:
    void info(const std::string& text) { records_.push_back({{"record", "info"}, {"text", text}}); }
    void route(const std::string& route, Index size, const std::string& unit) {
        records_.push_back({{"record", "route"}, {"route", route}, {"size", size}, {"unit", unit}});
    }
    void item(const std::string& route, const std::string& value) {
        records_.push_back({{"record", "item"}, {"route", route}, {"value", value}});
    }
    void comparison(const std::string& between, const Comparison& c) {
        Json r{{"record", "comparison"}, {"between", between}, {"agree", c.agree}};
        if (c.agree) {
            r["map"] = c.map;
        } else {
            r["witness"] = c.witness;
        }
        records_.push_back(r);
        agree_ = agree_ && c.agree;
    }
    void fail(const std::string& why) {
        records_.push_back({{"record", "failure"}, {"text", why}});
        agree_ = false;
    }
    // Final line: "<size> <unit>, <message>" or the disagreement.
    void verdict(Index size, const std::string& unit, const std::string& message) {
        records_.push_back({{"record", "verdict"},
                            {"size", size},
                            {"unit", unit},
                            {"agree", agree_},
                            {"message", agree_ ? message : "routes DISAGREE"}});
    }
    bool agree() const { return agree_; }

    void print(std::ostream& os, bool structured) const {
        for (const auto& r : records_) {
            if (structured) {
                os << r.dump() << "\n";
                continue;
            }
            const std::string kind = r["record"];
            if (kind == "info") {
                os << r["text"].get<std::string>() << "\n";
            } else if (kind == "route") {
                os << "  " << r["route"].get<std::string>() << ": "
                   << counted(r["size"].get<Index>(), r["unit"].get<std::string>()) << "\n";
            } else if (kind == "item") {
                os << "    " << r["value"].get<std::string>() << "\n";
            } else if (kind == "comparison") {
                os << "  " << r["between"].get<std::string>() << ": ";
                if (r["agree"].get<bool>()) {
                    os << "agree, bijection " << family_string(r["map"].get<std::vector<Index>>()) << "\n";
                } else {
                    os << "DISAGREE: " << r["witness"].get<std::string>() << "\n";
                }
            } else if (kind == "failure") {
                os << "  FAILED: " << r["text"].get<std::string>() << "\n";
            } else if (kind == "verdict") {
                os << counted(r["size"].get<Index>(), r["unit"].get<std::string>()) << ", "
                   << r["message"].get<std::string>() << "\n";
            }
        }
    }

    static std::string counted(Index n, const std::string& unit) {
        std::string plural = unit == "class" ? "classes" : unit + "s";
        return std::to_string(n) + " " + (n == 1 ? unit : plural);
    }

private:
    std::vector<Json> records_;
    bool agree_ = true;
};

struct Common {
    Index set_cap = 4;
    Index budget = 1'000'000;
    std::string format = "human";
    Index listing = 16;  // items printed per route

    Limits limits() const { return {set_cap, budget}; }
    bool structured() const { return format == "structured"; }
};

namespace detail {

inline void require_cap(const SetFunctor& F, const Common& common, const std::string& what) {
    if (F.max_size() > common.set_cap)
        throw BudgetExceeded(what + " has a set of size " + std::to_string(F.max_size()) + ", above the set cap " +
                             std::to_string(common.set_cap) + " (raise --set-cap)");
}

inline void require_valid(const SetFunctor& F, const std::string& what) {
    ValidationReport r = validate_set_functor(F);
    if (!r.ok()) throw ValidationError(what + " is not a functor: " + r.message);
}

// builtin:hom or builtin:singleton over the given base, or a setfunctor file.
inline SetFunctor bifunctor_argument(const std::string& arg, const CatPtr& c, Convention convention) {
    if (arg == "builtin:hom") return convention == Convention::end ? hom_end(c) : hom_coend(c);
    CatPtr base = convention == Convention::end ? share(product(opposite(*c), *c)) : share(product(*c, opposite(*c)));
    if (arg == "builtin:singleton") return singleton_functor(base);
    return format::load_setfunctor(arg);
}

inline std::string labelled_family(const SetFunctor& F, const std::vector<Index>& family,
                                   const std::vector<Index>& objects) {
    std::string s = "(";
    for (Index k = 0; k < family.size(); ++k)
        s += (k ? ", " : "") + F.base->object_id(objects[k]) + ": " + F.label(objects[k], family[k]);
    return s + ")";
}

inline std::vector<Index> diagonal_objects(const Bifunctor& F) {
    std::vector<Index> out;
    for (Index x = 0; x < F.category->object_count(); ++x) out.push_back(F.diagonal(x));
    return out;
}

inline std::string class_listing(const Bifunctor& F, const CoendResult& r, Index cls) {
    std::string s = "{";
    bool first = true;
    for (Index x = 0; x < F.category->object_count(); ++x) {
        Index xx = F.diagonal(x);
        for (Index e = 0; e < F.functor.size(xx); ++e)
            if (r.diagonal_class[r.offsets[x] + e] == cls) {
                s += (first ? "" : ", ") + F.category->object_id(x) + ": " + F.functor.label(xx, e);
                first = false;
            }
    }
    return s + "}";
}

inline std::string nat_string(const SetFunctor& W, const SetFunctor& psi, const NatTransf& t) {
    std::string s;
    const FinCat& c = *W.base;
    for (Index x = 0; x < c.object_count(); ++x) {
        s += (x ? "; " : "") + c.object_id(x) + ": {";
        for (Index e = 0; e < t.components[x].size(); ++e)
            s += (e ? ", " : "") + W.label(x, e) + "->" + psi.label(x, t.components[x][e]);
        s += "}";
    }
    return s;
}

inline void write_json(const Json& j, const std::string& output, std::ostream& out) {
    if (output.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(output);
    if (!f) throw ParseError("cannot write '" + output + "'");
    f << j.dump(2) << "\n";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands. Each returns an exit status and writes to out/err.

inline int cmd_validate(const std::string& path, const Common& common, std::ostream& out) {
    format::Document d = format::read_document(path);
    Report rep;
    ValidationReport r;
    std::string what;
    if (d.category) {
        r = validate_category(*d.category);
        what = "category with " + Report::counted(d.category->object_count(), "object") + " and " +
               Report::counted(d.category->morphism_count(), "morphism");
    } else if (d.functor) {
        r = validate_functor(*d.functor);
        what = "functor";
    } else {
        r = validate_set_functor(*d.setfunctor);
        what = "setfunctor with " + Report::counted(d.setfunctor->total_size(), "element");
    }
    if (r.ok()) {
        rep.info("valid " + what);
        rep.print(out, common.structured());
        return ok;
    }
    std::string witnesses;
    for (const auto& w : r.witnesses) witnesses += (witnesses.empty() ? "" : ", ") + w;
    rep.info(std::string("validation failure: ") + law_name(r.violated) + ": " + r.message +
             (witnesses.empty() ? "" : " [witnesses: " + witnesses + "]"));
    rep.print(out, common.structured());
    return invalid;
}

inline int cmd_end(const std::string& cat, const std::string& bif, const std::string& route, Index trunc,
                   const Common& common, std::ostream& out) {
    CatPtr c = format::load_category(cat);
    Bifunctor F = end_bifunctor(c, detail::bifunctor_argument(bif, c, Convention::end));
    detail::require_valid(F.functor, "bifunctor");
    detail::require_cap(F.functor, common, "bifunctor");
    EndOptions eo;
    eo.limits = common.limits();
    std::vector<EndResult> results;
    if (route == "equalizer" || route == "all") results.push_back(end_via_equalizer(F, eo));
    if (route == "tw" || route == "all") results.push_back(end_via_tw(F));
    if (route == "simplices" || route == "all") results.push_back(end_via_simplices(F, trunc, eo.limits));
    Report rep;
    rep.info("end over " + Report::counted(c->object_count(), "object"));
    auto diag = detail::diagonal_objects(F);
    for (const auto& r : results) {
        rep.route(route_name(r.route, Convention::end), r.size(), "element");
        for (Index k = 0; k < r.size() && k < common.listing; ++k)
            rep.item(route_name(r.route, Convention::end), detail::labelled_family(F.functor, r.families[k], diag));
    }
    for (Index k = 1; k < results.size(); ++k)
        rep.comparison(std::string(route_name(results[0].route, Convention::end)) + "/" +
                           route_name(results[k].route, Convention::end),
                       compare_ends(results[0], results[k]));
    rep.verdict(results.front().size(), "element", results.size() > 1 ? "routes agree" : "computed");
    rep.print(out, common.structured());
    return rep.agree() ? ok : disagree;
}

inline int cmd_coend(const std::string& cat, const std::string& bif, const std::string& route, Index trunc,
                     const Common& common, std::ostream& out) {
    CatPtr c = format::load_category(cat);
    Bifunctor F = coend_bifunctor(c, detail::bifunctor_argument(bif, c, Convention::coend));
    detail::require_valid(F.functor, "bifunctor");
    detail::require_cap(F.functor, common, "bifunctor");
    std::vector<CoendResult> results;
    bool all = route == "all";
    if (route == "coequalizer" || route == "equalizer" || all) results.push_back(coend_via_coequalizer(F));
    if (route == "tw" || all) results.push_back(coend_via_tw(F));
    if (route == "simplices" || all) results.push_back(coend_via_simplices(F, trunc, common.limits()));
    if (route == "simplicial" || all) results.push_back(coend_simplicial(F));
    Report rep;
    rep.info("coend over " + Report::counted(c->object_count(), "object"));
    for (const auto& r : results) {
        std::string name = route_name(r.route, Convention::coend);
        rep.route(name, r.size(), "class");
        for (Index k = 0; k < r.size() && k < common.listing; ++k) rep.item(name, detail::class_listing(F, r, k));
    }
    for (Index k = 1; k < results.size(); ++k)
        rep.comparison(std::string(route_name(results[0].route, Convention::coend)) + "/" +
                           route_name(results[k].route, Convention::coend),
                       compare_coends(results[0], results[k]));
    rep.verdict(results.front().size(), "class", results.size() > 1 ? "routes agree" : "computed");
    rep.print(out, common.structured());
    return rep.agree() ? ok : disagree;
}

inline void describe_carrier(const FinCat& k, std::ostream& err) {
    std::vector<std::string> terminal, initial;
    for (Index t = 0; t < k.object_count(); ++t) {
        bool is_terminal = true, is_initial = true;
        for (Index a = 0; a < k.object_count(); ++a) {
            is_terminal = is_terminal && k.hom(a, t).size() == 1;
            is_initial = is_initial && k.hom(t, a).size() == 1;
        }
        if (is_terminal) terminal.push_back(k.object_id(t));
        if (is_initial) initial.push_back(k.object_id(t));
    }
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
        return s.empty() ? std::string("none") : s;
    };
    err << k.object_count() << " objects, " << k.morphism_count() << " morphisms; terminal: " << join(terminal)
        << "; initial: " << join(initial) << "\n";
}

inline int cmd_tw(const std::string& cat, bool right, const std::string& output, std::ostream& out,
                  std::ostream& err) {
    CatPtr c = format::load_category(cat);
    TwCat tw = twisted(c, right ? Handedness::right : Handedness::left);
    describe_carrier(*tw.carrier, err);
    detail::write_json(format::to_json(*tw.carrier, right ? "Tw^r" : "Tw^l"), output, out);
    return ok;
}

inline int cmd_simplices(const std::string& cat, Index trunc, const Common& common, const std::string& output,
                         std::ostream& out, std::ostream& err) {
    CatPtr c = format::load_category(cat);
    SimplexCat s = simplices(c, trunc, common.limits());
    std::string levels;
    for (Index n = 0; n <= trunc; ++n) levels += (n ? "/" : "") + std::to_string(s.objects_at(n).size());
    err << "levels " << levels << "; " << s.carrier->morphism_count() << " morphisms\n";
    detail::write_json(format::to_json(*s.carrier, "simplices"), output, out);
    return ok;
}

inline int cmd_elements(const std::string& arg, bool hom, const std::string& variance, const std::string& output,
                        std::ostream& out, std::ostream& err) {
    if (hom) {
        CatPtr c = format::load_category(arg);
        HomElementsComparison h = elements_of_hom(c);
        bool iso = is_isomorphism(h.iso) && validate_functor(h.iso).ok();
        describe_carrier(*h.elements.carrier, err);
        err << (iso ? "isomorphic to Tw^r" : "NOT isomorphic to Tw^r") << "\n";
        detail::write_json(format::to_json(*h.elements.carrier, "elements"), output, out);
        return iso ? ok : disagree;
    }
    SetFunctor W = format::load_setfunctor(arg);
    detail::require_valid(W, "weight");
    ElementsCat el = elements(W, variance == "contravariant" ? Variance::contravariant : Variance::covariant);
    describe_carrier(*el.carrier, err);
    detail::write_json(format::to_json(*el.carrier, "elements"), output, out);
    return ok;
}

inline std::pair<SetFunctor, SetFunctor> load_pair(const std::string& a, const std::string& b, const Common& common) {
    SetFunctor W = format::load_setfunctor(a), D = format::load_setfunctor(b);
    detail::require_valid(W, "weight");
    detail::require_valid(D, "diagram");
    detail::require_cap(W, common, "weight");
    detail::require_cap(D, common, "diagram");
    return {W, D};
}

inline int cmd_wlim(const std::string& wpath, const std::string& dpath, const Common& common, std::ostream& out) {
    auto [W, psi] = load_pair(wpath, dpath, common);
    WeightedLimit a = wlimit_via_end(W, psi, common.limits()), b = wlimit_via_fibration(W, psi);
    Report rep;
    rep.info("weighted limit");
    for (const auto* r : {&a, &b}) {
        rep.route(weighted_route_name(r->route), r->size(), "element");
        for (Index k = 0; k < r->size() && k < common.listing; ++k)
            rep.item(weighted_route_name(r->route), detail::nat_string(W, psi, r->elements[k]));
    }
    rep.comparison("formula/fibration", compare_weighted_limits(a, b));
    rep.verdict(a.size(), "element", "routes agree");
    rep.print(out, common.structured());
    return rep.agree() ? ok : disagree;
}

inline int cmd_wcolim(const std::string& wpath, const std::string& dpath, const Common& common, std::ostream& out) {
    auto [W, phi] = load_pair(wpath, dpath, common);
    WeightedColimit a = wcolimit_via_coend(W, phi), b = wcolimit_via_fibration(W, phi);
    Report rep;
    rep.info("weighted colimit");
    for (const auto* r : {&a, &b}) {
        rep.route(weighted_route_name(r->route), r->size(), "class");
        for (Index cls = 0; cls < r->size() && cls < common.listing; ++cls) {
            std::string s = "{";
            bool first = true;
            for (Index i = 0; i < phi.base->object_count(); ++i)
                for (Index w = 0; w < W.size(i); ++w)
                    for (Index e = 0; e < phi.size(i); ++e)
                        if (r->class_of[r->tagged(i, w, e, phi.size(i))] == cls) {
                            s += (first ? "" : ", ") + phi.base->object_id(i) + ": (" + W.label(i, w) + ", " +
                                 phi.label(i, e) + ")";
                            first = false;
                        }
            rep.item(weighted_route_name(r->route), s + "}");
        }
    }
    rep.comparison("formula/fibration", compare_weighted_colimits(a, b));
    rep.verdict(a.size(), "class", "routes agree");
    rep.print(out, common.structured());
    return rep.agree() ? ok : disagree;
}

inline int cmd_nat(const std::string& apath, const std::string& bpath, const Common& common, std::ostream& out) {
    auto [phi, psi] = load_pair(apath, bpath, common);
    NatSpaceReport r = nat_space(phi, psi, common.limits());
    Report rep;
    rep.info("natural transformations");
    rep.route("enumerated", r.nat.size(), "transformation");
    for (Index k = 0; k < r.nat.size() && k < common.listing; ++k)
        rep.item("enumerated", detail::nat_string(phi, psi, r.nat[k]));
    rep.route("weighted limit", r.weighted.size(), "element");
    rep.comparison("enumerated/weighted", r.comparison);
    rep.verdict(r.nat.size(), "transformation", "enumeration agrees with the weighted limit");
    rep.print(out, common.structured());
    return rep.agree() ? ok : disagree;
}

inline int cmd_bk(const std::string& path, const Common& common, std::ostream& out) {
    SetFunctor F = format::load_setfunctor(path);
    detail::require_valid(F, "diagram");
    detail::require_cap(F, common, "diagram");
    BkResult r = colim_bk(F);
    Report rep;
    rep.info("colimit");
    rep.route("bk", r.quotient.size(), "class");
    rep.route("direct", r.direct.size(), "class");
    for (Index k = 0; k < r.direct.size() && k < common.listing; ++k) {
        std::string s = "{";
        for (Index j = 0; j < r.direct.classes[k].size(); ++j) {
            auto [x, e] = r.direct.classes[k][j];
            s += (j ? ", " : "") + F.base->object_id(x) + ": " + F.label(x, e);
        }
        rep.item("direct", s + "}");
    }
    rep.comparison("bk/direct", r.comparison);
    rep.verdict(r.direct.size(), "class", "BK agrees with direct colimit");
    rep.print(out, common.structured());
    return rep.agree() ? ok : disagree;
}

inline int cmd_fubini(const std::string& cpath, const std::string& dpath, const std::string& bif,
                      const Common& common, std::ostream& out) {
    CatPtr c = format::load_category(cpath), d = format::load_category(dpath);
    CatPtr cd = share(product(*c, *d));
    Bifunctor F = end_bifunctor(cd, detail::bifunctor_argument(bif, cd, Convention::end));
    detail::require_valid(F.functor, "bifunctor");
    detail::require_cap(F.functor, common, "bifunctor");
    FubiniReport r = check_fubini(F, c, d, common.limits());
    Report rep;
    rep.info("ends over the product");
    rep.route("joint", r.joint.size(), "element");
    rep.route("c then d", r.c_then_d.size(), "element");
    rep.route("d then c", r.d_then_c.size(), "element");
    rep.comparison("joint/c then d", r.joint_vs_cd);
    rep.comparison("joint/d then c", r.joint_vs_dc);
    rep.verdict(r.joint.size(), "element", "three ends agree");
    rep.print(out, common.structured());
    return rep.agree() ? ok : disagree;
}

inline int cmd_check(const checks::RunConfig& cfg, std::ostream& out) {
    checks::Summary s = checks::run(cfg);
    out << checks::render(s, cfg.structured);
    return s.ok() ? ok : disagree;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Finite (co)end calculus: constructions and route comparisons over small categories"};
    app.require_subcommand(1);
    // Config files are read by the root app; fallthrough lets --config appear
    // after the subcommand. Options sit in a section named after it, e.g. [check].
    app.fallthrough();
    app.set_config("--config", "", "TOML file with subcommand options, in sections such as [check]")
        ->envname("FINCOEND_CONFIG");
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--set-cap", common.set_cap, "Largest set allowed per object")->capture_default_str();
        sub->add_option("--budget", common.budget, "Enumeration budget in candidates")->capture_default_str();
        sub->add_option("--format", common.format, "Report format")
            ->check(CLI::IsMember({"human", "structured"}))
            ->capture_default_str();
    };
    int status = ok;
    std::string a, b, c3, route = "all", output, variance = "covariant";
    Index trunc = 2;
    bool right = false, hom = false;

    auto* validate = app.add_subcommand("validate", "Validate a category, functor or setfunctor file");
    validate->add_option("path", a, "Document to validate")->required();
    add_common(validate);
    validate->callback([&] { status = cmd_validate(a, common, out); });

    auto* end = app.add_subcommand("end", "End of a bifunctor on c^op x c");
    auto* coend = app.add_subcommand("coend", "Coend of a bifunctor on c x c^op");
    for (auto* sub : {end, coend}) {
        sub->add_option("category", a, "Category file or builtin:<name>")->required();
        sub->add_option("bifunctor", b, "Setfunctor file, builtin:hom or builtin:singleton")->required();
        sub->add_option("--trunc", trunc, "Truncation N of the simplex route")->capture_default_str();
        add_common(sub);
    }
    end->add_option("--route", route, "Route to run")
        ->check(CLI::IsMember({"equalizer", "tw", "simplices", "all"}))
        ->capture_default_str();
    coend->add_option("--route", route, "Route to run")
        ->check(CLI::IsMember({"coequalizer", "equalizer", "tw", "simplices", "simplicial", "all"}))
        ->capture_default_str();
    end->callback([&] { status = cmd_end(a, b, route, trunc, common, out); });
    coend->callback([&] { status = cmd_coend(a, b, route, trunc, common, out); });

    auto* tw = app.add_subcommand("tw", "Twisted arrow category, written as a category document");
    tw->add_option("category", a, "Category file or builtin:<name>")->required();
    tw->add_flag("--right", right, "Right twisted arrow category");
    tw->add_option("-o,--output", output, "Write the document here instead of stdout");
    tw->callback([&] { status = cmd_tw(a, right, output, out, err); });

    auto* simp = app.add_subcommand("simplices", "Truncated category of simplices");
    simp->add_option("category", a, "Category file or builtin:<name>")->required();
    simp->add_option("--trunc", trunc, "Largest simplex dimension")->capture_default_str();
    simp->add_option("-o,--output", output, "Write the document here instead of stdout");
    add_common(simp);
    simp->callback([&] { status = cmd_simplices(a, trunc, common, output, out, err); });

    auto* el = app.add_subcommand("elements", "Category of elements of a setfunctor");
    el->add_option("input", a, "Setfunctor file, or a category with --hom")->required();
    el->add_flag("--hom", hom, "Use the Hom presheaf of the category and compare with Tw^r");
    el->add_option("--variance", variance, "Read the setfunctor as a covariant functor or a presheaf")
        ->check(CLI::IsMember({"covariant", "contravariant"}))
        ->capture_default_str();
    el->add_option("-o,--output", output, "Write the document here instead of stdout");
    el->callback([&] { status = cmd_elements(a, hom, variance, output, out, err); });

    auto* wlim = app.add_subcommand("wlim", "Weighted limit: (co)end formula against the fibration route");
    auto* wcolim = app.add_subcommand("wcolim", "Weighted colimit: coend formula against the fibration route");
    auto* nat = app.add_subcommand("nat", "Natural transformations against the weighted limit");
    for (auto* sub : {wlim, wcolim, nat}) {
        sub->add_option("weight", a, "Weight setfunctor file")->required();
        sub->add_option("diagram", b, "Diagram setfunctor file")->required();
        add_common(sub);
    }
    wlim->callback([&] { status = cmd_wlim(a, b, common, out); });
    wcolim->callback([&] { status = cmd_wcolim(a, b, common, out); });
    nat->callback([&] { status = cmd_nat(a, b, common, out); });

    auto* bk = app.add_subcommand("bk", "Bousfield-Kan coequalizer against the direct colimit");
    bk->add_option("diagram", a, "Setfunctor file")->required();
    add_common(bk);
    bk->callback([&] { status = cmd_bk(a, common, out); });

    auto* fub = app.add_subcommand("fubini", "Joint end over c x d against both iterated ends");
    fub->add_option("c", a, "First factor")->required();
    fub->add_option("d", b, "Second factor")->required();
    fub->add_option("bifunctor", c3, "Setfunctor file or builtin:hom")->required();
    add_common(fub);
    fub->callback([&] { status = cmd_fubini(a, b, c3, common, out); });

    checks::RunConfig cfg;
    auto* check = app.add_subcommand("check", "Run the property-check suites over the seeded corpus");
    check->add_option("--suite", cfg.suite, "Suite to run")
        ->check(CLI::IsMember(checks::suite_names()))
        ->capture_default_str();
    check->add_option("--seed", cfg.seed, "Corpus seed")->capture_default_str();
    check->add_option("--trunc", cfg.trunc, "Truncation N of the simplex routes")->capture_default_str();
    check->add_option("--set-cap", cfg.set_cap, "Largest generated set")->capture_default_str();
    check->add_option("--budget", cfg.budget, "Enumeration budget in candidates")->capture_default_str();
    std::string check_format = "human";
    check->add_option("--format", check_format, "Report format")
        ->check(CLI::IsMember({"human", "structured"}))
        ->capture_default_str();
    check->add_flag("--mutate", cfg.mutate, "Test mode: drop wedge conditions from the equalizer route");
    check->callback([&] {
        cfg.structured = check_format == "structured";
        status = cmd_check(cfg, out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help(e.get_name() == "--help" ? "" : e.get_name());
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return parse_error;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return budget;
    } catch (const TruncationError& e) {
        err << "truncation error: " << e.what() << "\n";
        return budget;
    } catch (const Error& e) {
        err << "validation failure: " << e.what() << "\n";
        return invalid;
    }
    return status;
}

}  // namespace fincoend::cli
