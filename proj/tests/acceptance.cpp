// One PASS/FAIL line per acceptance criterion over the default corpus.
// Exit status is 0 iff every criterion passes.

#include <cstdio>
#include <string>
#include <vector>

#include "fincoend/checks.hpp"

using namespace fincoend;

namespace {

struct Requirement {
    std::string invariant;
    Index min_instances = 1;
};

struct Criterion {
    int number;
    std::string title;
    std::vector<Requirement> requirements;
    double max_seconds = 0;  // 0: no runtime bound
};

// Categories of at most 4 objects and 12 morphisms, sets of at most 4 elements.
std::string corpus_bounds(const corpus::Params& p) {
    for (const auto& inst : corpus::end_instances(p)) {
        const FinCat& c = *inst.F.category;
        if (c.object_count() > 4 || c.morphism_count() > 12) return inst.name + ": category too large";
        if (inst.F.functor.max_size() > 4) return inst.name + ": set too large";
    }
    return "";
}

}  // namespace

int main() {
    checks::RunConfig cfg;
    checks::Summary s = checks::run(cfg);

    const std::vector<Criterion> criteria = {
        {1, "end routes agree", {{"end_routes", 30}}, 60},
        {2, "coend routes agree", {{"coend_routes", 30}}, 60},
        {3, "Bousfield-Kan colimits", {{"bk", 30}}},
        {4, "Fubini", {{"fubini", 10}}},
        {5, "weighted limit and colimit routes", {{"wlimit_routes", 30}, {"wcolimit_routes", 30}}},
        {6, "Nat as a weighted limit", {{"nat_space", 30}}},
        {7, "density of representables", {{"density", 20}}},
        {8,
         "twisted arrow combinatorics",
         {{"tw_chain_posets", 4}, {"tw_right_opposite", 20}, {"tw_simplex_levels", 20}, {"twisted_square", 20}}},
        {9, "pointed simplex adjunctions and epsilon", {{"adjunction_pi_l"}, {"adjunction_l_lambda"}, {"epsilon_lv"}}},
        {10, "truncation stabilization", {{"stabilization", 30}}},
        {11, "coend as weighted colimit", {{"coend_as_weighted", 20}}},
        {12, "cocompletion", {{"cocompletion", 10}}},
    };

    std::string bounds = corpus_bounds(cfg.params());
    bool all = true;
    for (const auto& c : criteria) {
        std::string detail;
        bool pass = true;
        double seconds = 0;
        for (const auto& req : c.requirements) {
            const checks::InvariantResult* r = s.find(req.invariant);
            if (!r) {
                pass = false;
                detail += " " + req.invariant + " missing;";
                continue;
            }
            seconds += r->seconds;
            detail += " " + req.invariant + " " + std::to_string(r->passed) + "/" + std::to_string(r->instances()) + ";";
            if (!r->ok() || r->instances() < req.min_instances) pass = false;
            if (!r->failures.empty()) detail += " first failure: " + r->failures.front().instance + ": " +
                                                r->failures.front().witness + ";";
        }
        if (c.max_seconds > 0 && seconds > c.max_seconds) pass = false;
        if (c.number <= 2 && !bounds.empty()) {
            pass = false;
            detail += " corpus bounds: " + bounds + ";";
        }
        char time[32];
        std::snprintf(time, sizeof time, " %.2fs", seconds);
        std::printf("%s criterion %2d (%s):%s%s\n", pass ? "PASS" : "FAIL", c.number, c.title.c_str(),
                    detail.c_str(), time);
        all = all && pass;
    }
    std::printf("%s\n", all ? "all acceptance criteria pass" : "some acceptance criteria FAIL");
    return all ? 0 : 1;
}
