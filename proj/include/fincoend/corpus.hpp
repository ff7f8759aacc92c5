#pragma once

// Seeded test corpus: a fixed list of small categories and randomly
// generated Set-valued functors on them. Every instance draws from its own
// generator seeded by (seed, instance index), so instances can be produced
// in any order.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fincoend/catalog.hpp"
#include "fincoend/coends.hpp"
#include "fincoend/fincat.hpp"
#include "fincoend/functors.hpp"

namespace fincoend::corpus {

struct NamedCategory {
    std::string name;
    CatPtr cat;
};

inline std::vector<NamedCategory> categories() {
    using namespace catalog;
    FinCat two = walking_arrow();
    FinCat z2 = cyclic2();
    FinCat idem = idempotent();
    FinCat diamond = poset({"0", "l", "r", "1"}, {{"0", "l"}, {"0", "r"}, {"l", "1"}, {"r", "1"}});
    FinCat square = free_category({"a", "b", "c", "d"},
                                  {{"f", "a", "b"}, {"g", "a", "c"}, {"h", "b", "d"}, {"k", "c", "d"}, {"l", "a", "d"}});
    std::vector<NamedCategory> out{
        {"terminal", share(terminal())},
        {"discrete2", share(discrete({"x", "y"}))},
        {"arrow", share(two)},
        {"chain2", share(chain(2))},
        {"chain3", share(chain(3))},
        {"Z2", share(z2)},
        {"Z3", share(monoid({"e", "t", "tt"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}))},
        {"idempotent", share(idem)},
        {"left_zero", share(monoid({"1", "x", "y"}, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}))},
        {"diamond", share(diamond)},
        {"span", share(poset({"0", "l", "r"}, {{"0", "l"}, {"0", "r"}}))},
        {"cospan", share(poset({"l", "r", "1"}, {{"l", "1"}, {"r", "1"}}))},
        {"parallel", share(free_category({"a", "b"}, {{"f", "a", "b"}, {"g", "a", "b"}}))},
        {"composable", share(free_category({"a", "b", "c"}, {{"f", "a", "b"}, {"g", "b", "c"}}))},
        {"free_square", share(square)},
        {"arrow*arrow", share(product(two, two))},
        {"arrow*Z2", share(product(two, z2))},
        {"Z2*Z2", share(product(z2, z2))},
        {"Z2*idempotent", share(product(z2, idem))},
        {"idempotent*arrow", share(product(idem, two))},
        {"op(arrow)", share(opposite(two))},
        {"op(idempotent)", share(opposite(idem))},
        {"op(free_square)", share(opposite(square))},
    };
    return out;
}

// The categories used as factors of Fubini instances.
inline std::vector<NamedCategory> factors() {
    using namespace catalog;
    return {{"terminal", share(terminal())},
            {"arrow", share(walking_arrow())},
            {"Z2", share(cyclic2())},
            {"idempotent", share(idempotent())},
            {"discrete2", share(discrete({"x", "y"}))}};
}

struct Params {
    std::uint64_t seed = 1;
    Index set_cap = 4;
    Limits limits{};
};

inline std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

inline Index uniform(std::mt19937_64& rng, Index lo, Index hi) {
    return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

// A functor c -> Set with random set sizes in [0, cap] and random function
// tables, found by randomized backtracking over the non-identity morphisms
// with every composition constraint checked as soon as its three morphisms
// are assigned. Returns nothing if the search budget runs out.
inline std::optional<SetFunctor> search_functor(const CatPtr& c, std::mt19937_64& rng, Index cap,
                                                Index budget = 20000) {
    const FinCat& C = *c;
    const Index n = C.object_count(), m = C.morphism_count();
    std::vector<Index> sizes(n);
    for (auto& s : sizes) s = uniform(rng, 0, cap);
    // A nonempty set somewhere keeps most instances interesting.
    if (n && cap && std::all_of(sizes.begin(), sizes.end(), [](Index s) { return s == 0; }))
        sizes[uniform(rng, 0, n - 1)] = uniform(rng, 1, cap);
    for (bool changed = true; changed;) {
        changed = false;
        for (Index f = 0; f < m; ++f)
            if (sizes[C.src(f)] > 0 && sizes[C.dst(f)] == 0) {
                sizes[C.dst(f)] = 1;
                changed = true;
            }
    }

    std::vector<Index> order;
    for (Index f = 0; f < m; ++f)
        if (!C.is_identity(f)) order.push_back(f);
    std::vector<Index> rank(m, 0);
    for (Index k = 0; k < order.size(); ++k) rank[order[k]] = k + 1;
    // Triples (g, f, g∘f) among non-identities, filed under the last one assigned.
    std::vector<std::vector<std::array<Index, 3>>> checks(order.size() + 1);
    for (Index g : order)
        for (const auto& [f, gf] : C.composites_after(g)) {
            if (C.is_identity(f)) continue;
            Index last = std::max({rank[g], rank[f], rank[gf]});
            checks[last].push_back({g, f, gf});
        }

    std::vector<std::vector<Index>> tables(m);
    for (Index x = 0; x < n; ++x) {
        tables[C.identity(x)].resize(sizes[x]);
        for (Index e = 0; e < sizes[x]; ++e) tables[C.identity(x)][e] = e;
    }
    auto valid_at = [&](Index k) {
        for (const auto& [g, f, gf] : checks[k])
            for (Index e = 0; e < sizes[C.src(f)]; ++e)
                if (tables[g][tables[f][e]] != tables[gf][e]) return false;
        return true;
    };

    Index visited = 0;
    std::function<bool(Index)> assign = [&](Index k) -> bool {
        if (k == order.size()) return true;
        Index f = order[k];
        Index dom = sizes[C.src(f)], cod = sizes[C.dst(f)];
        if (dom > 0 && cod == 0) return false;
        Index count = 1;
        for (Index e = 0; e < dom; ++e) count *= cod;
        Index start = uniform(rng, 0, count - 1);
        for (Index step = 0; step < count; ++step) {
            if (++visited > budget) return false;
            Index code = (start + step) % count;
            tables[f].assign(dom, 0);
            for (Index e = 0; e < dom; ++e) {
                tables[f][e] = code % cod;
                code /= cod;
            }
            if (valid_at(k + 1) && assign(k + 1)) return true;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;

    SetFunctor F{c, std::vector<std::vector<std::string>>(n), std::move(tables)};
    for (Index x = 0; x < n; ++x)
        for (Index e = 0; e < sizes[x]; ++e) F.sets[x].push_back(std::to_string(e));
    return F;
}

// A random functor c -> Set with sets of size at most cap: a searched
// assignment when one turns up, otherwise a combination of corepresentables
// and constants.
inline SetFunctor random_functor(const CatPtr& c, std::mt19937_64& rng, Index cap) {
    for (int attempt = 0; attempt < 4; ++attempt)
        if (auto F = search_functor(c, rng, cap)) return *F;
    for (int attempt = 0; attempt < 8; ++attempt) {
        SetFunctor F = corepresentable(c, uniform(rng, 0, c->object_count() - 1));
        if (uniform(rng, 0, 1)) F = coproduct(F, constant_functor(c, {"*"}));
        if (F.max_size() <= cap) return F;
    }
    std::vector<std::string> labels;
    for (Index k = 0; k < std::min<Index>(cap, 2); ++k) labels.push_back(std::to_string(k));
    return constant_functor(c, labels);
}

inline SetFunctor random_presheaf(const CatPtr& c, std::mt19937_64& rng, Index cap) {
    return random_functor(share(opposite(*c)), rng, cap);
}

struct EndInstance {
    std::string name;
    Bifunctor F;
};

// End-convention bifunctors: Hom and, per category, random external
// products P ⊠ Q and their combinations with Hom. Instances whose sets
// exceed the cap are skipped.
inline std::vector<EndInstance> end_instances(const Params& p) {
    std::vector<EndInstance> out;
    std::uint64_t index = 0;
    for (const auto& [name, c] : categories()) {
        SetFunctor h = hom_end(c);
        auto keep = [&](const std::string& label, SetFunctor F) {
            if (F.max_size() <= p.set_cap) out.push_back({name + ":" + label, end_bifunctor(c, std::move(F))});
        };
        keep("hom", h);
        for (int k = 0; k < 3; ++k) {
            auto rng = instance_rng(p.seed, (index++ << 8) | 0x11);
            Index cap = std::max<Index>(1, std::min<Index>(p.set_cap, 2));
            SetFunctor P = random_presheaf(c, rng, cap), Q = random_functor(c, rng, cap);
            SetFunctor E = rebase(external_product(P, Q), h.base);
            if (k == 1) E = coproduct(h, E);
            if (k == 2) E = pointwise_product(h, E);
            keep("mix" + std::to_string(k), std::move(E));
        }
    }
    return out;
}

inline std::vector<EndInstance> coend_instances(const Params& p) {
    auto out = end_instances(p);
    for (auto& inst : out) inst.F = swap_convention(inst.F);
    return out;
}

struct DiagramInstance {
    std::string name;
    SetFunctor F;
};

inline std::vector<DiagramInstance> diagrams(const Params& p, int per_category = 2) {
    std::vector<DiagramInstance> out;
    std::uint64_t index = 0;
    for (const auto& [name, c] : categories())
        for (int k = 0; k < per_category; ++k) {
            auto rng = instance_rng(p.seed, (index++ << 8) | 0x22);
            out.push_back({name + ":" + std::to_string(k), random_functor(c, rng, p.set_cap)});
        }
    return out;
}

inline std::vector<DiagramInstance> presheaves(const Params& p, int per_category = 2) {
    std::vector<DiagramInstance> out;
    std::uint64_t index = 0;
    for (const auto& [name, c] : categories())
        for (int k = 0; k < per_category; ++k) {
            auto rng = instance_rng(p.seed, (index++ << 8) | 0x33);
            out.push_back({name + ":" + std::to_string(k), random_presheaf(c, rng, p.set_cap)});
        }
    return out;
}

// Weight/diagram pairs over one base. For limits both are covariant; for
// colimits the weight is a presheaf; for nat spaces both are presheaves.
struct PairInstance {
    std::string name;
    SetFunctor weight;
    SetFunctor diagram;
};

enum class PairKind { limit, colimit, nat };

inline std::vector<PairInstance> pairs(const Params& p, PairKind kind, int per_category = 2) {
    std::vector<PairInstance> out;
    std::uint64_t index = 0;
    const std::uint64_t tag = kind == PairKind::limit ? 0x44 : kind == PairKind::colimit ? 0x55 : 0x66;
    // Weights stay small so that function sets Fun(W(j), ψ(j')) stay small.
    const Index wcap = std::min<Index>(p.set_cap, 3);
    for (const auto& [name, c] : categories())
        for (int k = 0; k < per_category; ++k) {
            auto rng = instance_rng(p.seed, (index++ << 8) | tag);
            PairInstance inst{name + ":" + std::to_string(k), {}, {}};
            switch (kind) {
                case PairKind::limit:
                    inst.weight = random_functor(c, rng, wcap);
                    inst.diagram = random_functor(c, rng, p.set_cap);
                    break;
                case PairKind::colimit:
                    inst.weight = random_presheaf(c, rng, wcap);
                    inst.diagram = random_functor(c, rng, p.set_cap);
                    break;
                case PairKind::nat:
                    inst.weight = random_presheaf(c, rng, wcap);
                    inst.diagram = rebase(random_presheaf(c, rng, p.set_cap), inst.weight.base);
                    break;
            }
            out.push_back(std::move(inst));
        }
    return out;
}

struct FubiniInstance {
    std::string name;
    CatPtr c;
    CatPtr d;
    Bifunctor F;
};

inline std::vector<FubiniInstance> fubini_instances(const Params& p) {
    std::vector<FubiniInstance> out;
    auto fs = factors();
    std::uint64_t index = 0;
    for (Index i = 0; i < fs.size(); ++i)
        for (Index j = i; j < fs.size(); ++j) {
            CatPtr cd = share(product(*fs[i].cat, *fs[j].cat));
            std::string name = fs[i].name + "*" + fs[j].name;
            SetFunctor h = hom_end(cd);
            if (h.max_size() <= p.set_cap) out.push_back({name + ":hom", fs[i].cat, fs[j].cat, end_bifunctor(cd, h)});
            auto rng = instance_rng(p.seed, (index++ << 8) | 0x77);
            Index cap = std::max<Index>(1, std::min<Index>(p.set_cap, 2));
            SetFunctor E = rebase(external_product(random_presheaf(cd, rng, cap), random_functor(cd, rng, cap)), h.base);
            if (E.max_size() <= p.set_cap)
                out.push_back({name + ":mix", fs[i].cat, fs[j].cat, end_bifunctor(cd, std::move(E))});
        }
    return out;
}

}  // namespace fincoend::corpus
