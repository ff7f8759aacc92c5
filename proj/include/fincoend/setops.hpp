#pragma once

// Limits and colimits of Set-valued functors over finite index categories.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "fincoend/fincat.hpp"

namespace fincoend {

// Compatible families: elements[k][x] is the component at object x.
struct LimitResult {
    std::vector<std::vector<Index>> elements;

    Index size() const { return elements.size(); }

    // Function table of the projection to F(x).
    std::vector<Index> projection(Index x) const {
        std::vector<Index> p;
        p.reserve(elements.size());
        for (const auto& family : elements) p.push_back(family.at(x));
        return p;
    }
};

// A partition of the disjoint union of all F(x). Elements of the union are
// addressed as (object, element) pairs; classes are ordered by their least
// member in (object, element) order, and that member is the representative.
struct ColimitResult {
    std::vector<Index> offsets;                          // per object
    std::vector<Index> class_of;                         // per union element
    std::vector<std::vector<std::pair<Index, Index>>> classes;

    Index size() const { return classes.size(); }
    Index injection(Index x, Index e) const { return class_of.at(offsets.at(x) + e); }
    std::pair<Index, Index> representative(Index k) const { return classes.at(k).front(); }
};

// Disjoint-set forest with path compression.
class UnionFind {
public:
    explicit UnionFind(Index n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Index{0}); }

    Index find(Index x) {
        Index root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) x = std::exchange(parent_[x], root);
        return root;
    }

    // The smaller index becomes the root, so roots are least members.
    void unite(Index a, Index b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

    Index size() const { return parent_.size(); }

    // Class index per element, classes numbered by least member.
    std::vector<Index> labels() {
        std::vector<Index> label(parent_.size());
        std::vector<Index> root_label(parent_.size(), static_cast<Index>(-1));
        Index next = 0;
        for (Index x = 0; x < parent_.size(); ++x) {
            Index r = find(x);
            if (root_label[r] == static_cast<Index>(-1)) root_label[r] = next++;
            label[x] = root_label[r];
        }
        return label;
    }

private:
    std::vector<Index> parent_;
};

namespace detail {

// Solve for all families (v_x ∈ F(x)) with F(u)(v_src) = v_dst for every
// morphism u. Objects are processed so that, where possible, each new
// object receives a morphism from an earlier one and its value is forced.
inline std::vector<std::vector<Index>> compatible_families(const SetFunctor& F) {
    const FinCat& c = *F.base;
    const Index n = c.object_count();
    std::vector<Index> order;
    std::vector<bool> placed(n, false);
    std::vector<Index> position(n, 0);
    // Objects reached by a morphism from a placed object are queued.
    std::vector<Index> queue;
    Index head = 0;
    auto place = [&](Index x) {
        placed[x] = true;
        position[x] = order.size();
        order.push_back(x);
        for (Index u : c.outgoing(x))
            if (!placed[c.dst(u)]) queue.push_back(c.dst(u));
    };
    Index next_unplaced = 0;
    while (order.size() < n) {
        while (head < queue.size() && placed[queue[head]]) ++head;
        if (head < queue.size()) {
            place(queue[head++]);
            continue;
        }
        while (placed[next_unplaced]) ++next_unplaced;
        place(next_unplaced);
    }

    struct Step {
        Index object;
        bool forced = false;
        Index force_from = 0;  // object
        Index force_by = 0;    // morphism
        std::vector<Index> checks;
    };
    std::vector<Step> steps(n);
    for (Index k = 0; k < n; ++k) {
        Index y = order[k];
        Step& s = steps[k];
        s.object = y;
        for (Index u : c.incoming(y)) {
            Index x = c.src(u);
            if (x != y && position[x] < k && !s.forced) {
                s.forced = true;
                s.force_from = x;
                s.force_by = u;
            }
            if (position[x] <= k && !c.is_identity(u)) s.checks.push_back(u);
        }
        for (Index u : c.outgoing(y)) {
            Index z = c.dst(u);
            if (z != y && position[z] < k) s.checks.push_back(u);
        }
    }

    std::vector<Index> value(n);
    std::vector<std::vector<Index>> result;
    auto ok = [&](const Step& s) {
        for (Index u : s.checks)
            if (F.apply(u, value[c.src(u)]) != value[c.dst(u)]) return false;
        return true;
    };
    auto step = [&](auto& self, Index k) -> void {
        if (k == n) {
            result.push_back(value);
            return;
        }
        const Step& s = steps[k];
        if (s.forced) {
            value[s.object] = F.apply(s.force_by, value[s.force_from]);
            if (ok(s)) self(self, k + 1);
            return;
        }
        for (Index v = 0; v < F.size(s.object); ++v) {
            value[s.object] = v;
            if (ok(s)) self(self, k + 1);
        }
    };
    step(step, 0);
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace detail

inline LimitResult limit(const SetFunctor& F) { return {detail::compatible_families(F)}; }

inline ColimitResult colimit(const SetFunctor& F) {
    const FinCat& c = *F.base;
    ColimitResult r;
    Index total = 0;
    for (Index x = 0; x < c.object_count(); ++x) {
        r.offsets.push_back(total);
        total += F.size(x);
    }
    UnionFind uf(total);
    for (Index u = 0; u < c.morphism_count(); ++u)
        for (Index e = 0; e < F.size(c.src(u)); ++e)
            uf.unite(r.offsets[c.src(u)] + e, r.offsets[c.dst(u)] + F.apply(u, e));
    r.class_of = uf.labels();
    Index classes = total == 0 ? 0 : *std::max_element(r.class_of.begin(), r.class_of.end()) + 1;
    r.classes.resize(classes);
    for (Index x = 0; x < c.object_count(); ++x)
        for (Index e = 0; e < F.size(x); ++e) r.classes[r.class_of[r.offsets[x] + e]].emplace_back(x, e);
    return r;
}

// A function between finite sets {0..n-1} -> {0..codomain-1}.
struct Function {
    std::vector<Index> values;
    Index codomain = 0;

    Index domain() const { return values.size(); }
    Index operator()(Index x) const { return values.at(x); }
    friend bool operator==(const Function&, const Function&) = default;
};

// {x : f(x) = g(x)}, as the sorted list of its members (the inclusion).
inline std::vector<Index> equalizer(const Function& f, const Function& g) {
    if (f.domain() != g.domain() || f.codomain != g.codomain)
        throw ShapeMismatch("equalizer: functions have different shapes");
    std::vector<Index> members;
    for (Index x = 0; x < f.domain(); ++x)
        if (f(x) == g(x)) members.push_back(x);
    return members;
}

struct Quotient {
    std::vector<Index> class_of;             // per target element
    std::vector<std::vector<Index>> classes;  // sorted members, ordered by least member

    Index size() const { return classes.size(); }
};

inline Quotient quotient_of(UnionFind& uf) {
    Quotient q;
    q.class_of = uf.labels();
    for (Index y = 0; y < q.class_of.size(); ++y) {
        if (q.class_of[y] >= q.classes.size()) q.classes.resize(q.class_of[y] + 1);
        q.classes[q.class_of[y]].push_back(y);
    }
    return q;
}

// Target modulo the equivalence relation generated by f(x) ~ g(x).
inline Quotient coequalizer(const Function& f, const Function& g) {
    if (f.domain() != g.domain() || f.codomain != g.codomain)
        throw ShapeMismatch("coequalizer: functions have different shapes");
    UnionFind uf(f.codomain);
    for (Index x = 0; x < f.domain(); ++x) uf.unite(f(x), g(x));
    return quotient_of(uf);
}

}  // namespace fincoend
