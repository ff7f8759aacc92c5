#pragma once

// Named small categories used as inputs and test corpus.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fincoend/fincat.hpp"

namespace fincoend::catalog {

inline FinCat terminal() {
    FinCat::Builder b;
    b.add_object("*");
    return std::move(b).build();
}

inline FinCat discrete(const std::vector<std::string>& objects) {
    FinCat::Builder b;
    for (const auto& x : objects) b.add_object(x);
    return std::move(b).build();
}

inline FinCat empty() { return FinCat::Builder{}.build(); }

// A poset given by its objects and a generating relation (pairs x <= y).
// Morphisms are named by `name(x, y)`; the default is "id_x" for x = y and
// "x<y" otherwise.
template <class Namer>
FinCat poset(const std::vector<std::string>& objects, const std::vector<std::pair<std::string, std::string>>& leq,
             Namer name) {
    const Index n = objects.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    std::map<std::string, Index> index;
    for (Index i = 0; i < n; ++i) {
        index[objects[i]] = i;
        rel[i][i] = true;
    }
    for (const auto& [x, y] : leq) rel.at(index.at(x)).at(index.at(y)) = true;
    for (Index k = 0; k < n; ++k)
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                if (rel[i][k] && rel[k][j]) rel[i][j] = true;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (i != j && rel[i][j] && rel[j][i]) throw Error("poset relation is not antisymmetric");

    FinCat::Builder b;
    for (Index i = 0; i < n; ++i) b.add_bare_object(objects[i]);
    std::vector<std::vector<Index>> mor(n, std::vector<Index>(n, 0));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (rel[i][j]) {
                mor[i][j] = b.add_morphism(name(objects[i], objects[j]), i, j);
                if (i == j) b.set_identity(i, mor[i][j]);
            }
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            for (Index k = 0; k < n; ++k)
                if (rel[i][j] && rel[j][k]) b.set_compose(mor[j][k], mor[i][j], mor[i][k]);
    return std::move(b).build(false);
}

inline FinCat poset(const std::vector<std::string>& objects,
                    const std::vector<std::pair<std::string, std::string>>& leq) {
    return poset(objects, leq, [](const std::string& x, const std::string& y) {
        return x == y ? "id_" + x : x + "<" + y;
    });
}

// The ordinal [n] = {0 < 1 < ... < n}; the morphism i <= j is named "(i,j)".
inline FinCat chain(Index n) {
    std::vector<std::string> objects;
    std::vector<std::pair<std::string, std::string>> leq;
    for (Index i = 0; i <= n; ++i) objects.push_back(std::to_string(i));
    for (Index i = 0; i < n; ++i) leq.emplace_back(objects[i], objects[i + 1]);
    return poset(objects, leq, [](const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; });
}

// The walking arrow 2 = {a, b, u: a -> b}.
inline FinCat walking_arrow() {
    FinCat::Builder b;
    Index a = b.add_object("a");
    Index bb = b.add_object("b");
    b.add_morphism("u", a, bb);
    return std::move(b).build();
}

// One-object category on a finite monoid. Element 0 must be the unit;
// table[i][j] is the index of elements[i] * elements[j] (apply j first).
inline FinCat monoid(const std::vector<std::string>& elements, const std::vector<std::vector<Index>>& table,
                     const std::string& object = "*") {
    FinCat::Builder b;
    Index x = b.add_bare_object(object);
    std::vector<Index> m;
    for (const auto& e : elements) m.push_back(b.add_morphism(e, x, x));
    b.set_identity(x, m.at(0));
    for (Index i = 0; i < elements.size(); ++i)
        for (Index j = 0; j < elements.size(); ++j) b.set_compose(m[i], m[j], m[table.at(i).at(j)]);
    return std::move(b).build(false);
}

inline FinCat cyclic2() { return monoid({"e", "t"}, {{0, 1}, {1, 0}}); }

// {1, e} with e * e = e.
inline FinCat idempotent() { return monoid({"1", "e"}, {{0, 1}, {1, 1}}); }

struct Edge {
    std::string id;
    std::string src;
    std::string dst;
};

// Free category on an acyclic quiver. A path is named by its edges in
// composition order joined with '.', so "g.f" is g after f.
inline FinCat free_category(const std::vector<std::string>& objects, const std::vector<Edge>& edges) {
    FinCat::Builder b;
    std::map<std::string, Index> index;
    for (const auto& x : objects) index[x] = b.add_object(x);

    struct Path {
        Index src, dst;
        std::vector<Index> edges;  // in traversal order
        Index morphism;
    };
    std::vector<Path> paths;
    std::map<std::vector<Index>, Index> path_index;
    auto name = [&](const std::vector<Index>& es) {
        std::string s;
        for (auto it = es.rbegin(); it != es.rend(); ++it) {
            if (!s.empty()) s += ".";
            s += edges[*it].id;
        }
        return s;
    };
    // Breadth-first extension of paths by one edge.
    std::vector<std::vector<Index>> frontier;
    for (Index e = 0; e < edges.size(); ++e) frontier.push_back({e});
    Index length = 0;
    while (!frontier.empty()) {
        if (++length > edges.size()) throw Error("free_category: quiver has a cycle");
        std::vector<std::vector<Index>> next;
        for (auto& es : frontier) {
            Index s = index.at(edges[es.front()].src), t = index.at(edges[es.back()].dst);
            Index f = b.add_morphism(name(es), s, t);
            paths.push_back({s, t, es, f});
            path_index[es] = f;
            for (Index e = 0; e < edges.size(); ++e)
                if (edges[e].src == edges[es.back()].dst) {
                    auto longer = es;
                    longer.push_back(e);
                    next.push_back(std::move(longer));
                }
        }
        frontier = std::move(next);
    }
    for (const auto& p : paths)
        for (const auto& q : paths)
            if (p.dst == q.src) {
                auto es = p.edges;
                es.insert(es.end(), q.edges.begin(), q.edges.end());
                b.set_compose(q.morphism, p.morphism, path_index.at(es));
            }
    return std::move(b).build();
}

}  // namespace fincoend::catalog
