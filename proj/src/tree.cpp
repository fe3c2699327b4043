#include "hooks/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hooks/error.hpp"

namespace hooks {

RootedTree RootedTree::from_fathers(std::span<const Vertex> vertices,
                                    const std::map<Vertex, Vertex>& father) {
    if (vertices.empty()) throw Error("tree: empty vertex set");
    RootedTree t;
    t.vertices_.assign(vertices.begin(), vertices.end());
    std::sort(t.vertices_.begin(), t.vertices_.end());
    if (std::adjacent_find(t.vertices_.begin(), t.vertices_.end()) != t.vertices_.end())
        throw Error("tree: duplicate vertex label");
    if (t.vertices_.front() <= 0) throw Error("tree: vertex labels must be positive");

    t.fathers_.assign(t.vertices_.size(), 0);
    for (const auto& [v, f] : father) {
        if (!t.contains(v)) throw Error("tree: father given for unknown vertex " + std::to_string(v));
        if (!t.contains(f))
            throw Error("tree: father " + std::to_string(f) + " of " + std::to_string(v) +
                        " is not a vertex");
        if (f == v) throw Error("tree: vertex " + std::to_string(v) + " is its own father");
        t.fathers_[t.index_of(v)] = f;
    }

    const auto roots = std::count(t.fathers_.begin(), t.fathers_.end(), 0);
    if (roots != 1) throw Error("tree: expected exactly one root, found " + std::to_string(roots));
    t.root_ = t.vertices_[static_cast<std::size_t>(
        std::find(t.fathers_.begin(), t.fathers_.end(), 0) - t.fathers_.begin())];

    // Every father path must reach the root within n steps.
    for (std::size_t i = 0; i < t.vertices_.size(); ++i) {
        Vertex cur = t.vertices_[i];
        std::size_t steps = 0;
        while (cur != t.root_) {
            cur = t.fathers_[t.index_of(cur)];
            if (++steps > t.vertices_.size()) throw Error("tree: father map contains a cycle");
        }
    }
    return t;
}

RootedTree RootedTree::from_fathers(const std::map<Vertex, Vertex>& father, Vertex root) {
    std::vector<Vertex> vs{root};
    for (const auto& [v, f] : father) vs.push_back(v);
    return from_fathers(vs, father);
}

RootedTree RootedTree::single(Vertex v) {
    const Vertex vs[] = {v};
    return from_fathers(vs, {});
}

bool RootedTree::contains(Vertex v) const noexcept {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t RootedTree::index_of(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) throw UnknownVertex("unknown vertex " + std::to_string(v));
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<Vertex> RootedTree::father(Vertex v) const {
    const Vertex f = fathers_[index_of(v)];
    if (f == 0) return std::nullopt;
    return f;
}

std::vector<Vertex> RootedTree::sons(Vertex v) const {
    index_of(v);
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (fathers_[i] == v) out.push_back(vertices_[i]);
    return out;
}

std::map<Vertex, Vertex> RootedTree::father_map() const {
    std::map<Vertex, Vertex> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (fathers_[i] != 0) out.emplace(vertices_[i], fathers_[i]);
    return out;
}

bool is_increasing(const RootedTree& t) {
    for (Vertex v : t.vertices()) {
        auto f = t.father(v);
        if (f && *f > v) return false;
    }
    return true;
}

bool is_ancestor(const RootedTree& t, Vertex ancestor, Vertex v) {
    if (!t.contains(ancestor)) throw UnknownVertex("unknown vertex " + std::to_string(ancestor));
    for (auto f = t.father(v); f; f = t.father(*f))
        if (*f == ancestor) return true;
    return false;
}

std::vector<Vertex> hook(const RootedTree& t, Vertex v) {
    if (!t.contains(v)) throw UnknownVertex("unknown vertex " + std::to_string(v));
    std::vector<Vertex> out;
    for (Vertex u : t.vertices())
        if (u == v || is_ancestor(t, v, u)) out.push_back(u);
    return out;
}

std::size_t hook_size(const RootedTree& t, Vertex v) { return hook(t, v).size(); }

std::size_t sons_count(const RootedTree& t, Vertex v) { return t.sons(v).size(); }

std::vector<Vertex> root_path(const RootedTree& t, Vertex v) {
    std::vector<Vertex> path{v};
    for (auto f = t.father(v); f; f = t.father(*f)) path.push_back(*f);
    std::reverse(path.begin(), path.end());
    return path;
}

RootedTree induced_subtree(const RootedTree& t, std::span<const Vertex> keep) {
    std::map<Vertex, Vertex> fathers;
    for (Vertex v : keep) {
        auto f = t.father(v);
        if (f) fathers.emplace(v, *f);
    }
    return RootedTree::from_fathers(keep, fathers);
}

VDecomposition v_decomposition(const RootedTree& t, Vertex v) {
    VDecomposition dec;
    dec.chain = root_path(t, v);

    // Each vertex belongs to the part of its nearest chain ancestor-or-self.
    std::map<Vertex, std::size_t> chain_pos;
    for (std::size_t i = 0; i < dec.chain.size(); ++i) chain_pos.emplace(dec.chain[i], i);

    std::vector<std::vector<Vertex>> members(dec.chain.size());
    std::vector<std::map<Vertex, Vertex>> fathers(dec.chain.size());
    for (Vertex u : t.vertices()) {
        Vertex cur = u;
        while (!chain_pos.contains(cur)) cur = *t.father(cur);
        const std::size_t part = chain_pos.at(cur);
        members[part].push_back(u);
        if (u != cur) fathers[part].emplace(u, *t.father(u));
    }
    for (std::size_t i = 0; i < dec.chain.size(); ++i)
        dec.parts.push_back(RootedTree::from_fathers(members[i], fathers[i]));
    return dec;
}

RootedTree reassemble(std::span<const RootedTree> parts) {
    if (parts.empty()) throw Error("reassemble: no parts");
    std::vector<Vertex> vertices;
    std::map<Vertex, Vertex> fathers;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& p = parts[i];
        vertices.insert(vertices.end(), p.vertices().begin(), p.vertices().end());
        fathers.merge(p.father_map());
        if (i > 0) fathers.emplace(p.root(), parts[i - 1].root());
    }
    return RootedTree::from_fathers(vertices, fathers);
}

RootedTree chain_tree(std::span<const Vertex> labels) {
    if (labels.empty()) throw Error("chain_tree: empty label set");
    std::vector<Vertex> sorted(labels.begin(), labels.end());
    std::sort(sorted.begin(), sorted.end());
    std::map<Vertex, Vertex> fathers;
    for (std::size_t i = 1; i < sorted.size(); ++i) fathers.emplace(sorted[i], sorted[i - 1]);
    return RootedTree::from_fathers(sorted, fathers);
}

void for_each_increasing_tree(std::span<const Vertex> labels,
                              const std::function<void(const RootedTree&)>& visit) {
    if (labels.empty()) throw Error("enumerate_increasing_trees: empty label set");
    std::vector<Vertex> sorted(labels.begin(), labels.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();

    // choice[k] in [0, k): index of the father of sorted[k]; odometer with
    // the last position varying fastest.
    std::vector<std::size_t> choice(n, 0);
    for (;;) {
        std::map<Vertex, Vertex> fathers;
        for (std::size_t k = 1; k < n; ++k) fathers.emplace(sorted[k], sorted[choice[k]]);
        visit(RootedTree::from_fathers(sorted, fathers));

        std::size_t k = n;
        while (k > 1) {
            --k;
            if (++choice[k] < k) break;
            choice[k] = 0;
            if (k == 1) return;
        }
        if (n <= 1 || k == 0) return;
    }
}

std::vector<RootedTree> increasing_trees(std::span<const Vertex> labels) {
    std::vector<RootedTree> out;
    for_each_increasing_tree(labels, [&](const RootedTree& t) { out.push_back(t); });
    return out;
}

std::vector<Vertex> iota_labels(int n) {
    std::vector<Vertex> out(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(out.begin(), out.end(), 1);
    return out;
}

}  // namespace hooks
