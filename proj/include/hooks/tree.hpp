#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace hooks {

// Vertex labels are distinct positive integers; 0 is never a valid label.
using Vertex = int;

// A labelled rooted tree given by its father map. Sons are unordered, so two
// trees are equal exactly when their vertex sets and father maps agree.
class RootedTree {
public:
    // Builds a tree on `vertices`; every vertex except the root must appear as a
    // key of `father`. Throws hooks::Error if the map is not a single rooted tree.
    static RootedTree from_fathers(std::span<const Vertex> vertices,
                                   const std::map<Vertex, Vertex>& father);
    static RootedTree from_fathers(const std::map<Vertex, Vertex>& father, Vertex root);
    static RootedTree single(Vertex v);

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    Vertex root() const noexcept { return root_; }
    Vertex max_vertex() const noexcept { return vertices_.back(); }
    bool contains(Vertex v) const noexcept;

    // Father of v, or nullopt for the root. Throws UnknownVertex.
    std::optional<Vertex> father(Vertex v) const;
    std::vector<Vertex> sons(Vertex v) const;
    std::map<Vertex, Vertex> father_map() const;

    bool operator==(const RootedTree&) const = default;

private:
    RootedTree() = default;
    std::size_t index_of(Vertex v) const;

    std::vector<Vertex> vertices_;  // ascending
    std::vector<Vertex> fathers_;   // parallel to vertices_, 0 at the root
    Vertex root_ = 0;
};

bool is_increasing(const RootedTree& t);

// The hook of v: v together with all its descendants, ascending.
std::vector<Vertex> hook(const RootedTree& t, Vertex v);
std::size_t hook_size(const RootedTree& t, Vertex v);
std::size_t sons_count(const RootedTree& t, Vertex v);

// True iff `ancestor` lies strictly above `v` on v's path to the root.
bool is_ancestor(const RootedTree& t, Vertex ancestor, Vertex v);

// Root-to-v path, root first.
std::vector<Vertex> root_path(const RootedTree& t, Vertex v);

// Subtree induced on a down-closed vertex set containing the root.
RootedTree induced_subtree(const RootedTree& t, std::span<const Vertex> keep);

struct VDecomposition {
    std::vector<Vertex> chain;       // a_1 < ... < a_k = v
    std::vector<RootedTree> parts;   // parts[i] is rooted at chain[i]

    bool operator==(const VDecomposition&) const = default;
};

VDecomposition v_decomposition(const RootedTree& t, Vertex v);

// Reattaches consecutive part roots as a chain. Inverse of v_decomposition.
RootedTree reassemble(std::span<const RootedTree> parts);

// The increasing chain on a set of labels (each element's father is its predecessor).
RootedTree chain_tree(std::span<const Vertex> labels);

// Visits every unordered increasing tree on `labels` exactly once. The k-th
// smallest label picks its father among the smaller labels; choices are
// enumerated lexicographically with the second label varying slowest.
void for_each_increasing_tree(std::span<const Vertex> labels,
                              const std::function<void(const RootedTree&)>& visit);
std::vector<RootedTree> increasing_trees(std::span<const Vertex> labels);

// {1, ..., n}
std::vector<Vertex> iota_labels(int n);

// A collection of disjoint trees plus the marked vertex nu used by the bijection.
struct ForestComponent {
    std::size_t block;  // 0-based index of the block this component was seeded from
    RootedTree tree;

    bool operator==(const ForestComponent&) const = default;
};

struct Forest {
    std::vector<ForestComponent> components;
    Vertex nu = 1;

    bool operator==(const Forest&) const = default;
};

}  // namespace hooks
