#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hooks/partition.hpp"
#include "hooks/tree.hpp"

namespace hooks {

// The v-dependence graph of a pi-increasing tree. Nodes are indices of blocks
// of the ambient partition (0-based); block i gets an edge to the block of the
// part root holding mu_i whenever mu_i is off the root-to-anchor chain.
struct DependenceGraph {
    Vertex anchor = 0;
    std::vector<std::size_t> nodes;                          // ascending
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // ascending, loops allowed

    // Weak components, each ascending, ordered by smallest node.
    std::vector<std::vector<std::size_t>> components() const;
    std::vector<std::size_t> component_of(std::size_t node) const;
    bool is_connected() const;

    bool operator==(const DependenceGraph&) const = default;
};

// Index of the first block (by maxima order) that is not an ancestor chain of t,
// restricted to blocks inside V(t); nullopt when every such block is a chain.
std::optional<std::size_t> first_non_chain_block(const RootedTree& t, const SetPartition& pi);

// t increasing, V(t) a union of blocks, and every block an ancestor chain.
bool is_pi_increasing(const RootedTree& t, const SetPartition& pi);

// Throws IncompatibleSet if V(t) is not a union of blocks and NotInE if t is
// not pi-increasing.
DependenceGraph dependence_graph(const RootedTree& t, Vertex v, const SetPartition& pi);

// Dependence graph at the maximum vertex is connected.
bool is_irreducible(const RootedTree& t, const SetPartition& pi);

// Forest snapshots of the forward construction: stages[0] is the initial
// forest of block chains, stages[i - 1] the forest after stage i, for
// i = 2..k-1. Components are listed as tau_1 followed by the surviving
// tau_j in increasing j.
struct ForwardTrace {
    std::vector<Forest> stages;
    // true when stage i (index i - 2) spliced into tau_1
    std::vector<bool> internal;
};

// psi_pi(c). Requires pi in Pi_1({1..r}); throws CodeOutOfRange for bad c.
RootedTree psi_forward(const SetPartition& pi, const CTuple& c, ForwardTrace* trace = nullptr);

// The unique c with psi_forward(pi, c) == t. Throws NotInE naming the block
// that fails to be a chain when t is not in E(pi).
CTuple psi_inverse(const SetPartition& pi, const RootedTree& t);

// E(pi): increasing trees on the ground set in which every block is an
// ancestor chain, filtered from the full enumeration.
void for_each_E(const SetPartition& pi, const std::function<void(const RootedTree&)>& visit);
std::vector<RootedTree> E_trees(const SetPartition& pi);

}  // namespace hooks
