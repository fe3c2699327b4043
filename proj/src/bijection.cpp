#include "hooks/bijection.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "hooks/error.hpp"
#include "hooks/splice.hpp"

namespace hooks {

namespace {

std::string block_text(const std::vector<Vertex>& block) {
    std::string s = "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(block[i]);
    }
    return s + "}";
}

std::vector<Vertex> union_of_blocks(const SetPartition& pi, const std::vector<std::size_t>& blocks) {
    std::vector<Vertex> out;
    for (auto b : blocks) out.insert(out.end(), pi.block(b).begin(), pi.block(b).end());
    std::sort(out.begin(), out.end());
    return out;
}

void require_singleton_one(const SetPartition& pi) {
    if (!pi.is_singleton_one())
        throw Error("partition must cover {1..r}, r >= 2, with {1} as a block");
}

// Splits `t` at `v1` along the dependence-graph component of `block`.
Unsplice split_along_component(const RootedTree& t, Vertex v1, std::size_t block,
                               const SetPartition& pi) {
    const auto g = dependence_graph(t, v1, pi);
    return unsplice(t, v1, union_of_blocks(pi, g.component_of(block)));
}

Forest snapshot(const std::vector<std::optional<RootedTree>>& tau, Vertex nu) {
    Forest f;
    f.nu = nu;
    for (std::size_t j = 0; j < tau.size(); ++j)
        if (tau[j]) f.components.push_back({j, *tau[j]});
    return f;
}

}  // namespace

std::vector<std::vector<std::size_t>> DependenceGraph::components() const {
    std::map<std::size_t, std::size_t> parent;
    for (auto n : nodes) parent[n] = n;
    auto find = [&](std::size_t x) {
        while (parent.at(x) != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : edges) parent[find(a)] = find(b);

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (auto n : nodes) groups[find(n)].push_back(n);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [rep, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> DependenceGraph::component_of(std::size_t node) const {
    for (auto& comp : components())
        if (std::binary_search(comp.begin(), comp.end(), node)) return comp;
    throw Error("dependence graph: block " + std::to_string(node + 1) + " is not a node");
}

bool DependenceGraph::is_connected() const { return components().size() <= 1; }

std::optional<std::size_t> first_non_chain_block(const RootedTree& t, const SetPartition& pi) {
    for (std::size_t b = 0; b < pi.size(); ++b) {
        std::vector<Vertex> present;
        for (Vertex x : pi.block(b))
            if (t.contains(x)) present.push_back(x);
        for (std::size_t i = 1; i < present.size(); ++i)
            if (!is_ancestor(t, present[i - 1], present[i])) return b;
    }
    return std::nullopt;
}

bool is_pi_increasing(const RootedTree& t, const SetPartition& pi) {
    return is_increasing(t) && is_compatible(pi, t.vertices()) && !first_non_chain_block(t, pi);
}

DependenceGraph dependence_graph(const RootedTree& t, Vertex v, const SetPartition& pi) {
    if (!is_compatible(pi, t.vertices()))
        throw IncompatibleSet("dependence graph: vertex set is not a union of blocks");
    if (!is_increasing(t)) throw NotInE("dependence graph: tree is not increasing");
    if (auto b = first_non_chain_block(t, pi))
        throw NotInE("dependence graph: block " + block_text(pi.block(*b)) + " is not a subchain");

    const auto dec = v_decomposition(t, v);
    std::map<Vertex, Vertex> part_root;
    for (const auto& part : dec.parts)
        for (Vertex u : part.vertices()) part_root.emplace(u, part.root());

    DependenceGraph g;
    g.anchor = v;
    for (Vertex u : t.vertices()) g.nodes.push_back(pi.block_of(u));
    std::sort(g.nodes.begin(), g.nodes.end());
    g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());

    for (auto b : g.nodes) {
        const Vertex mu = pi.block_max(b);
        if (std::find(dec.chain.begin(), dec.chain.end(), mu) != dec.chain.end()) continue;
        g.edges.emplace_back(b, pi.block_of(part_root.at(mu)));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

bool is_irreducible(const RootedTree& t, const SetPartition& pi) {
    return dependence_graph(t, t.max_vertex(), pi).is_connected();
}

RootedTree psi_forward(const SetPartition& pi, const CTuple& c, ForwardTrace* trace) {
    require_singleton_one(pi);
    check_c_tuple(pi, c);
    const std::size_t k = pi.size();

    std::vector<std::optional<RootedTree>> tau;
    for (const auto& block : pi.blocks()) tau.emplace_back(chain_tree(block));
    Vertex nu = 1;
    if (trace) {
        *trace = {};
        trace->stages.push_back(snapshot(tau, nu));
    }

    for (std::size_t i = 1; i + 1 < k; ++i) {
        const Vertex ci = c.entries[i - 1];
        const Vertex mu = pi.block_max(i);
        const bool internal = tau[0]->contains(ci) || tau[i]->contains(ci);
        if (internal) {
            tau[0] = splice(*tau[i], mu, *tau[0], nu);
            nu = ci;
        } else {
            std::size_t j = i + 1;
            while (j < k && !(tau[j] && tau[j]->contains(ci))) ++j;
            if (j == k) throw InternalError("psi_forward: c_i lies in no component");
            tau[j] = splice(*tau[i], mu, *tau[j], ci);
        }
        tau[i].reset();
        if (trace) {
            trace->stages.push_back(snapshot(tau, nu));
            trace->internal.push_back(internal);
        }
    }
    return splice(*tau[k - 1], pi.block_max(k - 1), *tau[0], nu);
}

CTuple psi_inverse(const SetPartition& pi, const RootedTree& t) {
    require_singleton_one(pi);
    if (t.vertices() != pi.ground_set()) throw NotInE("tree and partition have different vertex sets");
    if (!is_increasing(t)) throw NotInE("tree is not increasing");
    if (auto b = first_non_chain_block(t, pi))
        throw NotInE("block " + block_text(pi.block(*b)) + " is not a subchain");

    const std::size_t k = pi.size();
    std::vector<std::optional<RootedTree>> tau(k);
    CTuple c{std::vector<Vertex>(k - 2, 0)};

    // Final stage: the component of the top block in G_M(t) is tau_k.
    auto last = split_along_component(t, pi.block_max(k - 1), k - 1, pi);
    tau[k - 1] = last.t1;
    tau[0] = last.t2;
    Vertex nu = last.v2;

    for (std::size_t i = k - 2; i >= 1; --i) {
        const Vertex mu = pi.block_max(i);
        if (tau[0]->contains(mu)) {
            // Reverse an internal splice; mu is the maximum of tau_1.
            if (tau[0]->max_vertex() != mu) throw InternalError("psi_inverse: mu_i is not the maximum of tau_1");
            auto u = split_along_component(*tau[0], mu, i, pi);
            tau[i] = u.t1;
            tau[0] = u.t2;
            c.entries[i - 1] = nu;
            nu = u.v2;
        } else {
            // Reverse an external splice; mu is the second maximum of tau_j.
            std::optional<std::size_t> owner;
            for (std::size_t j = i + 1; j < k; ++j) {
                if (tau[j] && tau[j]->contains(mu)) {
                    if (owner) throw InternalError("psi_inverse: mu_i lies in two components");
                    owner = j;
                }
            }
            if (!owner) throw InternalError("psi_inverse: mu_i lies in no component");
            auto u = split_along_component(*tau[*owner], mu, i, pi);
            if (!u.t2.contains(pi.block_max(*owner)))
                throw InternalError("psi_inverse: maximum left the remaining component");
            tau[i] = u.t1;
            tau[*owner] = u.t2;
            c.entries[i - 1] = u.v2;
        }
        if (!tau[0]->contains(1) || !tau[0]->contains(nu))
            throw InternalError("psi_inverse: tau_1 lost vertex 1 or nu");
    }

    for (std::size_t j = 0; j < k; ++j)
        if (!tau[j] || *tau[j] != chain_tree(pi.block(j)))
            throw InternalError("psi_inverse: residual component is not the chain of block " +
                                std::to_string(j + 1));
    if (nu != 1) throw InternalError("psi_inverse: nu did not return to 1");
    try {
        check_c_tuple(pi, c);
    } catch (const CodeOutOfRange& e) {
        throw InternalError(std::string("psi_inverse: recovered code out of range: ") + e.what());
    }
    return c;
}

void for_each_E(const SetPartition& pi, const std::function<void(const RootedTree&)>& visit) {
    for_each_increasing_tree(pi.ground_set(), [&](const RootedTree& t) {
        if (!first_non_chain_block(t, pi)) visit(t);
    });
}

std::vector<RootedTree> E_trees(const SetPartition& pi) {
    std::vector<RootedTree> out;
    for_each_E(pi, [&](const RootedTree& t) { out.push_back(t); });
    return out;
}

}  // namespace hooks
