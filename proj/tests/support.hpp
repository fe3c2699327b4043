#pragma once

// Shared by the unit suites and the acceptance binary: fixture access,
// brute-force oracles that do not reuse library enumeration code, and seeded
// random generators.

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hooks/bijection.hpp"
#include "hooks/json_io.hpp"
#include "hooks/partition.hpp"
#include "hooks/poly.hpp"
#include "hooks/splice.hpp"
#include "hooks/tree.hpp"

namespace hooks::test {

using Json = json::Json;
using FatherMap = std::map<Vertex, Vertex>;

inline std::string fixture_path(const std::string& name) {
    return std::string(HOOKS_FIXTURES_DIR) + "/" + name;
}

inline std::vector<std::string> fixture_lines(const std::string& name) {
    std::ifstream in(fixture_path(name));
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) lines.push_back(line);
    return lines;
}

// The single line of a one-object fixture.
inline std::string fixture_text(const std::string& name) {
    const auto lines = fixture_lines(name);
    return lines.empty() ? std::string() : lines.front();
}

inline Json fixture(const std::string& name) { return json::read_file(fixture_path(name)); }
inline RootedTree fixture_tree(const std::string& name) { return json::tree_from_json(fixture(name)); }
inline SetPartition fixture_pi(const std::string& name) { return json::partition_from_json(fixture(name)); }

inline RootedTree tree_of(const FatherMap& father, Vertex root) { return RootedTree::from_fathers(father, root); }

inline std::vector<Vertex> sorted(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// ---- oracles -------------------------------------------------------------

// Every father map on `labels` (each vertex picks a father among the others or
// none) that forms a single increasing tree. Exponential; small inputs only.
inline std::set<FatherMap> brute_increasing_trees(const std::vector<Vertex>& labels) {
    const std::size_t n = labels.size();
    std::set<FatherMap> out;
    std::vector<std::size_t> pick(n, 0);  // pick[i] == n means "no father"
    for (;;) {
        std::size_t roots = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (pick[i] == n) ++roots;
            else if (pick[i] == i || labels[pick[i]] > labels[i]) ok = false;
        }
        // Increasing father choices cannot form cycles, so one root suffices.
        if (ok && roots == 1) {
            FatherMap f;
            for (std::size_t i = 0; i < n; ++i)
                if (pick[i] != n) f[labels[i]] = labels[pick[i]];
            out.insert(f);
        }
        std::size_t pos = 0;
        while (pos < n && ++pick[pos] > n) pick[pos++] = 0;
        if (pos == n) break;
    }
    return out;
}

using BlockSet = std::set<std::set<Vertex>>;

inline BlockSet as_block_set(const std::vector<std::vector<Vertex>>& blocks) {
    BlockSet s;
    for (const auto& b : blocks) s.insert(std::set<Vertex>(b.begin(), b.end()));
    return s;
}

// All set partitions of {1..n}, found by labelling each element with a
// block tag and collapsing duplicates.
inline std::set<BlockSet> brute_set_partitions(int n) {
    std::set<BlockSet> out;
    std::vector<int> tag(n, 0);
    for (;;) {
        std::map<int, std::set<Vertex>> groups;
        for (int i = 0; i < n; ++i) groups[tag[i]].insert(i + 1);
        BlockSet s;
        for (auto& [t, g] : groups) s.insert(g);
        out.insert(s);
        int pos = 0;
        while (pos < n && ++tag[pos] == n) tag[pos++] = 0;
        if (pos == n) break;
    }
    return out;
}

// Weak components of i -> g(i) by depth-first search over an adjacency list.
inline BlockSet dfs_components(const std::vector<Vertex>& domain, const std::map<Vertex, Vertex>& g) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& [i, gi] : g) {
        adj[i].push_back(gi);
        adj[gi].push_back(i);
    }
    std::set<Vertex> seen;
    BlockSet out;
    for (Vertex s : domain) {
        if (seen.count(s)) continue;
        std::set<Vertex> comp;
        std::vector<Vertex> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            comp.insert(x);
            for (Vertex y : adj[x])
                if (seen.insert(y).second) stack.push_back(y);
        }
        out.insert(comp);
    }
    return out;
}

// Every map S -> S with g(i) >= i whose components give `target`.
inline std::vector<std::map<Vertex, Vertex>> brute_dominating(const std::vector<Vertex>& domain,
                                                              const BlockSet& target) {
    const std::size_t n = domain.size();
    std::vector<std::map<Vertex, Vertex>> out;
    std::vector<std::size_t> pick(n, 0);
    for (;;) {
        std::map<Vertex, Vertex> g;
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (domain[pick[i]] < domain[i]) ok = false;
            g[domain[i]] = domain[pick[i]];
        }
        if (ok && dfs_components(domain, g) == target) out.push_back(g);
        std::size_t pos = 0;
        while (pos < n && ++pick[pos] == n) pick[pos++] = 0;
        if (pos == n) break;
    }
    return out;
}

// Number of bijections from {1..n} onto the vertices of t that increase away
// from the root, counted by trying every permutation.
inline long brute_increasing_labellings(const RootedTree& t) {
    const auto& vs = t.vertices();
    const std::size_t n = vs.size();
    std::vector<std::size_t> parent(n, n);
    for (std::size_t i = 0; i < n; ++i)
        if (auto f = t.father(vs[i])) parent[i] = std::lower_bound(vs.begin(), vs.end(), *f) - vs.begin();
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 1);
    long count = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if (parent[i] != n && label[parent[i]] > label[i]) ok = false;
        count += ok;
    } while (std::next_permutation(label.begin(), label.end()));
    return count;
}

// Linear extensions of the tree poset by merging the sons' extensions:
// e(v) = (h(v) - 1)! / prod h(s)! * prod e(s).
inline mpz_class merged_extensions(const RootedTree& t, Vertex v) {
    mpz_class ways = 1;
    unsigned long placed = 0;
    for (Vertex s : t.sons(v)) {
        const auto sz = static_cast<unsigned long>(hook(t, s).size());
        mpz_class choose;
        mpz_bin_uiui(choose.get_mpz_t(), placed + sz, sz);
        ways *= choose * merged_extensions(t, s);
        placed += sz;
    }
    return ways;
}

// Canonical string of an unlabelled rooted shape.
inline std::string shape_code(const RootedTree& t, Vertex v) {
    std::vector<std::string> kids;
    for (Vertex s : t.sons(v)) kids.push_back(shape_code(t, s));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    return out + ")";
}

// One representative for every unlabelled rooted tree shape on n vertices,
// built by letting vertex k choose any father in 1..k-1.
inline std::vector<RootedTree> rooted_shapes(int n) {
    std::map<std::string, RootedTree> shapes;
    std::vector<int> pick(n + 1, 1);
    for (;;) {
        FatherMap f;
        for (int k = 2; k <= n; ++k) f[k] = pick[k];
        auto t = tree_of(f, 1);
        shapes.emplace(shape_code(t, 1), t);
        int k = n;
        while (k >= 2 && ++pick[k] >= k) pick[k--] = 1;
        if (k < 2) break;
    }
    std::vector<RootedTree> out;
    for (auto& [code, t] : shapes) out.push_back(t);
    return out;
}

// Sum over spanning trees of K_r (edge subsets of size r-1 without cycles) of
// prod x_i^deg(i).
inline MultiPoly spanning_tree_degree_poly(int r) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= r; ++a)
        for (int b = a + 1; b <= r; ++b) edges.emplace_back(a, b);
    MultiPoly total;
    if (r == 1) return MultiPoly(1);
    const std::size_t m = edges.size(), need = static_cast<std::size_t>(r - 1);
    std::vector<bool> chosen(m, false);
    std::fill(chosen.begin(), chosen.begin() + need, true);
    do {
        std::vector<int> comp(r + 1);
        std::iota(comp.begin(), comp.end(), 0);
        std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
        std::vector<unsigned> deg(r + 1, 0);
        bool acyclic = true;
        for (std::size_t e = 0; e < m && acyclic; ++e) {
            if (!chosen[e]) continue;
            auto [a, b] = edges[e];
            int ra = find(a), rb = find(b);
            if (ra == rb) acyclic = false;
            comp[ra] = rb;
            ++deg[a];
            ++deg[b];
        }
        if (!acyclic) continue;
        std::vector<Monomial::Factor> f;
        for (int i = 1; i <= r; ++i) f.emplace_back(Variable::x(i), deg[i]);
        total += MultiPoly(Monomial::from_factors(f));
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return total;
}

// Numeric L(x, y) = sum over increasing trees on {1..r} of
// prod_{v >= 2} x_{f(v)} * sum_{u in hook(v)} y_{v,u}, from a father-map list.
inline mpz_class numeric_L(int r, const std::function<mpz_class(int)>& x,
                           const std::function<mpz_class(int, int)>& y) {
    std::vector<Vertex> labels(r);
    std::iota(labels.begin(), labels.end(), 1);
    mpz_class total = 0;
    for (const auto& f : brute_increasing_trees(labels)) {
        mpz_class w = 1;
        for (const auto& [v, fv] : f) {
            mpz_class s = 0;
            for (int u = v; u <= r; ++u) {
                int a = u;
                while (a != v && f.count(a)) a = f.at(a);
                if (a == v) s += y(v, u);
            }
            w *= x(fv) * s;
        }
        total += w;
    }
    return total;
}

// ---- generators ----------------------------------------------------------

using Rng = std::mt19937;

// Uniform among increasing trees: each label picks a smaller label as father.
inline RootedTree random_increasing_tree(std::vector<Vertex> labels, Rng& rng) {
    std::sort(labels.begin(), labels.end());
    FatherMap f;
    for (std::size_t k = 1; k < labels.size(); ++k)
        f[labels[k]] = labels[std::uniform_int_distribution<std::size_t>(0, k - 1)(rng)];
    return RootedTree::from_fathers(labels, f);
}

// Random partition of `labels` into blocks.
inline std::vector<std::vector<Vertex>> random_blocks(const std::vector<Vertex>& labels, Rng& rng) {
    std::vector<std::vector<Vertex>> blocks;
    for (Vertex v : labels) {
        std::size_t b = std::uniform_int_distribution<std::size_t>(0, blocks.size())(rng);
        if (b == blocks.size()) blocks.push_back({v});
        else blocks[b].push_back(v);
    }
    return blocks;
}

// A random tree on the union of `blocks` in which every block is an ancestor
// chain: labels are placed in increasing order, the first of each block
// anywhere, later ones under their block predecessor.
inline RootedTree random_pi_increasing_tree(const std::vector<std::vector<Vertex>>& blocks, Rng& rng) {
    std::map<Vertex, Vertex> pred;  // block predecessor, 0 for the first
    std::vector<Vertex> labels;
    for (auto b : blocks) {
        std::sort(b.begin(), b.end());
        for (std::size_t i = 0; i < b.size(); ++i) {
            pred[b[i]] = i == 0 ? 0 : b[i - 1];
            labels.push_back(b[i]);
        }
    }
    std::sort(labels.begin(), labels.end());
    FatherMap f;
    std::vector<Vertex> placed;
    auto below = [&](Vertex a, Vertex x) {  // x == a or a is an ancestor of x
        while (x != a && f.count(x)) x = f.at(x);
        return x == a;
    };
    for (Vertex v : labels) {
        if (!placed.empty()) {
            std::vector<Vertex> options;
            for (Vertex u : placed)
                if (pred[v] == 0 || below(pred[v], u)) options.push_back(u);
            f[v] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
        }
        placed.push_back(v);
    }
    return RootedTree::from_fathers(labels, f);
}

template <class T>
const T& pick_one(const std::vector<T>& v, Rng& rng) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

}  // namespace hooks::test
