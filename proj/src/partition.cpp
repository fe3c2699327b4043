#include "hooks/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hooks/error.hpp"

namespace hooks {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::size_t position(const std::vector<Vertex>& sorted, Vertex x) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    if (it == sorted.end() || *it != x) throw UnknownVertex("unknown element " + std::to_string(x));
    return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

SetPartition::SetPartition(std::vector<std::vector<Vertex>> blocks) : blocks_(std::move(blocks)) {
    for (auto& b : blocks_) {
        if (b.empty()) throw Error("partition: empty block");
        std::sort(b.begin(), b.end());
        if (b.front() <= 0) throw Error("partition: elements must be positive");
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.back() < b.back(); });

    std::vector<std::pair<Vertex, std::size_t>> tagged;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (Vertex x : blocks_[i]) tagged.emplace_back(x, i);
    std::sort(tagged.begin(), tagged.end());
    for (std::size_t i = 1; i < tagged.size(); ++i)
        if (tagged[i].first == tagged[i - 1].first)
            throw Error("partition: element " + std::to_string(tagged[i].first) +
                        " occurs in two blocks");
    for (const auto& [x, b] : tagged) {
        ground_.push_back(x);
        owner_.push_back(b);
    }
}

bool SetPartition::contains(Vertex x) const noexcept {
    return std::binary_search(ground_.begin(), ground_.end(), x);
}

std::size_t SetPartition::block_of(Vertex x) const { return owner_[position(ground_, x)]; }

bool SetPartition::is_singleton_one() const noexcept {
    if (ground_.size() < 2) return false;
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (ground_[i] != static_cast<Vertex>(i + 1)) return false;
    return blocks_.front() == std::vector<Vertex>{1};
}

DominatingFunction::DominatingFunction(std::vector<Vertex> domain, std::vector<Vertex> values) {
    if (domain.size() != values.size()) throw Error("dominating function: size mismatch");
    std::vector<std::size_t> order(domain.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return domain[a] < domain[b]; });
    for (auto k : order) {
        domain_.push_back(domain[k]);
        values_.push_back(values[k]);
    }
    if (std::adjacent_find(domain_.begin(), domain_.end()) != domain_.end())
        throw Error("dominating function: repeated domain element");
    for (std::size_t k = 0; k < domain_.size(); ++k) {
        if (!std::binary_search(domain_.begin(), domain_.end(), values_[k]))
            throw Error("dominating function: value outside the domain");
        if (values_[k] < domain_[k])
            throw Error("dominating function: g(" + std::to_string(domain_[k]) + ") < " +
                        std::to_string(domain_[k]));
    }
}

Vertex DominatingFunction::operator()(Vertex i) const { return values_[position(domain_, i)]; }

void for_each_partition_singleton_one(int r,
                                      const std::function<void(const SetPartition&)>& visit) {
    if (r < 2) throw Error("partitions: r must be at least 2");
    const auto n = static_cast<std::size_t>(r);
    // Restricted growth string: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i)).
    std::vector<std::size_t> rgs(n, 0), prefix_max(n, 0);
    for (;;) {
        if (std::count(rgs.begin(), rgs.end(), 0) == 1) {
            std::vector<std::vector<Vertex>> blocks(prefix_max[n - 1] + 1);
            for (std::size_t i = 0; i < n; ++i) blocks[rgs[i]].push_back(static_cast<Vertex>(i + 1));
            visit(SetPartition(std::move(blocks)));
        }
        std::size_t i = n - 1;
        while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) return;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

std::vector<SetPartition> partitions_singleton_one(int r) {
    std::vector<SetPartition> out;
    for_each_partition_singleton_one(r, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

SetPartition induced_partition(const DominatingFunction& g) {
    const auto& dom = g.domain();
    UnionFind uf(dom.size());
    for (std::size_t k = 0; k < dom.size(); ++k) uf.unite(k, position(dom, g.values()[k]));
    std::vector<std::vector<Vertex>> blocks;
    std::vector<std::size_t> slot(dom.size(), dom.size());
    for (std::size_t k = 0; k < dom.size(); ++k) {
        const auto rep = uf.find(k);
        if (slot[rep] == dom.size()) {
            slot[rep] = blocks.size();
            blocks.emplace_back();
        }
        blocks[slot[rep]].push_back(dom[k]);
    }
    return SetPartition(std::move(blocks));
}

void for_each_dominating(std::span<const Vertex> domain, const SetPartition& target,
                         const std::function<void(const DominatingFunction&)>& visit) {
    std::vector<Vertex> dom(domain.begin(), domain.end());
    std::sort(dom.begin(), dom.end());
    if (dom != target.ground_set()) throw Error("dominating: target is not a partition of the domain");

    // An edge i -> g(i) merges blocks, so g(i) is confined to i's own block.
    std::vector<std::vector<Vertex>> candidates;
    for (Vertex i : dom) {
        std::vector<Vertex> c;
        for (Vertex j : target.block(target.block_of(i)))
            if (j >= i) c.push_back(j);
        candidates.push_back(std::move(c));
    }

    std::vector<std::size_t> pick(dom.size(), 0);
    for (;;) {
        std::vector<Vertex> values(dom.size());
        for (std::size_t k = 0; k < dom.size(); ++k) values[k] = candidates[k][pick[k]];
        DominatingFunction g(dom, std::move(values));
        if (induced_partition(g) == target) visit(g);

        std::size_t k = dom.size();
        for (;;) {
            if (k == 0) return;
            --k;
            if (++pick[k] < candidates[k].size()) break;
            pick[k] = 0;
        }
    }
}

std::vector<DominatingFunction> dominating_functions(std::span<const Vertex> domain,
                                                     const SetPartition& target) {
    std::vector<DominatingFunction> out;
    for_each_dominating(domain, target, [&](const DominatingFunction& g) { out.push_back(g); });
    return out;
}

void for_each_c_tuple(const SetPartition& pi, const std::function<void(const CTuple&)>& visit) {
    if (pi.size() < 2) throw Error("c tuples: partition needs at least two blocks");
    const std::size_t len = pi.size() - 2;
    CTuple c{std::vector<Vertex>(len, 1)};
    for (;;) {
        visit(c);
        std::size_t k = len;
        for (;;) {
            if (k == 0) return;
            --k;
            if (++c.entries[k] <= pi.block_max(k + 1)) break;
            c.entries[k] = 1;
        }
    }
}

std::vector<CTuple> c_tuples(const SetPartition& pi) {
    std::vector<CTuple> out;
    for_each_c_tuple(pi, [&](const CTuple& c) { out.push_back(c); });
    return out;
}

std::size_t c_tuple_count(const SetPartition& pi) {
    if (pi.size() < 2) throw Error("c tuples: partition needs at least two blocks");
    std::size_t n = 1;
    for (std::size_t i = 1; i + 1 < pi.size(); ++i) n *= static_cast<std::size_t>(pi.block_max(i));
    return n;
}

void check_c_tuple(const SetPartition& pi, const CTuple& c) {
    if (pi.size() < 2) throw Error("c tuple: partition needs at least two blocks");
    if (c.entries.size() != pi.size() - 2)
        throw Error("c tuple: expected " + std::to_string(pi.size() - 2) + " entries, got " +
                    std::to_string(c.entries.size()));
    for (std::size_t k = 0; k < c.entries.size(); ++k) {
        const Vertex bound = pi.block_max(k + 1);
        if (c.entries[k] < 1 || c.entries[k] > bound) throw CodeOutOfRange(k + 2, c.entries[k], bound);
    }
}

bool is_compatible(const SetPartition& pi, std::span<const Vertex> s) {
    std::vector<Vertex> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    for (Vertex x : sorted) {
        if (!pi.contains(x)) return false;
        for (Vertex y : pi.block(pi.block_of(x)))
            if (!std::binary_search(sorted.begin(), sorted.end(), y)) return false;
    }
    return true;
}

SetPartition restrict(const SetPartition& pi, std::span<const Vertex> s) {
    if (!is_compatible(pi, s)) throw IncompatibleSet("vertex set is not a union of blocks");
    std::vector<std::vector<Vertex>> blocks;
    std::vector<Vertex> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& b : pi.blocks())
        if (std::binary_search(sorted.begin(), sorted.end(), b.front())) blocks.push_back(b);
    return SetPartition(std::move(blocks));
}

}  // namespace hooks
