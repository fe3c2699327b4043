#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hooks/tree.hpp"

namespace hooks {

// A partition of a finite set of positive integers. Blocks are kept sorted
// internally and ordered by increasing maxima, so block(0) has the smallest
// maximum. The 1-based block index i is block(i - 1).
class SetPartition {
public:
    explicit SetPartition(std::vector<std::vector<Vertex>> blocks);

    std::size_t size() const noexcept { return blocks_.size(); }
    const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }
    const std::vector<Vertex>& block(std::size_t i) const { return blocks_.at(i); }
    Vertex block_max(std::size_t i) const { return blocks_.at(i).back(); }
    const std::vector<Vertex>& ground_set() const noexcept { return ground_; }

    bool contains(Vertex x) const noexcept;
    // Index of the block holding x. Throws UnknownVertex.
    std::size_t block_of(Vertex x) const;

    // True iff the ground set is {1..r} for some r >= 2 and {1} is a block.
    bool is_singleton_one() const noexcept;

    bool operator==(const SetPartition&) const = default;

private:
    std::vector<std::vector<Vertex>> blocks_;
    std::vector<Vertex> ground_;
    std::vector<std::size_t> owner_;  // parallel to ground_
};

// g : S -> S with g(i) >= i.
class DominatingFunction {
public:
    DominatingFunction(std::vector<Vertex> domain, std::vector<Vertex> values);

    const std::vector<Vertex>& domain() const noexcept { return domain_; }
    const std::vector<Vertex>& values() const noexcept { return values_; }
    Vertex operator()(Vertex i) const;

    bool operator==(const DominatingFunction&) const = default;

private:
    std::vector<Vertex> domain_;  // ascending
    std::vector<Vertex> values_;  // values_[k] = g(domain_[k])
};

// (c_2, ..., c_{k-1}); entries[0] is c_2.
struct CTuple {
    std::vector<Vertex> entries;

    Vertex at(std::size_t i) const { return entries.at(i - 2); }
    bool operator==(const CTuple&) const = default;
};

// Partitions of {1..r} having {1} as a block, in restricted-growth-string order.
void for_each_partition_singleton_one(int r, const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> partitions_singleton_one(int r);

// Weak components of the functional digraph i -> g(i).
SetPartition induced_partition(const DominatingFunction& g);

// All dominating g on the target's ground set whose induced partition is `target`.
void for_each_dominating(std::span<const Vertex> domain, const SetPartition& target,
                         const std::function<void(const DominatingFunction&)>& visit);
std::vector<DominatingFunction> dominating_functions(std::span<const Vertex> domain,
                                                     const SetPartition& target);

// The code domain C(pi): the product of 1..mu_i for i = 2..k-1, c_2 varying slowest.
void for_each_c_tuple(const SetPartition& pi, const std::function<void(const CTuple&)>& visit);
std::vector<CTuple> c_tuples(const SetPartition& pi);
std::size_t c_tuple_count(const SetPartition& pi);

// Throws CodeOutOfRange naming the first offending index.
void check_c_tuple(const SetPartition& pi, const CTuple& c);

bool is_compatible(const SetPartition& pi, std::span<const Vertex> s);

// pi restricted to a union of its blocks. Throws IncompatibleSet otherwise.
SetPartition restrict(const SetPartition& pi, std::span<const Vertex> s);

}  // namespace hooks
