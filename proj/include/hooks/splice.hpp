#pragma once

#include <span>

#include "hooks/tree.hpp"

namespace hooks {

// spl(t1, v1; t2, v2): the increasing tree whose v1-decomposition is the
// parts of the v1-decomposition of t1 and the v2-decomposition of t2, merged
// in increasing order of their roots. Requires increasing trees with
// disjoint vertex sets, v1 in t1, v2 in t2 and v1 > v2.
RootedTree splice(const RootedTree& t1, Vertex v1, const RootedTree& t2, Vertex v2);

struct Unsplice {
    RootedTree t1;
    RootedTree t2;
    Vertex v2;

    bool operator==(const Unsplice&) const = default;
};

// The unique (t1, t2, v2) with splice(t1, v1, t2, v2) == t and V(t1) == v1_set.
// Throws InvalidSplit unless v1_set contains v1, misses some vertex of t, and
// is a union of whole parts of the v1-decomposition of t.
Unsplice unsplice(const RootedTree& t, Vertex v1, std::span<const Vertex> v1_set);

}  // namespace hooks
