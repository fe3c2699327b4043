#include "hooks/splice.hpp"

#include <algorithm>
#include <string>

#include "hooks/error.hpp"

namespace hooks {

RootedTree splice(const RootedTree& t1, Vertex v1, const RootedTree& t2, Vertex v2) {
    if (!t1.contains(v1)) throw UnknownVertex("splice: " + std::to_string(v1) + " is not in the first tree");
    if (!t2.contains(v2)) throw UnknownVertex("splice: " + std::to_string(v2) + " is not in the second tree");
    if (v1 <= v2)
        throw Error("splice: splicing vertices must satisfy v1 > v2 (got " + std::to_string(v1) +
                    ", " + std::to_string(v2) + ")");
    if (!is_increasing(t1) || !is_increasing(t2)) throw Error("splice: trees must be increasing");
    for (Vertex v : t1.vertices())
        if (t2.contains(v)) throw Error("splice: vertex " + std::to_string(v) + " is in both trees");

    auto d1 = v_decomposition(t1, v1);
    auto d2 = v_decomposition(t2, v2);
    std::vector<RootedTree> parts;
    parts.reserve(d1.parts.size() + d2.parts.size());
    std::merge(d1.parts.begin(), d1.parts.end(), d2.parts.begin(), d2.parts.end(),
               std::back_inserter(parts),
               [](const RootedTree& a, const RootedTree& b) { return a.root() < b.root(); });
    return reassemble(parts);
}

Unsplice unsplice(const RootedTree& t, Vertex v1, std::span<const Vertex> v1_set) {
    std::vector<Vertex> first(v1_set.begin(), v1_set.end());
    std::sort(first.begin(), first.end());
    auto in_first = [&](Vertex x) { return std::binary_search(first.begin(), first.end(), x); };

    if (!in_first(v1)) throw InvalidSplit("unsplice: v1 must belong to the first vertex set");
    for (Vertex x : first)
        if (!t.contains(x)) throw InvalidSplit("unsplice: " + std::to_string(x) + " is not a vertex");
    if (first.size() >= t.size()) throw InvalidSplit("unsplice: the second tree would be empty");

    const auto dec = v_decomposition(t, v1);
    std::vector<RootedTree> parts1, parts2;
    for (const auto& part : dec.parts) {
        const auto inside = std::count_if(part.vertices().begin(), part.vertices().end(), in_first);
        if (inside == 0) {
            parts2.push_back(part);
        } else if (static_cast<std::size_t>(inside) == part.size()) {
            parts1.push_back(part);
        } else {
            throw InvalidSplit("unsplice: vertex set cuts through the part rooted at " +
                               std::to_string(part.root()));
        }
    }
    return Unsplice{reassemble(parts1), reassemble(parts2), parts2.back().root()};
}

}  // namespace hooks
