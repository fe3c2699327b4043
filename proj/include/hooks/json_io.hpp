#pragma once

#include <string>

#include <json.hpp>

#include "hooks/bijection.hpp"
#include "hooks/identities.hpp"
#include "hooks/partition.hpp"
#include "hooks/poly.hpp"
#include "hooks/tree.hpp"

// Wire formats. Output is deterministic: object keys keep insertion order and
// numeric keys are written in ascending numeric order.
//
//   tree          {"vertices":[...],"father":{"v":f,...}}      root omitted from "father"
//   partition     {"blocks":[[...],...]}                       sorted on load
//   polynomial    [{"coeff":"<decimal>","x":{"1":2},"y":{"2,3":1}},...]
//   code          [c_2,...,c_{k-1}]
//   decomposition {"chain":[...],"parts":[tree,...]}
//   dependence    {"anchor":v,"nodes":[i,...],"edges":[[i,j],...]}   1-based block indices
//   forest        {"nu":v,"components":[{"block":i,"tree":tree},...]} 1-based block indices
namespace hooks::json {

using Json = nlohmann::ordered_json;

Json to_json(const RootedTree& t);
Json to_json(const SetPartition& pi);
Json to_json(const MultiPoly& p);
Json to_json(const CTuple& c);
Json to_json(const VDecomposition& d);
Json to_json(const DependenceGraph& g);
Json to_json(const Forest& f);
Json to_json(const IdentityReport& report);

// Throw hooks::Error on malformed input.
RootedTree tree_from_json(const Json& j);
SetPartition partition_from_json(const Json& j);
MultiPoly poly_from_json(const Json& j);
CTuple c_tuple_from_json(const Json& j);
DependenceGraph dependence_from_json(const Json& j);

// Compact single-line serialization.
std::string dump(const Json& j);

// Parses a file; throws hooks::Error naming the path on failure.
Json read_file(const std::string& path);

}  // namespace hooks::json
