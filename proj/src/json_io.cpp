#include "hooks/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hooks/error.hpp"

namespace hooks::json {

namespace {

int parse_index(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw Error("json: bad index '" + s + "'");
    }
    if (used != s.size()) throw Error("json: bad index '" + s + "'");
    return v;
}

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw Error(std::string("json: malformed ") + what + ": " + e.what());
    }
}

}  // namespace

Json to_json(const RootedTree& t) {
    Json father = Json::object();
    for (const auto& [v, f] : t.father_map()) father[std::to_string(v)] = f;
    return Json{{"vertices", t.vertices()}, {"father", std::move(father)}};
}

RootedTree tree_from_json(const Json& j) {
    return guarded("tree", [&] {
        const auto vertices = j.at("vertices").get<std::vector<Vertex>>();
        std::map<Vertex, Vertex> father;
        for (const auto& [k, v] : j.at("father").items()) father.emplace(parse_index(k), v.get<Vertex>());
        return RootedTree::from_fathers(vertices, father);
    });
}

Json to_json(const SetPartition& pi) { return Json{{"blocks", pi.blocks()}}; }

SetPartition partition_from_json(const Json& j) {
    return guarded("partition", [&] {
        return SetPartition(j.at("blocks").get<std::vector<std::vector<Vertex>>>());
    });
}

Json to_json(const MultiPoly& p) {
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json xs = Json::object(), ys = Json::object();
        for (const auto& [v, e] : m.factors()) {
            if (v.is_x())
                xs[std::to_string(v.i)] = e;
            else
                ys[std::to_string(v.i) + "," + std::to_string(v.j)] = e;
        }
        out.push_back(Json{{"coeff", c.get_str()}, {"x", std::move(xs)}, {"y", std::move(ys)}});
    }
    return out;
}

MultiPoly poly_from_json(const Json& j) {
    return guarded("polynomial", [&] {
        if (!j.is_array()) throw Error("json: polynomial must be an array of terms");
        MultiPoly p;
        for (const auto& term : j) {
            mpz_class c;
            if (c.set_str(term.at("coeff").get<std::string>(), 10) != 0)
                throw Error("json: bad coefficient");
            std::vector<Monomial::Factor> f;
            if (term.contains("x"))
                for (const auto& [k, e] : term.at("x").items())
                    f.emplace_back(Variable::x(parse_index(k)), e.get<unsigned>());
            if (term.contains("y"))
                for (const auto& [k, e] : term.at("y").items()) {
                    const auto comma = k.find(',');
                    if (comma == std::string::npos) throw Error("json: y key must be 'i,j'");
                    f.emplace_back(Variable::y(parse_index(k.substr(0, comma)), parse_index(k.substr(comma + 1))),
                                   e.get<unsigned>());
                }
            p.add_term(Monomial::from_factors(std::move(f)), c);
        }
        return p;
    });
}

Json to_json(const CTuple& c) { return Json(c.entries); }

CTuple c_tuple_from_json(const Json& j) {
    return guarded("code", [&] {
        if (j.is_object()) return CTuple{j.at("c").get<std::vector<Vertex>>()};
        return CTuple{j.get<std::vector<Vertex>>()};
    });
}

Json to_json(const VDecomposition& d) {
    Json parts = Json::array();
    for (const auto& p : d.parts) parts.push_back(to_json(p));
    return Json{{"chain", d.chain}, {"parts", std::move(parts)}};
}

Json to_json(const DependenceGraph& g) {
    Json nodes = Json::array(), edges = Json::array();
    for (auto n : g.nodes) nodes.push_back(n + 1);
    for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a + 1, b + 1}));
    return Json{{"anchor", g.anchor}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

DependenceGraph dependence_from_json(const Json& j) {
    return guarded("dependence graph", [&] {
        DependenceGraph g;
        g.anchor = j.at("anchor").get<Vertex>();
        for (const auto& n : j.at("nodes")) g.nodes.push_back(n.get<std::size_t>() - 1);
        for (const auto& e : j.at("edges"))
            g.edges.emplace_back(e.at(0).get<std::size_t>() - 1, e.at(1).get<std::size_t>() - 1);
        std::sort(g.nodes.begin(), g.nodes.end());
        std::sort(g.edges.begin(), g.edges.end());
        return g;
    });
}

Json to_json(const Forest& f) {
    Json comps = Json::array();
    for (const auto& c : f.components) comps.push_back(Json{{"block", c.block + 1}, {"tree", to_json(c.tree)}});
    return Json{{"nu", f.nu}, {"components", std::move(comps)}};
}

Json to_json(const IdentityReport& report) {
    Json rows = Json::array();
    for (const auto& r : report.results) {
        Json row{{"name", r.name}, {"status", r.passed ? "pass" : "fail"}, {"millis", r.millis}};
        if (!r.passed) row["witness"] = r.witness;
        rows.push_back(std::move(row));
    }
    return Json{{"r", report.r}, {"passed", report.all_passed()}, {"identities", std::move(rows)}};
}

std::string dump(const Json& j) { return j.dump(); }

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(path + ": " + e.what());
    }
}

}  // namespace hooks::json
