#include "hooks/cli.hpp"

#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "hooks/bijection.hpp"
#include "hooks/error.hpp"
#include "hooks/identities.hpp"
#include "hooks/json_io.hpp"
#include "hooks/splice.hpp"

namespace hooks::cli {

namespace {

using json::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& text) {
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw UsageError("bad --r value '" + text + "'");
        }
        if (used != s.size()) throw UsageError("bad --r value '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int r = to_int(text);
        return {r, r};
    }
    return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

std::vector<std::string> split_names(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& s : raw) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(item);
    }
    return out;
}

// Accepts a bare tree document or {"tree": ...}.
RootedTree load_tree(const std::string& path) {
    const Json j = json::read_file(path);
    return json::tree_from_json(j.contains("tree") ? j.at("tree") : j);
}

SetPartition load_partition(const std::string& path) {
    const Json j = json::read_file(path);
    return json::partition_from_json(j.contains("pi") ? j.at("pi") : j);
}

// "[4,5]", "4,5" or "" (the empty code).
CTuple parse_code(const std::string& text) {
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    if (text[first] == '[') {
        try {
            return json::c_tuple_from_json(Json::parse(text));
        } catch (const Json::exception&) {
            throw UsageError("bad code '" + text + "'");
        }
    }
    CTuple c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            c.entries.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad code '" + text + "'");
        }
    }
    return c;
}

void print_report_text(const IdentityReport& report, std::ostream& out) {
    out << "r = " << report.r << '\n';
    for (const auto& row : report.results) {
        out << "  " << (row.passed ? "PASS " : "FAIL ") << row.name;
        out << " (" << static_cast<long long>(row.millis) << " ms)";
        if (!row.passed) out << "  " << row.witness;
        out << '\n';
    }
}

// --- demo -----------------------------------------------------------------

RootedTree tree_of(std::initializer_list<std::pair<const Vertex, Vertex>> fathers, Vertex root) {
    return RootedTree::from_fathers(std::map<Vertex, Vertex>(fathers), root);
}

RootedTree figure1_s() {
    return tree_of({{2, 1}, {3, 1}, {5, 2}, {8, 2}, {9, 3}, {11, 9}, {15, 9}, {14, 9}, {12, 11},
                    {21, 11}, {19, 14}, {17, 14}, {20, 19}},
                   1);
}

RootedTree figure2_t() {
    return tree_of({{6, 4}, {7, 4}, {10, 6}, {13, 7}, {16, 7}, {18, 7}}, 4);
}

SetPartition figure3_pi() { return SetPartition({{1}, {3, 4, 6}, {2, 7, 8}, {5, 9}}); }

SetPartition figure5_pi() { return SetPartition({{1}, {3, 6}, {2, 7}, {9}, {4, 8, 10}, {5, 11}}); }

RootedTree figure5_t1() { return tree_of({{4, 2}, {7, 4}, {8, 4}, {9, 8}, {10, 8}}, 2); }
RootedTree figure5_t2() { return tree_of({{5, 3}, {6, 5}, {11, 5}}, 3); }

void demo(int figure, bool as_json, std::ostream& out) {
    auto emit = [&](const std::string& label, const Json& j) {
        if (as_json)
            out << json::dump(Json{{"figure", figure}, {"item", label}, {"value", j}}) << '\n';
        else
            out << label << ": " << json::dump(j) << '\n';
    };
    auto heading = [&](const std::string& text) {
        if (!as_json) out << "== Figure " << figure << ": " << text << '\n';
    };

    switch (figure) {
        case 1: {
            heading("14-decomposition of S");
            emit("S", json::to_json(figure1_s()));
            emit("decomposition", json::to_json(v_decomposition(figure1_s(), 14)));
            break;
        }
        case 2: {
            heading("splice of T at 18 with S at 14");
            emit("T", json::to_json(figure2_t()));
            emit("spl(T,18;S,14)", json::to_json(splice(figure2_t(), 18, figure1_s(), 14)));
            break;
        }
        case 3: {
            heading("psi_pi applied to c = (4,5)");
            ForwardTrace trace;
            const auto pi = figure3_pi();
            const auto t = psi_forward(pi, CTuple{{4, 5}}, &trace);
            emit("pi", json::to_json(pi));
            for (std::size_t s = 0; s < trace.stages.size(); ++s)
                emit("stage " + std::to_string(s + 1), json::to_json(trace.stages[s]));
            emit("stage " + std::to_string(pi.size()), json::to_json(t));
            break;
        }
        case 4: {
            heading("9-dependence graph of the Figure 3 tree");
            const auto pi = figure3_pi();
            const auto t = psi_forward(pi, CTuple{{4, 5}});
            emit("G_9(T)", json::to_json(dependence_graph(t, 9, pi)));
            emit("irreducible", Json(is_irreducible(t, pi)));
            break;
        }
        case 5: {
            heading("splicing irreducible trees with m1 < m2");
            const auto pi = figure5_pi();
            const auto t = splice(figure5_t1(), 10, figure5_t2(), 5);
            emit("T1", json::to_json(figure5_t1()));
            emit("T2", json::to_json(figure5_t2()));
            emit("T", json::to_json(t));
            emit("G_10(T1)", json::to_json(dependence_graph(figure5_t1(), 10, pi)));
            emit("G_11(T2)", json::to_json(dependence_graph(figure5_t2(), 11, pi)));
            emit("G_11(T)", json::to_json(dependence_graph(t, 11, pi)));
            emit("irreducible", Json(is_irreducible(t, pi)));
            break;
        }
        case 7: {
            heading("11-decomposition of the Figure 5 tree");
            const auto t = splice(figure5_t1(), 10, figure5_t2(), 5);
            emit("decomposition", json::to_json(v_decomposition(t, 11)));
            break;
        }
        case 8: {
            heading("10-decomposition and 10-dependence graph of the Figure 5 tree");
            const auto t = splice(figure5_t1(), 10, figure5_t2(), 5);
            emit("decomposition", json::to_json(v_decomposition(t, 10)));
            emit("G_10(T)", json::to_json(dependence_graph(t, 10, figure5_pi())));
            break;
        }
        default:
            throw UsageError("no demo for figure " + std::to_string(figure) +
                             " (available: 1 2 3 4 5 7 8)");
    }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of the edge-weighted hook summation formula", "hooks"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    auto* verify = app.add_subcommand("verify", "Verify identities exactly for a range of r");
    std::string range;
    std::vector<std::string> only_raw;
    verify->add_option("--r", range, "r or r_min..r_max")->required();
    verify->add_option("--only", only_raw, "Identity names (comma separated)");
    add_format(verify);

    auto* encode = app.add_subcommand("encode", "psi_pi inverse: tree -> code");
    std::string pi_path, tree_path;
    encode->add_option("--pi", pi_path, "Partition JSON file")->required();
    encode->add_option("--tree", tree_path, "Tree JSON file")->required();

    auto* decode = app.add_subcommand("decode", "psi_pi: code -> tree");
    std::string code_text, input_path;
    bool trace = false;
    decode->add_option("--pi", pi_path, "Partition JSON file");
    decode->add_option("--c", code_text, "Code, e.g. [4,5] or 4,5");
    decode->add_option("--input", input_path, "File holding {\"pi\":...,\"c\":[...]}");
    decode->add_flag("--trace", trace, "Print every stage's forest before the tree");

    auto* enumerate = app.add_subcommand("enumerate", "Stream objects as JSON lines");
    std::string kind;
    int r = 0;
    bool count_only = false;
    enumerate->add_option("kind", kind, "trees | partitions | E | C")
        ->required()
        ->check(CLI::IsMember({"trees", "partitions", "E", "C"}));
    enumerate->add_option("--r", r, "Size (trees, partitions)");
    enumerate->add_option("--pi", pi_path, "Partition JSON file (E, C)");
    enumerate->add_flag("--count", count_only, "Print only the number of objects");

    auto* demo_cmd = app.add_subcommand("demo", "Reproduce the worked figures");
    std::vector<int> figures;
    demo_cmd->add_option("--figure", figures, "Figure numbers (default: all)");
    add_format(demo_cmd);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    if (!argv_rev.empty()) argv_rev.pop_back();
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    try {
        if (*verify) {
            auto [lo, hi] = parse_range(range);
            if (lo < 2 || hi < lo || hi > max_symbolic_r())
                throw UsageError("--r must satisfy 2 <= r_min <= r_max <= " + std::to_string(max_symbolic_r()));
            std::vector<std::string> only = split_names(only_raw);
            for (const auto& name : only)
                if (canonical_identity_name(name).empty())
                    throw UsageError("unknown identity '" + name + "'");
            bool all = true;
            for (int n = lo; n <= hi; ++n) {
                const auto report = verify_all(n, only);
                all = all && report.all_passed();
                if (format == "json")
                    out << json::dump(json::to_json(report)) << '\n';
                else
                    print_report_text(report, out);
            }
            if (format == "text") out << (all ? "all identities hold" : "IDENTITY FAILURE") << '\n';
            return all ? kOk : kFailure;
        }

        if (*encode) {
            const auto pi = load_partition(pi_path);
            const auto t = load_tree(tree_path);
            const auto c = psi_inverse(pi, t);
            out << json::dump(Json{{"pi", json::to_json(pi)}, {"c", json::to_json(c)}}) << '\n';
            return kOk;
        }

        if (*decode) {
            SetPartition pi({{1}, {2}});
            CTuple c;
            if (!input_path.empty()) {
                const Json j = json::read_file(input_path);
                pi = json::partition_from_json(j.at("pi"));
                c = json::c_tuple_from_json(j.at("c"));
            } else {
                if (pi_path.empty()) throw UsageError("decode needs --pi (with --c) or --input");
                pi = load_partition(pi_path);
                c = parse_code(code_text);
            }
            ForwardTrace tr;
            const auto t = psi_forward(pi, c, trace ? &tr : nullptr);
            if (trace)
                for (std::size_t s = 0; s < tr.stages.size(); ++s)
                    out << json::dump(Json{{"stage", s + 1}, {"forest", json::to_json(tr.stages[s])}}) << '\n';
            out << json::dump(Json{{"tree", json::to_json(t)}}) << '\n';
            return kOk;
        }

        if (*enumerate) {
            const int cap = max_count_r();
            std::size_t n = 0;
            auto line = [&](const Json& j) {
                ++n;
                if (!count_only) out << json::dump(j) << '\n';
            };
            if (kind == "trees" || kind == "partitions") {
                if (r < (kind == "trees" ? 1 : 2) || r > cap)
                    throw UsageError("--r must lie in " + std::string(kind == "trees" ? "1" : "2") + ".." +
                                     std::to_string(cap));
                if (kind == "trees")
                    for_each_increasing_tree(iota_labels(r), [&](const RootedTree& t) { line(json::to_json(t)); });
                else
                    for_each_partition_singleton_one(r, [&](const SetPartition& p) { line(json::to_json(p)); });
            } else {
                if (pi_path.empty()) throw UsageError(kind + " needs --pi");
                const auto pi = load_partition(pi_path);
                if (kind == "E") {
                    // E(pi) is filtered from every increasing tree on the ground set.
                    if (pi.ground_set().size() > static_cast<std::size_t>(cap))
                        throw UsageError("partition ground set exceeds the size cap " + std::to_string(cap));
                    for_each_E(pi, [&](const RootedTree& t) { line(json::to_json(t)); });
                } else if (count_only) {
                    n = c_tuple_count(pi);
                } else {
                    for_each_c_tuple(pi, [&](const CTuple& c) { line(json::to_json(c)); });
                }
            }
            if (count_only) out << n << '\n';
            return kOk;
        }

        if (*demo_cmd) {
            if (figures.empty()) figures = {1, 2, 3, 4, 5, 7, 8};
            for (int f : figures) demo(f, format == "json", out);
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}

}  // namespace hooks::cli
