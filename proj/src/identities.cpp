#include "hooks/identities.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <set>
#include <string>

#include "hooks/error.hpp"

namespace hooks {

namespace {

void require_labels_one_to_r(const RootedTree& t, const char* what) {
    if (t.vertices() != iota_labels(static_cast<int>(t.size())) || !is_increasing(t))
        throw Error(std::string(what) + ": tree must be increasing on {1..r}");
}

MultiPoly sum_of_x(int r) {
    MultiPoly s;
    for (int i = 1; i <= r; ++i) s += MultiPoly::x(i);
    return s;
}

MultiPoly product_of_x(int r) {
    std::vector<Monomial::Factor> f;
    for (int i = 1; i <= r; ++i) f.emplace_back(Variable::x(i), 1u);
    return MultiPoly(Monomial::from_factors(std::move(f)));
}

// Hook products of every plane binary tree with n vertices.
std::vector<mpz_class> binary_hook_products(int n) {
    if (n == 0) return {mpz_class(1)};
    std::vector<mpz_class> out;
    for (int left = 0; left < n; ++left) {
        const auto ls = binary_hook_products(left);
        const auto rs = binary_hook_products(n - 1 - left);
        for (const auto& a : ls)
            for (const auto& b : rs) out.push_back(a * b * n);
    }
    return out;
}

std::string diff_witness(const MultiPoly& lhs, const MultiPoly& rhs) {
    const MultiPoly d = lhs - rhs;
    if (d.is_zero()) return {};
    std::string s = "lhs - rhs has " + std::to_string(d.size()) + " terms:";
    std::size_t shown = 0;
    for (const auto& [m, c] : d.terms()) {
        if (++shown > 8) {
            s += " ...";
            break;
        }
        s += " " + c.get_str() + "*" + m.to_string() + ";";
    }
    return s;
}

int env_cap(int fallback) {
    if (const char* v = std::getenv("HOOKS_MAX_R")) {
        char* end = nullptr;
        const long n = std::strtol(v, &end, 10);
        if (end != v && *end == '\0' && n >= 2 && n <= 64) return static_cast<int>(n);
    }
    return fallback;
}

std::vector<Vertex> tree_key(const RootedTree& t) {
    std::vector<Vertex> key = t.vertices();
    for (Vertex v : t.vertices()) key.push_back(t.father(v).value_or(0));
    return key;
}

std::string check_bijection(int r) {
    std::string failure;
    for_each_partition_singleton_one(r, [&](const SetPartition& pi) {
        if (!failure.empty()) return;
        std::multiset<std::vector<Vertex>> image;
        for_each_c_tuple(pi, [&](const CTuple& c) {
            if (!failure.empty()) return;
            const RootedTree t = psi_forward(pi, c);
            if (!is_increasing(t) || t.vertices() != pi.ground_set() || first_non_chain_block(t, pi)) {
                failure = "psi_forward image outside E(pi)";
            } else if (kappa(t) != omega(c, pi)) {
                failure = "kappa != omega";
            } else if (psi_inverse(pi, t) != c) {
                failure = "psi_inverse(psi_forward(c)) != c";
            }
            image.insert(tree_key(t));
        });
        if (!failure.empty()) return;
        std::multiset<std::vector<Vertex>> expected;
        for_each_E(pi, [&](const RootedTree& t) { expected.insert(tree_key(t)); });
        if (image != expected) failure = "image of psi_forward differs from E(pi)";
    });
    return failure;
}

}  // namespace

MultiPoly wt_y(const RootedTree& t) {
    require_labels_one_to_r(t, "wt_y");
    MultiPoly out(1L);
    for (Vertex v : t.vertices()) {
        if (v == 1) continue;
        MultiPoly edge;
        for (Vertex u : hook(t, v)) edge += MultiPoly::y(v, u);
        out *= MultiPoly::x(*t.father(v)) * edge;
    }
    return out;
}

MultiPoly wt_hookform(const RootedTree& t) {
    require_labels_one_to_r(t, "wt_hookform");
    MultiPoly out(1L);
    for (Vertex v : t.vertices()) {
        if (v == 1) continue;
        const auto h = hook(t, v);
        MultiPoly factor(1L - static_cast<long>(h.size()));
        for (Vertex u : h) factor += MultiPoly::x(u);
        out *= MultiPoly::x(*t.father(v)) * factor;
    }
    return out;
}

MultiPoly kappa(const RootedTree& t) {
    std::vector<Monomial::Factor> f;
    for (Vertex v : t.vertices())
        f.emplace_back(Variable::x(v), static_cast<unsigned>(sons_count(t, v)));
    return MultiPoly(Monomial::from_factors(std::move(f)));
}

MultiPoly omega(const CTuple& c, const SetPartition& pi) {
    check_c_tuple(pi, c);
    std::map<Vertex, long> exponent;
    for (Vertex i : pi.ground_set()) exponent[i] += 1;
    for (Vertex ci : c.entries) exponent[ci] += 1;
    for (std::size_t i = 1; i < pi.size(); ++i) exponent[pi.block_max(i)] -= 1;

    std::vector<Monomial::Factor> f;
    for (const auto& [v, e] : exponent) {
        if (e < 0) throw InternalError("omega: denominator did not cancel at x_" + std::to_string(v));
        f.emplace_back(Variable::x(v), static_cast<unsigned>(e));
    }
    return MultiPoly(Monomial::from_factors(std::move(f)));
}

MultiPoly wt_g(const DominatingFunction& g) {
    std::vector<Monomial::Factor> f;
    for (std::size_t k = 0; k < g.domain().size(); ++k)
        f.emplace_back(Variable::y(g.domain()[k], g.values()[k]), 1u);
    return MultiPoly(Monomial::from_factors(std::move(f)));
}

MultiPoly D_poly(const SetPartition& pi) {
    MultiPoly out;
    for_each_dominating(pi.ground_set(), pi, [&](const DominatingFunction& g) { out += wt_g(g); });
    return out;
}

MultiPoly L_poly(int r) {
    if (r < 2) throw Error("L_poly: r must be at least 2");
    MultiPoly out;
    for_each_increasing_tree(iota_labels(r), [&](const RootedTree& t) { out += wt_y(t); });
    return out;
}

MultiPoly R_poly(int r) {
    if (r < 2) throw Error("R_poly: r must be at least 2");
    MultiPoly out = MultiPoly::x(1) * MultiPoly::y(r, r);
    for (int i = 2; i <= r - 1; ++i) {
        MultiPoly factor;
        for (int j = 1; j <= i; ++j) factor += MultiPoly::x(j) * MultiPoly::y(i, i);
        for (int j = i + 1; j <= r; ++j) factor += MultiPoly::x(i) * MultiPoly::y(i, j);
        out *= factor;
    }
    return out;
}

MultiPoly prop2_lhs(int r) {
    MultiPoly out;
    for_each_partition_singleton_one(r, [&](const SetPartition& pi) {
        MultiPoly trees;
        for_each_E(pi, [&](const RootedTree& t) { trees += kappa(t); });
        out += D_poly(pi) * trees;
    });
    return out;
}

MultiPoly prop2_rhs(int r) {
    MultiPoly out;
    for_each_partition_singleton_one(r, [&](const SetPartition& pi) {
        MultiPoly codes;
        for_each_c_tuple(pi, [&](const CTuple& c) { codes += omega(c, pi); });
        out += D_poly(pi) * codes;
    });
    return out;
}

MultiPoly hookform_substitution(const MultiPoly& p) {
    return substitute(p, [](Variable v) -> std::optional<MultiPoly> {
        if (v.is_x()) return std::nullopt;
        if (v.i == v.j) return MultiPoly::x(v.j);
        return MultiPoly::x(v.j) - MultiPoly(1L);
    });
}

MultiPoly hookform_lhs(int r) {
    if (r < 2) throw Error("hookform_lhs: r must be at least 2");
    MultiPoly out;
    for_each_increasing_tree(iota_labels(r), [&](const RootedTree& t) { out += wt_hookform(t); });
    return out;
}

MultiPoly hookform_rhs(int r) {
    if (r < 2) throw Error("hookform_rhs: r must be at least 2");
    return product_of_x(r) * falling_factorial(sum_of_x(r) - MultiPoly(1L), r - 2);
}

MultiPoly cayley_degree_poly(int r) {
    if (r < 1) throw Error("cayley_degree_poly: r must be at least 1");
    if (r == 1) return MultiPoly(1L);
    const auto n = static_cast<std::size_t>(r);
    const std::size_t len = n - 2;
    std::vector<int> seq(len, 1);
    MultiPoly out;
    for (;;) {
        // Standard Pruefer decoding into an edge list.
        std::vector<int> remaining(n + 1, 0);
        for (int a : seq) ++remaining[static_cast<std::size_t>(a)];
        std::vector<unsigned> degree(n + 1, 0);
        std::vector<bool> used(n + 1, false);
        for (int a : seq) {
            int leaf = 1;
            while (used[static_cast<std::size_t>(leaf)] || remaining[static_cast<std::size_t>(leaf)] > 0) ++leaf;
            used[static_cast<std::size_t>(leaf)] = true;
            ++degree[static_cast<std::size_t>(leaf)];
            ++degree[static_cast<std::size_t>(a)];
            --remaining[static_cast<std::size_t>(a)];
        }
        std::vector<int> last;
        for (int v = 1; v <= r; ++v)
            if (!used[static_cast<std::size_t>(v)]) last.push_back(v);
        ++degree[static_cast<std::size_t>(last.at(0))];
        ++degree[static_cast<std::size_t>(last.at(1))];

        std::vector<Monomial::Factor> f;
        for (int v = 1; v <= r; ++v) f.emplace_back(Variable::x(v), degree[static_cast<std::size_t>(v)]);
        out += MultiPoly(Monomial::from_factors(std::move(f)));

        std::size_t k = len;
        for (;;) {
            if (k == 0) return out;
            --k;
            if (++seq[k] <= r) break;
            seq[k] = 1;
        }
    }
}

MultiPoly cayley_rhs(int r) {
    if (r < 2) throw Error("cayley_rhs: r must be at least 2");
    return product_of_x(r) * pow(sum_of_x(r), static_cast<unsigned>(r - 2));
}

mpz_class knuth_hook_count(const RootedTree& t) {
    mpz_class n_fact;
    mpz_fac_ui(n_fact.get_mpz_t(), t.size());
    mpz_class hooks_product = 1;
    for (Vertex v : t.vertices()) hooks_product *= static_cast<unsigned long>(hook_size(t, v));
    if (!mpz_divisible_p(n_fact.get_mpz_t(), hooks_product.get_mpz_t()))
        throw InternalError("knuth_hook_count: hook product does not divide n!");
    return n_fact / hooks_product;
}

mpq_class binary_hook_sum(int r) {
    if (r < 1) throw Error("binary_hook_sum: r must be at least 1");
    mpq_class total = 0;
    for (const auto& product : binary_hook_products(r)) total += mpq_class(1, product);
    total.canonicalize();
    return total;
}

bool IdentityReport::all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const auto& x) { return x.passed; });
}

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names{
        "main_identity",         "dominating_trees",         "dominating_codes",      "hook_substitution",
        "hook_falling_factorial", "degree_product", "degree_leading", "tree_count",
        "binary_hook_sum",       "bijection"};
    return names;
}

std::string canonical_identity_name(const std::string& name) {
    const std::string canonical = name == "theorem1" ? "main_identity" : name;
    const auto& names = identity_names();
    return std::find(names.begin(), names.end(), canonical) == names.end() ? std::string{} : canonical;
}

int max_symbolic_r() { return env_cap(7); }
int max_count_r() { return env_cap(8); }

IdentityReport verify_all(int r, const std::vector<std::string>& only) {
    if (r < 2 || r > max_symbolic_r())
        throw Error("verify: r must lie in 2.." + std::to_string(max_symbolic_r()) + " (got " +
                    std::to_string(r) + ")");
    std::vector<std::string> selected;
    for (const auto& name : only) {
        const std::string canonical = canonical_identity_name(name);
        if (canonical.empty())
            throw Error("verify: unknown identity '" + name + "'");
        selected.push_back(canonical);
    }

    IdentityReport report;
    report.r = r;
    auto wanted = [&](const std::string& name) {
        return selected.empty() || std::find(selected.begin(), selected.end(), name) != selected.end();
    };

    // Shared intermediate values are computed at most once.
    std::optional<MultiPoly> L, R, hook_lhs, cayley;
    auto get = [](std::optional<MultiPoly>& slot, auto make) -> const MultiPoly& {
        if (!slot) slot = make();
        return *slot;
    };
    auto L_ = [&]() -> const MultiPoly& { return get(L, [&] { return L_poly(r); }); };
    auto R_ = [&]() -> const MultiPoly& { return get(R, [&] { return R_poly(r); }); };
    auto H_ = [&]() -> const MultiPoly& { return get(hook_lhs, [&] { return hookform_lhs(r); }); };
    auto C_ = [&]() -> const MultiPoly& { return get(cayley, [&] { return cayley_degree_poly(r); }); };

    auto run = [&](const std::string& name, auto check) {
        if (!wanted(name)) return;
        const auto start = std::chrono::steady_clock::now();
        IdentityResult res;
        res.name = name;
        try {
            res.witness = check();
        } catch (const std::exception& e) {
            res.witness = std::string("exception: ") + e.what();
        }
        res.passed = res.witness.empty();
        res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report.results.push_back(std::move(res));
    };

    const MultiPoly y11 = MultiPoly::y(1, 1);
    run("main_identity", [&] { return diff_witness(L_(), R_()); });
    run("dominating_trees", [&] { return diff_witness(prop2_lhs(r), y11 * L_()); });
    run("dominating_codes", [&] { return diff_witness(prop2_rhs(r), y11 * R_()); });
    run("hook_substitution", [&] { return diff_witness(hookform_substitution(L_()), H_()); });
    run("hook_falling_factorial", [&] {
        const MultiPoly rhs = hookform_rhs(r);
        auto w = diff_witness(H_(), rhs);
        if (w.empty()) w = diff_witness(hookform_substitution(R_()), rhs);
        return w;
    });
    run("degree_product", [&] { return diff_witness(C_(), cayley_rhs(r)); });
    run("degree_leading", [&] { return diff_witness(x_leading_part(H_()), C_()); });
    run("tree_count", [&] {
        mpz_class expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(r - 2));
        const mpz_class got = eval_all_ones(R_());
        return got == expected ? std::string{}
                               : "R(1,...,1) = " + got.get_str() + ", expected " + expected.get_str();
    });
    run("binary_hook_sum", [&] {
        const mpq_class s = binary_hook_sum(r);
        return s == 1 ? std::string{} : "sum = " + s.get_str();
    });
    run("bijection", [&] { return check_bijection(r); });
    return report;
}

}  // namespace hooks
