#include <cstdlib>

#include <doctest.h>

#include "hooks/error.hpp"
#include "hooks/identities.hpp"
#include "support.hpp"

using namespace hooks;
using namespace hooks::test;

namespace {

MultiPoly x(int i) { return MultiPoly::x(i); }
MultiPoly y(int i, int j) { return MultiPoly::y(i, j); }

MultiPoly x_product(int r) {
    MultiPoly p(1);
    for (int i = 1; i <= r; ++i) p *= x(i);
    return p;
}

MultiPoly x_sum(int r) {
    MultiPoly p;
    for (int i = 1; i <= r; ++i) p += x(i);
    return p;
}

}  // namespace

TEST_CASE("tree weights") {
    const auto chain = tree_of({{2, 1}, {3, 2}}, 1);
    const auto star = tree_of({{2, 1}, {3, 1}}, 1);
    CHECK(wt_y(chain) == x(1) * x(2) * (y(2, 2) + y(2, 3)) * y(3, 3));
    CHECK(wt_y(star) == x(1) * x(1) * y(2, 2) * y(3, 3));
    CHECK(wt_y(tree_of({{2, 1}}, 1)) == x(1) * y(2, 2));
    CHECK_THROWS_AS(wt_y(tree_of({{2, 3}, {3, 1}}, 1)), Error);
    CHECK_THROWS_AS(wt_y(tree_of({{3, 2}}, 2)), Error);

    CHECK(wt_hookform(tree_of({{2, 1}}, 1)) == x(1) * x(2));
    CHECK(wt_hookform(chain) == x(1) * (x(2) + x(3) - 1) * x(2) * x(3));
}

TEST_CASE("kappa, omega and D") {
    const auto pi = fixture_pi("fig3_pi.json");
    const auto t = fixture_tree("fig3_T.json");
    const auto expected = x(1) * x(2) * x(3) * x(4) * x(4) * x(5) * x(5) * x(7);
    CHECK(kappa(t) == expected);
    CHECK(omega(CTuple{{4, 5}}, pi) == expected);
    CHECK_THROWS_AS(omega(CTuple{{7, 5}}, pi), CodeOutOfRange);

    CHECK(D_poly(SetPartition({{1}, {2}})) == y(1, 1) * y(2, 2));
    CHECK(wt_g(DominatingFunction({1, 2, 3}, {1, 3, 3})) == y(1, 1) * y(2, 3) * y(3, 3));
}

TEST_CASE("L and R at small r") {
    CHECK(L_poly(2) == x(1) * y(2, 2));
    CHECK(R_poly(2) == x(1) * y(2, 2));
    const auto hand = x(1) * x(2) * y(2, 2) * y(3, 3) + x(1) * x(2) * y(2, 3) * y(3, 3) +
                      x(1) * x(1) * y(2, 2) * y(3, 3);
    CHECK(L_poly(3) == hand);
    CHECK(R_poly(3) == hand);
    CHECK_THROWS_AS(L_poly(1), Error);
    CHECK_THROWS_AS(R_poly(1), Error);
}

TEST_CASE("evaluations of L and R") {
    CHECK(eval_all_ones(R_poly(4)) == 16);
    CHECK(eval_all_ones(L_poly(4)) == 16);

    // x_1 = 2, x_2 = 3 and every y equal to 1.
    std::map<Variable, mpz_class> a{{Variable::x(1), 2}, {Variable::x(2), 3}, {Variable::x(3), 5}};
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) a[Variable::y(i, j)] = 1;
    const auto oracle = numeric_L(
        3, [&](int i) { return a.at(Variable::x(i)); }, [&](int i, int j) { return a.at(Variable::y(i, j)); });
    CHECK(oracle == 16);
    CHECK(eval_integers(L_poly(3), a) == oracle);

    // A generic assignment at r = 5 against the same father-map oracle.
    std::map<Variable, mpz_class> b;
    for (int i = 1; i <= 5; ++i) {
        b[Variable::x(i)] = 2 * i + 1;
        for (int j = i; j <= 5; ++j) b[Variable::y(i, j)] = 3 * i - j + 7;
    }
    const auto oracle5 = numeric_L(
        5, [&](int i) { return b.at(Variable::x(i)); }, [&](int i, int j) { return b.at(Variable::y(i, j)); });
    CHECK(eval_integers(L_poly(5), b) == oracle5);
    CHECK(eval_integers(R_poly(5), b) == oracle5);

    for (int r = 2; r <= 8; ++r) {
        mpz_class expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(r - 2));
        CHECK(eval_all_ones(R_poly(r)) == expected);
    }
}

TEST_CASE("main identity for r = 2..6") {
    for (int r = 2; r <= 6; ++r) CHECK(L_poly(r) == R_poly(r));
}

TEST_CASE("dominating decompositions") {
    CHECK(prop2_lhs(2) == y(1, 1) * x(1) * y(2, 2));
    CHECK(prop2_rhs(2) == y(1, 1) * x(1) * y(2, 2));
    CHECK(prop2_lhs(3) == y(1, 1) * L_poly(3));
    CHECK(prop2_rhs(4) == y(1, 1) * R_poly(4));
    for (int r = 2; r <= 5; ++r) {
        CHECK(prop2_lhs(r) == y(1, 1) * L_poly(r));
        CHECK(prop2_rhs(r) == y(1, 1) * R_poly(r));
    }
}

TEST_CASE("hook-length specialization") {
    CHECK(hookform_rhs(2) == x(1) * x(2));
    for (int r = 2; r <= 6; ++r) {
        CHECK(hookform_substitution(L_poly(r)) == hookform_lhs(r));
        CHECK(hookform_substitution(R_poly(r)) == hookform_rhs(r));
        CHECK(hookform_lhs(r) == x_product(r) * falling_factorial(x_sum(r) - 1, r - 2));
    }
    const auto lead3 = x(1) * x(1) * x(2) * x(3) + x(1) * x(2) * x(2) * x(3) + x(1) * x(2) * x(3) * x(3);
    CHECK(x_leading_part(hookform_lhs(3)) == lead3);
}

TEST_CASE("degree polynomial of labelled trees") {
    CHECK(cayley_degree_poly(1) == MultiPoly(1));  // one vertex of degree 0
    CHECK(cayley_degree_poly(2) == x(1) * x(2));
    CHECK(cayley_degree_poly(3) == x(1) * x(2) * x(3) * (x(1) + x(2) + x(3)));
    CHECK(eval_all_ones(cayley_degree_poly(4)) == 16);
    for (int r = 2; r <= 6; ++r) {
        CHECK(cayley_degree_poly(r) == spanning_tree_degree_poly(r));
        CHECK(cayley_degree_poly(r) == cayley_rhs(r));
        CHECK(x_leading_part(hookform_lhs(r)) == cayley_degree_poly(r));
    }
    for (int r = 2; r <= 8; ++r) {
        mpz_class expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(r - 2));
        CHECK(eval_all_ones(cayley_degree_poly(r)) == expected);
    }
}

TEST_CASE("hook length count") {
    CHECK(knuth_hook_count(tree_of({{2, 1}, {3, 2}}, 1)) == 1);
    CHECK(knuth_hook_count(tree_of({{2, 1}, {3, 1}}, 1)) == 2);
    CHECK(knuth_hook_count(RootedTree::single(4)) == 1);

    std::size_t shapes = 0;
    const std::vector<std::size_t> expected_shapes{1, 1, 2, 4, 9, 20, 48, 115};
    for (int n = 1; n <= 8; ++n) {
        const auto all = rooted_shapes(n);
        CHECK(all.size() == expected_shapes[n - 1]);
        for (const auto& t : all) {
            CHECK(knuth_hook_count(t) == brute_increasing_labellings(t));
            CHECK(knuth_hook_count(t) == merged_extensions(t, t.root()));
            ++shapes;
        }
    }
    CHECK(shapes == 200);

    // Large shapes from the figures, checked by merging sons' extensions, and
    // the ten smallest labels of S by brute force.
    const auto s = fixture_tree("fig1_S.json");
    const auto big = fixture_tree("fig2_splice.json");
    CHECK(knuth_hook_count(s) == merged_extensions(s, s.root()));
    CHECK(knuth_hook_count(big) == merged_extensions(big, big.root()));
    mpz_class fact21;
    mpz_fac_ui(fact21.get_mpz_t(), 21);
    mpz_class hooks_product = 1;
    for (Vertex v : big.vertices()) hooks_product *= static_cast<unsigned long>(hook_size(big, v));
    CHECK(knuth_hook_count(big) == fact21 / hooks_product);
    const std::vector<Vertex> ten(s.vertices().begin(), s.vertices().begin() + 10);
    const auto truncated = induced_subtree(s, ten);
    CHECK(truncated.size() == 10);
    CHECK(knuth_hook_count(truncated) == brute_increasing_labellings(truncated));
}

TEST_CASE("binary hook sum") {
    CHECK(binary_hook_sum(1) == 1);
    CHECK(binary_hook_sum(2) == 1);
    for (int r = 1; r <= 8; ++r) CHECK(binary_hook_sum(r) == 1);
    CHECK_THROWS_AS(binary_hook_sum(0), Error);
}

TEST_CASE("verify_all") {
    for (int r : {2, 5, 6}) {
        const auto report = verify_all(r);
        CHECK(report.all_passed());
        CHECK(report.results.size() == identity_names().size());
        for (const auto& row : report.results) {
            CHECK(row.passed);
            CHECK(row.witness.empty());
        }
    }
    const auto only = verify_all(4, {"theorem1"});
    CHECK(verify_all(4, {"main_identity"}).results.size() == 1);
    CHECK(canonical_identity_name("theorem1") == "main_identity");
    CHECK(canonical_identity_name("tree_count") == "tree_count");
    CHECK(canonical_identity_name("nonsense").empty());
    REQUIRE(only.results.size() == 1);
    CHECK(only.results[0].name == "main_identity");
    CHECK_THROWS_AS(verify_all(1), Error);
    CHECK_THROWS_AS(verify_all(max_symbolic_r() + 1), Error);
    CHECK_THROWS_AS(verify_all(3, {"nonsense"}), Error);

    const auto j = json::to_json(verify_all(3, {"main_identity", "tree_count"}));
    CHECK(j.at("passed").get<bool>());
    CHECK(j.at("identities").size() == 2);
}

TEST_CASE("size caps follow HOOKS_MAX_R") {
    CHECK(max_symbolic_r() == 7);
    CHECK(max_count_r() == 8);
    setenv("HOOKS_MAX_R", "9", 1);
    CHECK(max_symbolic_r() == 9);
    CHECK(max_count_r() == 9);
    setenv("HOOKS_MAX_R", "junk", 1);
    CHECK(max_symbolic_r() == 7);
    unsetenv("HOOKS_MAX_R");
}
