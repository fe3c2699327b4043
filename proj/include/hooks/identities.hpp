#pragma once

#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hooks/bijection.hpp"
#include "hooks/partition.hpp"
#include "hooks/poly.hpp"
#include "hooks/tree.hpp"

namespace hooks {

// Edge-weighted tree weight: prod over v >= 2 of x_{f(v)} * sum_{u in hook(v)} y_{v,u}.
// Requires an increasing tree on {1..r}.
MultiPoly wt_y(const RootedTree& t);

// prod over v >= 2 of x_{f(v)} * (sum_{u in hook(v)} x_u - h(v) + 1).
MultiPoly wt_hookform(const RootedTree& t);

// prod x_i^{sons(i)}
MultiPoly kappa(const RootedTree& t);

// x_{c_2}...x_{c_{k-1}} * prod_{i in S} x_i / (x_{mu_2}...x_{mu_k}); the
// denominator always cancels, which is checked.
MultiPoly omega(const CTuple& c, const SetPartition& pi);

// prod y_{i, g(i)}
MultiPoly wt_g(const DominatingFunction& g);

// Sum of wt_g over dominating functions on the ground set inducing pi.
MultiPoly D_poly(const SetPartition& pi);

// Sum of wt_y over the increasing trees on {1..r}.
MultiPoly L_poly(int r);
// x_1 y_{r,r} prod_{i=2}^{r-1} (sum_{j<=i} x_j y_{i,i} + sum_{j>i} x_i y_{i,j}), expanded directly.
MultiPoly R_poly(int r);

// Sum over pi in Pi_1({1..r}) of D(pi) * sum_{T in E(pi)} kappa(T).
MultiPoly prop2_lhs(int r);
// Sum over pi in Pi_1({1..r}) of D(pi) * sum_{c in C(pi)} omega(c, pi).
MultiPoly prop2_rhs(int r);

// y_{v,u} -> x_u - 1 for v < u and y_{u,u} -> x_u.
MultiPoly hookform_substitution(const MultiPoly& p);

// Sum of wt_hookform over the increasing trees on {1..r}.
MultiPoly hookform_lhs(int r);
// x_1...x_r (x_1 + ... + x_r - 1)_{r-2}
MultiPoly hookform_rhs(int r);

// Sum over labelled trees on {1..r} (decoded from Pruefer sequences) of prod x_i^{deg(i)}.
MultiPoly cayley_degree_poly(int r);
// x_1...x_r (x_1 + ... + x_r)^{r-2}, expanded.
MultiPoly cayley_rhs(int r);

// n! / prod h(v); labels are ignored.
mpz_class knuth_hook_count(const RootedTree& t);

// Exact sum over the Catalan(r) plane binary trees of prod 1/h(v).
mpq_class binary_hook_sum(int r);

// One row of a verification report.
struct IdentityResult {
    std::string name;
    bool passed = false;
    std::string witness;  // nonempty on failure
    double millis = 0.0;
};

struct IdentityReport {
    int r = 0;
    std::vector<IdentityResult> results;

    bool all_passed() const;
};

// Names accepted by verify_all's filter, in execution order.
const std::vector<std::string>& identity_names();

// Maps an accepted alias to its name in identity_names(); returns "" if unknown.
std::string canonical_identity_name(const std::string& name);

// Largest r accepted by verify_all (symbolic) and by counting enumerations;
// HOOKS_MAX_R overrides both.
int max_symbolic_r();
int max_count_r();

// Runs every identity at r (or only those whose name is in `only`, when
// nonempty). Throws hooks::Error when r is outside 2..max_symbolic_r() or a
// filter name is unknown.
IdentityReport verify_all(int r, const std::vector<std::string>& only = {});

}  // namespace hooks
