#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hooks {

// An indeterminate x_i (i >= 1) or y_{i,j} (1 <= i <= j). Ordering puts every
// x before every y; x by index, y lexicographically by (i, j).
struct Variable {
    enum class Kind : std::uint8_t { X = 0, Y = 1 };

    Kind kind = Kind::X;
    int i = 1;
    int j = 0;  // unused for X

    static Variable x(int i);
    static Variable y(int i, int j);

    bool is_x() const noexcept { return kind == Kind::X; }
    std::string name() const;

    auto operator<=>(const Variable&) const = default;
};

// Product of variables with positive exponents, sorted by variable.
class Monomial {
public:
    using Factor = std::pair<Variable, unsigned>;

    Monomial() = default;
    explicit Monomial(Variable v, unsigned exponent = 1);
    // Accepts factors in any order; merges repeats and drops zero exponents.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    unsigned degree_in(Variable v) const noexcept;
    unsigned x_degree() const noexcept;
    unsigned total_degree() const noexcept;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

    std::string to_string() const;

private:
    std::vector<Factor> factors_;
};

// Sparse polynomial in the x and y variables with exact integer coefficients.
// No zero coefficient is ever stored, so structural equality is ring equality.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, mpz_class>;

    MultiPoly() = default;
    MultiPoly(long c);  // NOLINT(google-explicit-constructor)
    explicit MultiPoly(const mpz_class& c);
    MultiPoly(const Monomial& m, const mpz_class& c = 1);

    static MultiPoly x(int i) { return MultiPoly(Monomial(Variable::x(i))); }
    static MultiPoly y(int i, int j) { return MultiPoly(Monomial(Variable::y(i, j))); }
    static MultiPoly var(Variable v) { return MultiPoly(Monomial(v)); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    // Coefficient of m (zero when absent).
    mpz_class coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const mpz_class& c);

    MultiPoly& operator+=(const MultiPoly& q);
    MultiPoly& operator-=(const MultiPoly& q);
    MultiPoly& operator*=(const MultiPoly& q);
    friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
    friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
    MultiPoly operator-() const;

    bool operator==(const MultiPoly&) const = default;

    std::string to_string() const;

private:
    TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned n);

// Exact value under an integer assignment. Throws hooks::Error when a variable
// occurring in p has no value.
mpz_class eval_integers(const MultiPoly& p, const std::map<Variable, mpz_class>& assignment);

// Every variable of p replaced by 1.
mpz_class eval_all_ones(const MultiPoly& p);

// Ring homomorphism fixing the variables for which `image` returns nullopt.
MultiPoly substitute(const MultiPoly& p,
                     const std::function<std::optional<MultiPoly>(Variable)>& image);

// Terms of maximal total degree in the x variables.
MultiPoly x_leading_part(const MultiPoly& p);

// base (base - 1) ... (base - m + 1); 1 when m = 0. Negative m is rejected.
MultiPoly falling_factorial(const MultiPoly& base, long m);

}  // namespace hooks
