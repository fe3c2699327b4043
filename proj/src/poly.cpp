#include "hooks/poly.hpp"

#include <algorithm>
#include <sstream>

#include "hooks/error.hpp"

namespace hooks {

Variable Variable::x(int i) {
    if (i < 1) throw Error("x_" + std::to_string(i) + ": index must be positive");
    return Variable{Kind::X, i, 0};
}

Variable Variable::y(int i, int j) {
    if (i < 1 || j < i)
        throw Error("y_" + std::to_string(i) + "," + std::to_string(j) + ": need 1 <= i <= j");
    return Variable{Kind::Y, i, j};
}

std::string Variable::name() const {
    if (is_x()) return "x" + std::to_string(i);
    return "y" + std::to_string(i) + "," + std::to_string(j);
}

Monomial::Monomial(Variable v, unsigned exponent) {
    if (exponent > 0) factors_.emplace_back(v, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : factors) {
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(v, e);
    }
    return m;
}

unsigned Monomial::degree_in(Variable v) const noexcept {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

unsigned Monomial::x_degree() const noexcept {
    unsigned d = 0;
    for (const auto& [v, e] : factors_)
        if (v.is_x()) d += e;
    return d;
}

unsigned Monomial::total_degree() const noexcept {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) {
            out.factors_.push_back(*i++);
        } else if (j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    return out;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : factors_) {
        if (!s.empty()) s += '*';
        s += v.name();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

MultiPoly::MultiPoly(long c) : MultiPoly(mpz_class(c)) {}

MultiPoly::MultiPoly(const mpz_class& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly::MultiPoly(const Monomial& m, const mpz_class& c) {
    if (c != 0) terms_.emplace(m, c);
}

mpz_class MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    MultiPoly out;
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_) out.add_term(mp * mq, cp * cq);
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& q) { return *this = *this * q; }

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpz_class a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (m.is_one())
            os << a.get_str();
        else if (a == 1)
            os << m.to_string();
        else
            os << a.get_str() << '*' << m.to_string();
    }
    return os.str();
}

MultiPoly pow(const MultiPoly& base, unsigned n) {
    MultiPoly result(1L), b = base;
    while (n > 0) {
        if (n & 1u) result *= b;
        n >>= 1;
        if (n > 0) b *= b;
    }
    return result;
}

mpz_class eval_integers(const MultiPoly& p, const std::map<Variable, mpz_class>& assignment) {
    mpz_class total = 0;
    for (const auto& [m, c] : p.terms()) {
        mpz_class term = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) throw Error("eval: no value for variable " + v.name());
            mpz_class power;
            mpz_pow_ui(power.get_mpz_t(), it->second.get_mpz_t(), e);
            term *= power;
        }
        total += term;
    }
    return total;
}

mpz_class eval_all_ones(const MultiPoly& p) {
    mpz_class total = 0;
    for (const auto& term : p.terms()) total += term.second;
    return total;
}

MultiPoly substitute(const MultiPoly& p,
                     const std::function<std::optional<MultiPoly>(Variable)>& image) {
    std::map<Variable, std::optional<MultiPoly>> images;
    std::map<std::pair<Variable, unsigned>, MultiPoly> powers;
    auto factor_value = [&](Variable v, unsigned e) -> MultiPoly {
        auto it = images.find(v);
        if (it == images.end()) it = images.emplace(v, image(v)).first;
        if (!it->second) return MultiPoly(Monomial(v, e));
        auto key = std::make_pair(v, e);
        auto pit = powers.find(key);
        if (pit == powers.end()) pit = powers.emplace(key, pow(*it->second, e)).first;
        return pit->second;
    };

    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        MultiPoly term{mpz_class(c)};
        for (const auto& [v, e] : m.factors()) term *= factor_value(v, e);
        out += term;
    }
    return out;
}

MultiPoly x_leading_part(const MultiPoly& p) {
    unsigned best = 0;
    for (const auto& term : p.terms()) best = std::max(best, term.first.x_degree());
    MultiPoly out;
    for (const auto& [m, c] : p.terms())
        if (m.x_degree() == best) out.add_term(m, c);
    return out;
}

MultiPoly falling_factorial(const MultiPoly& base, long m) {
    if (m < 0) throw Error("falling factorial: negative length is not supported");
    MultiPoly out(1L);
    for (long t = 0; t < m; ++t) out *= base - MultiPoly(t);
    return out;
}

}  // namespace hooks
