#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "omalous/error.hpp"
#include "omalous/exactmath/monomial.hpp"
#include "omalous/exactmath/rational.hpp"

namespace omalous::exact {

/// Degree reported for the zero polynomial.
inline constexpr int kDegreeMinusInfinity = std::numeric_limits<int>::min();

/// Sparse multivariate polynomial over a field of coefficients `C`
/// (Rational or RationalFunction). Zero coefficients are never stored.
template <class C>
class Polynomial {
public:
    using Coeff = C;
    using TermMap = std::map<Monomial, C>;

    Polynomial() = default;
    explicit Polynomial(Variables vars) : vars_(std::move(vars)) {}
    Polynomial(Variables vars, const TermMap& terms) : vars_(std::move(vars)) {
        for (const auto& [m, c] : terms) add_term(m, c);
    }

    static Polynomial constant(Variables vars, const C& c) {
        Polynomial p(std::move(vars));
        p.add_term(Monomial(p.vars_.size()), c);
        return p;
    }
    static Polynomial term(Variables vars, const Monomial& m, const C& c) {
        Polynomial p(std::move(vars));
        p.add_term(m, c);
        return p;
    }
    static Polynomial variable(Variables vars, const std::string& name, const C& one) {
        const std::size_t i = vars.index_of(name);
        const std::size_t n = vars.size();
        return term(std::move(vars), Monomial::unit(n, i), one);
    }

    const Variables& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    int degree() const {
        if (terms_.empty()) return kDegreeMinusInfinity;
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }
    int degree_in(std::size_t var) const {
        if (terms_.empty()) return kDegreeMinusInfinity;
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
        return d;
    }

    /// Pointer to the coefficient of `m`, or nullptr when absent.
    const C* find(const Monomial& m) const {
        const auto it = terms_.find(m);
        return it == terms_.end() ? nullptr : &it->second;
    }

    const std::pair<const Monomial, C>& leading_term(const MonomialOrder& order) const {
        if (terms_.empty()) throw DomainError("ZeroPolynomial", "leading term of the zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(best); it != terms_.end(); ++it) {
            if (order.less(best->first, it->first)) best = it;
        }
        return *best;
    }
    const Monomial& leading_monomial(const MonomialOrder& order) const { return leading_term(order).first; }
    const C& leading_coefficient(const MonomialOrder& order) const { return leading_term(order).second; }

    /// True when every term has the same weighted degree. Zero is homogeneous.
    bool is_homogeneous(const std::vector<int>& weights) const {
        if (terms_.empty()) return true;
        const int d = terms_.begin()->first.weighted_degree(weights);
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const auto& t) { return t.first.weighted_degree(weights) == d; });
    }

    void add_term(const Monomial& m, const C& c) {
        if (m.size() != vars_.size()) {
            throw DomainError("RingMismatch", "monomial length does not match the variable list");
        }
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void erase(const Monomial& m) { terms_.erase(m); }

    /// this += c * m * other
    void add_scaled(const Polynomial& other, const Monomial& m, const C& c) {
        check_ring(other);
        if (c.is_zero()) return;
        for (const auto& [om, oc] : other.terms_) add_term(om * m, oc * c);
    }

    Polynomial mul_term(const Monomial& m, const C& c) const {
        Polynomial out(vars_);
        if (c.is_zero()) return out;
        for (const auto& [tm, tc] : terms_) out.terms_.emplace(tm * m, tc * c);
        return out;
    }

    Polynomial operator-() const {
        Polynomial out(vars_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }
    Polynomial& operator+=(const Polynomial& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial out(a.vars_);
        for (const auto& [bm, bc] : b.terms_) {
            for (const auto& [am, ac] : a.terms_) out.add_term(am * bm, ac * bc);
        }
        return out;
    }
    friend Polynomial operator*(const Polynomial& a, const C& c) { return a.mul_term(Monomial(a.vars_.size()), c); }
    friend Polynomial operator*(const C& c, const Polynomial& a) { return a * c; }

    Polynomial pow(unsigned e) const {
        if (terms_.empty() && e > 0) return *this;
        Polynomial result(vars_);
        if (terms_.empty()) throw DomainError("ZeroPolynomial", "0^0 is undefined");
        result.add_term(Monomial(vars_.size()), one_like(terms_.begin()->second));
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e > 0) base *= base;
        }
        return result;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    void check_ring(const Polynomial& o) const {
        if (!(vars_ == o.vars_)) throw DomainError("RingMismatch", "polynomials live in different rings");
    }

private:
    Variables vars_;
    TermMap terms_;
};

std::string coeff_str(const Rational& c);

namespace detail {

inline std::string monomial_str(const Variables& vars, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

}  // namespace detail

/// Human-readable form, terms in descending lex order, e.g. "a^2 + 2*a*b - p".
template <class C>
std::string to_string(const Polynomial<C>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = coeff_str(c);
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        if (!first) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        first = false;
        const std::string ms = detail::monomial_str(p.vars(), m);
        if (ms.empty()) out += cs;
        else if (cs == "1") out += ms;
        else out += cs + "*" + ms;
    }
    return out;
}

using QPolynomial = Polynomial<Rational>;

/// Exact quotient of `f` by `g` over Q; throws DomainError("NotDivisible").
QPolynomial divide_exact(const QPolynomial& f, const QPolynomial& g);
/// Monic greatest common divisor over Q (recursive primitive remainder
/// sequences); gcd(0, 0) = 0.
QPolynomial gcd(const QPolynomial& f, const QPolynomial& g);
/// Substitutes `value` for variable `var`, keeping the variable list.
QPolynomial substitute(const QPolynomial& f, std::size_t var, const Rational& value);
/// Evaluates at a full point (one value per variable).
Rational evaluate(const QPolynomial& f, const std::vector<Rational>& point);
/// Re-expresses `f` over another variable list containing all of f's used variables.
QPolynomial change_ring(const QPolynomial& f, const Variables& target);

}  // namespace omalous::exact
