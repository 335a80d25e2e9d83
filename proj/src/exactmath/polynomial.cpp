#include "omalous/exactmath/polynomial.hpp"

#include <map>

#include "omalous/exactmath/groebner.hpp"

namespace omalous::exact {

std::string coeff_str(const Rational& c) { return c.str(); }

QPolynomial divide_exact(const QPolynomial& f, const QPolynomial& g) {
    auto result = divide(f, {g}, MonomialOrder::lex());
    if (!result.remainder.is_zero()) {
        throw DomainError("NotDivisible", to_string(g) + " does not divide " + to_string(f));
    }
    return result.quotients.front();
}

namespace {

constexpr std::size_t kNoVariable = static_cast<std::size_t>(-1);

std::size_t top_variable(const QPolynomial& p) {
    std::size_t top = kNoVariable;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = m.size(); i-- > 0;) {
            if (m[i] > 0) {
                if (top == kNoVariable || i > top) top = i;
                break;
            }
        }
    }
    return top;
}

bool uses(const QPolynomial& p, std::size_t v) { return p.degree_in(v) > 0; }

/// Coefficients of p viewed as a polynomial in variable v.
std::map<int, QPolynomial> coefficients_in(const QPolynomial& p, std::size_t v) {
    std::map<int, QPolynomial> out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e = m.exponents();
        const int k = e[v];
        e[v] = 0;
        out.try_emplace(k, p.vars()).first->second.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

QPolynomial monic_lex(const QPolynomial& p) { return make_monic(p, MonomialOrder::lex()); }

QPolynomial one(const Variables& vars) { return QPolynomial::constant(vars, Rational(1)); }

QPolynomial gcd_nonzero(const QPolynomial& f, const QPolynomial& g);

QPolynomial content_in(const QPolynomial& p, std::size_t v) {
    QPolynomial acc(p.vars());
    for (const auto& [k, c] : coefficients_in(p, v)) {
        acc = acc.is_zero() ? monic_lex(c) : gcd_nonzero(acc, c);
        if (acc.degree() == 0) break;
    }
    return acc;
}

QPolynomial pseudo_remainder(const QPolynomial& a, const QPolynomial& b, std::size_t v) {
    const int db = b.degree_in(v);
    const QPolynomial lcb = coefficients_in(b, v).at(db);
    QPolynomial r = a;
    while (!r.is_zero() && r.degree_in(v) >= db) {
        const int dr = r.degree_in(v);
        const QPolynomial lcr = coefficients_in(r, v).at(dr);
        QPolynomial shifted = lcr * b;
        shifted = shifted.mul_term(Monomial::unit(r.vars().size(), v, dr - db), Rational(1));
        r = lcb * r - shifted;
    }
    return r;
}

QPolynomial primitive_part(const QPolynomial& p, std::size_t v) {
    return monic_lex(divide_exact(p, content_in(p, v)));
}

QPolynomial gcd_nonzero(const QPolynomial& f, const QPolynomial& g) {
    const std::size_t tf = top_variable(f);
    const std::size_t tg = top_variable(g);
    // A nonzero constant divides everything.
    if (tf == kNoVariable || tg == kNoVariable) return one(f.vars());
    const std::size_t v = std::max(tf, tg);
    if (!uses(f, v)) return gcd_nonzero(f, content_in(g, v));
    if (!uses(g, v)) return gcd_nonzero(content_in(f, v), g);

    const QPolynomial cf = content_in(f, v);
    const QPolynomial cg = content_in(g, v);
    const QPolynomial c = gcd_nonzero(cf, cg);
    QPolynomial a = monic_lex(divide_exact(f, cf));
    QPolynomial b = monic_lex(divide_exact(g, cg));
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (true) {
        const QPolynomial r = pseudo_remainder(a, b, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            b = one(f.vars());
            break;
        }
        a = std::move(b);
        b = primitive_part(r, v);
    }
    return monic_lex(c * b);
}

}  // namespace

QPolynomial gcd(const QPolynomial& f, const QPolynomial& g) {
    f.check_ring(g);
    if (f.is_zero()) return monic_lex(g);
    if (g.is_zero()) return monic_lex(f);
    return gcd_nonzero(f, g);
}

QPolynomial substitute(const QPolynomial& f, std::size_t var, const Rational& value) {
    QPolynomial out(f.vars());
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e = m.exponents();
        Rational scale(1);
        for (int k = 0; k < e.at(var); ++k) scale *= value;
        e[var] = 0;
        out.add_term(Monomial(std::move(e)), c * scale);
    }
    return out;
}

Rational evaluate(const QPolynomial& f, const std::vector<Rational>& point) {
    if (point.size() != f.vars().size()) {
        throw DomainError("RingMismatch", "evaluation point has the wrong number of coordinates");
    }
    Rational total(0);
    for (const auto& [m, c] : f.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (int k = 0; k < m[i]; ++k) t *= point[i];
        }
        total += t;
    }
    return total;
}

QPolynomial change_ring(const QPolynomial& f, const Variables& target) {
    std::vector<std::size_t> map(f.vars().size(), kNoVariable);
    for (std::size_t i = 0; i < f.vars().size(); ++i) {
        if (target.contains(f.vars()[i])) map[i] = target.index_of(f.vars()[i]);
    }
    QPolynomial out(target);
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e(target.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (map[i] == kNoVariable) {
                throw DomainError("UnknownVariable", "variable '" + f.vars()[i] + "' is not in the target ring");
            }
            e[map[i]] = m[i];
        }
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

}  // namespace omalous::exact
