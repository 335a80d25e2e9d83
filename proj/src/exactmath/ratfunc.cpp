#include "omalous/exactmath/ratfunc.hpp"

#include "omalous/exactmath/groebner.hpp"

namespace omalous::exact {

RationalFunction::RationalFunction(QPolynomial numerator, QPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    num_.check_ring(den_);
    if (den_.is_zero()) throw DomainError("DivisionByZero", "rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    const MonomialOrder lex = MonomialOrder::lex();
    if (num_.is_zero()) {
        den_ = QPolynomial::constant(num_.vars(), Rational(1));
        return;
    }
    if (den_.degree() > 0) {
        const QPolynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    const Rational lc = den_.leading_coefficient(lex);
    if (lc != Rational(1)) {
        const Rational inv = Rational(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw DomainError("NotConstant", str() + " is not a constant");
    if (num_.is_zero()) return Rational(0);
    return num_.terms().begin()->second;
}

RationalFunction RationalFunction::substitute(std::size_t param, const Rational& value) const {
    const QPolynomial den = exact::substitute(den_, param, value);
    if (den.is_zero()) throw DomainError("DivisionByZero", "substitution makes the denominator vanish");
    return RationalFunction(exact::substitute(num_, param, value), den);
}

std::string RationalFunction::str() const {
    if (is_polynomial()) {
        const std::string n = to_string(num_);
        return num_.size() > 1 ? "(" + n + ")" : n;
    }
    return "(" + to_string(num_) + ")/(" + to_string(den_) + ")";
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out(*this);
    out.num_ = -out.num_;
    return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = o;
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw DomainError("DivisionByZero", "division by the zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

std::string coeff_str(const RationalFunction& c) { return c.str(); }

RPolynomial lift(const QPolynomial& f, const Variables& ring_vars, const Variables& params) {
    std::vector<std::size_t> ring_slot(f.vars().size(), static_cast<std::size_t>(-1));
    std::vector<std::size_t> param_slot(f.vars().size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < f.vars().size(); ++i) {
        const std::string& name = f.vars()[i];
        if (ring_vars.contains(name)) ring_slot[i] = ring_vars.index_of(name);
        else if (params.contains(name)) param_slot[i] = params.index_of(name);
    }
    RPolynomial out(ring_vars);
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> re(ring_vars.size(), 0);
        std::vector<int> pe(params.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (ring_slot[i] != static_cast<std::size_t>(-1)) re[ring_slot[i]] = m[i];
            else if (param_slot[i] != static_cast<std::size_t>(-1)) pe[param_slot[i]] = m[i];
            else throw DomainError("UnknownVariable",
                                   "variable '" + f.vars()[i] + "' is neither a ring variable nor a parameter");
        }
        out.add_term(Monomial(std::move(re)),
                     RationalFunction(QPolynomial::term(params, Monomial(std::move(pe)), c)));
    }
    return out;
}

QPolynomial flatten(const RPolynomial& f) {
    std::vector<std::string> names = f.vars().names();
    Variables params;
    if (!f.is_zero()) params = f.terms().begin()->second.params();
    for (const auto& p : params.names()) names.push_back(p);
    const Variables all(std::move(names));
    QPolynomial out(all);
    const std::size_t nring = f.vars().size();
    for (const auto& [m, c] : f.terms()) {
        if (!c.is_polynomial()) throw DomainError("NotPolynomial", "coefficient " + c.str() + " is not a polynomial");
        const Rational scale = c.denominator().terms().begin()->second;
        for (const auto& [pm, pc] : c.numerator().terms()) {
            std::vector<int> e = m.exponents();
            e.resize(all.size(), 0);
            for (std::size_t j = 0; j < pm.size(); ++j) e[nring + j] = pm[j];
            out.add_term(Monomial(std::move(e)), pc / scale);
        }
    }
    return out;
}

RPolynomial specialize(const RPolynomial& f, const std::string& param, const Rational& value,
                       const Variables& new_params) {
    RPolynomial out(f.vars());
    for (const auto& [m, c] : f.terms()) {
        const std::size_t idx = c.params().index_of(param);
        const RationalFunction v = c.substitute(idx, value);
        out.add_term(m, RationalFunction(change_ring(v.numerator(), new_params),
                                         change_ring(v.denominator(), new_params)));
    }
    return out;
}

}  // namespace omalous::exact
