#pragma once

#include <string>

#include "omalous/exactmath/polynomial.hpp"

namespace omalous::exact {

/// Element of the fraction field Q(params). Stored reduced: numerator and
/// denominator are coprime and the denominator is monic under lex.
class RationalFunction {
public:
    RationalFunction() = default;
    /// Zero over the given parameters.
    explicit RationalFunction(Variables params) : num_(params), den_(QPolynomial::constant(params, Rational(1))) {}
    RationalFunction(Variables params, const Rational& c)
        : num_(QPolynomial::constant(params, c)), den_(QPolynomial::constant(params, Rational(1))) {}
    explicit RationalFunction(QPolynomial numerator)
        : num_(std::move(numerator)), den_(QPolynomial::constant(num_.vars(), Rational(1))) {
        normalize();
    }
    /// Throws DomainError("DivisionByZero") on a zero denominator.
    RationalFunction(QPolynomial numerator, QPolynomial denominator);

    static RationalFunction parameter(const Variables& params, const std::string& name) {
        return RationalFunction(QPolynomial::variable(params, name, Rational(1)));
    }

    const Variables& params() const { return num_.vars(); }
    const QPolynomial& numerator() const { return num_; }
    const QPolynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// True when the value is a rational constant.
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// Value of a constant; throws DomainError("NotConstant").
    Rational constant_value() const;

    /// Weighted degree if numerator and denominator are both homogeneous.
    bool is_homogeneous(const std::vector<int>& weights) const {
        return num_.is_homogeneous(weights) && den_.is_homogeneous(weights);
    }

    RationalFunction substitute(std::size_t param, const Rational& value) const;

    std::string str() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize();

    QPolynomial num_;
    QPolynomial den_;
};

inline RationalFunction one_like(const RationalFunction& c) { return RationalFunction(c.params(), Rational(1)); }
inline RationalFunction zero_like(const RationalFunction& c) { return RationalFunction(c.params()); }

std::string coeff_str(const RationalFunction& c);

/// Polynomial in ring variables with coefficients in Q(params).
using RPolynomial = Polynomial<RationalFunction>;

/// Moves the variables of `f` named in `params` into the coefficient field.
/// Every remaining variable of f must appear in `ring_vars`.
RPolynomial lift(const QPolynomial& f, const Variables& ring_vars, const Variables& params);

/// Inverse of lift when every coefficient is a polynomial; throws
/// DomainError("NotPolynomial") otherwise.
QPolynomial flatten(const RPolynomial& f);

/// Substitutes `value` for parameter `param` in every coefficient and moves
/// the coefficients to `new_params` (which must contain every parameter
/// still in use).
RPolynomial specialize(const RPolynomial& f, const std::string& param, const Rational& value,
                       const Variables& new_params);

}  // namespace omalous::exact
