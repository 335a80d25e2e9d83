#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace omalous::exact {

/// Ordered list of variable names shared by every polynomial of one ring.
/// Copies are cheap; equality compares the names.
class Variables {
public:
    Variables() : names_(std::make_shared<const std::vector<std::string>>()) {}
    Variables(std::initializer_list<std::string> names)
        : names_(std::make_shared<const std::vector<std::string>>(names)) {}
    explicit Variables(std::vector<std::string> names)
        : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

    std::size_t size() const { return names_->size(); }
    const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }

    /// Index of `name`; throws DomainError("UnknownVariable").
    std::size_t index_of(const std::string& name) const;
    bool contains(const std::string& name) const;

    friend bool operator==(const Variables& a, const Variables& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

/// Exponent vector, one slot per ring variable. The built-in comparison is
/// plain lexicographic on exponents and is used for storage only; term
/// orders are supplied separately through MonomialOrder.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps);
    Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

    std::size_t size() const { return exps_.size(); }
    int operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }
    int degree() const;
    int weighted_degree(const std::vector<int>& weights) const;
    bool is_one() const;

    bool divides(const Monomial& other) const;
    /// Exact quotient; requires divisor.divides(*this).
    Monomial operator/(const Monomial& divisor) const;
    Monomial operator*(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    static Monomial unit(std::size_t nvars, std::size_t var, int power = 1);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<int> exps_;
};

/// Term order: lex, degrevlex, or a two-block elimination order that
/// compares the front variables by degrevlex and breaks ties with
/// degrevlex on the remaining ones.
class MonomialOrder {
public:
    enum class Kind { Lex, DegRevLex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, {}); }
    /// `front` lists the indices of the front-block variables.
    static MonomialOrder block(std::vector<std::size_t> front);

    Kind kind() const { return kind_; }
    const std::vector<std::size_t>& front() const { return front_; }

    /// Strict "a < b" under this order.
    bool less(const Monomial& a, const Monomial& b) const;
    /// Three-way comparison, <0, 0, >0.
    int compare(const Monomial& a, const Monomial& b) const;

    std::string name() const;

private:
    MonomialOrder(Kind k, std::vector<std::size_t> front) : kind_(k), front_(std::move(front)) {}

    Kind kind_;
    std::vector<std::size_t> front_;
};

}  // namespace omalous::exact
