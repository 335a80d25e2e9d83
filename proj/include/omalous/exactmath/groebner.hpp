#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "omalous/error.hpp"
#include "omalous/exactmath/polynomial.hpp"

namespace omalous::exact {

template <class C>
struct DivisionResult {
    std::vector<Polynomial<C>> quotients;
    Polynomial<C> remainder;
};

/// Multivariate division: f = sum q_i g_i + r with no monomial of r
/// divisible by any leading monomial of the g_i.
template <class C>
DivisionResult<C> divide(const Polynomial<C>& f, const std::vector<Polynomial<C>>& divisors,
                         const MonomialOrder& order) {
    std::vector<Monomial> lead_mono;
    std::vector<C> lead_coeff;
    lead_mono.reserve(divisors.size());
    lead_coeff.reserve(divisors.size());
    for (const auto& g : divisors) {
        f.check_ring(g);
        if (g.is_zero()) throw DomainError("ZeroDivisor", "division by the zero polynomial");
        const auto& [m, c] = g.leading_term(order);
        lead_mono.push_back(m);
        lead_coeff.push_back(c);
    }

    DivisionResult<C> out{std::vector<Polynomial<C>>(divisors.size(), Polynomial<C>(f.vars())),
                          Polynomial<C>(f.vars())};
    Polynomial<C> p = f;
    while (!p.is_zero()) {
        const auto lt = p.leading_term(order);
        const Monomial lm = lt.first;
        const C lc = lt.second;
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!lead_mono[i].divides(lm)) continue;
            const Monomial shift = lm / lead_mono[i];
            const C factor = lc / lead_coeff[i];
            out.quotients[i].add_term(shift, factor);
            p.add_scaled(divisors[i], shift, -factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            out.remainder.add_term(lm, lc);
            p.erase(lm);
        }
    }
    return out;
}

template <class C>
Polynomial<C> normal_form(const Polynomial<C>& f, const std::vector<Polynomial<C>>& basis,
                          const MonomialOrder& order) {
    if (basis.empty()) return f;
    return divide(f, basis, order).remainder;
}

template <class C>
Polynomial<C> make_monic(const Polynomial<C>& f, const MonomialOrder& order) {
    if (f.is_zero()) return f;
    const C lc = f.leading_coefficient(order);
    return f * (one_like(lc) / lc);
}

template <class C>
Polynomial<C> s_polynomial(const Polynomial<C>& f, const Polynomial<C>& g, const MonomialOrder& order) {
    const auto& [fm, fc] = f.leading_term(order);
    const auto& [gm, gc] = g.leading_term(order);
    const Monomial l = Monomial::lcm(fm, gm);
    Polynomial<C> s = f.mul_term(l / fm, one_like(fc) / fc);
    s.add_scaled(g, l / gm, -(one_like(gc) / gc));
    return s;
}

/// Reduces a Groebner basis: drops redundant elements, inter-reduces the
/// tails, makes every element monic, and sorts by descending leading monomial.
template <class C>
std::vector<Polynomial<C>> reduce_basis(std::vector<Polynomial<C>> basis, const MonomialOrder& order) {
    std::vector<Polynomial<C>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& lm = basis[i].leading_monomial(order);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& other = basis[j].leading_monomial(order);
            // Equal leading monomials: keep the first occurrence only.
            if (other.divides(lm) && (other != lm || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(make_monic(basis[i], order));
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<C>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        minimal[i] = make_monic(normal_form(minimal[i], others, order), order);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial<C>& a, const Polynomial<C>& b) {
        return order.less(b.leading_monomial(order), a.leading_monomial(order));
    });
    return minimal;
}

/// Buchberger's algorithm with the coprime-leading-monomial criterion and
/// normal pair selection. Returns the reduced Groebner basis.
template <class C>
std::vector<Polynomial<C>> buchberger(const std::vector<Polynomial<C>>& generators, const MonomialOrder& order) {
    std::vector<Polynomial<C>> basis;
    for (const auto& g : generators) {
        if (g.is_zero()) throw DomainError("ZeroGenerator", "Groebner generators must be nonzero");
        if (!basis.empty()) basis.front().check_ring(g);
        basis.push_back(make_monic(g, order));
    }
    if (basis.empty()) return basis;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 1; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
    auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& pr) {
        return Monomial::lcm(basis[pr.first].leading_monomial(order), basis[pr.second].leading_monomial(order));
    };
    while (!pairs.empty()) {
        auto best = pairs.begin();
        Monomial best_lcm = pair_lcm(*best);
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            Monomial l = pair_lcm(*it);
            if (order.less(l, best_lcm)) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        const auto [i, j] = *best;
        pairs.erase(best);
        if (Monomial::coprime(basis[i].leading_monomial(order), basis[j].leading_monomial(order))) continue;
        Polynomial<C> r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(r, order));
        const std::size_t k = basis.size() - 1;
        for (std::size_t t = 0; t < k; ++t) pairs.emplace_back(t, k);
    }
    return reduce_basis(std::move(basis), order);
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
template <class C>
bool is_groebner_basis(const std::vector<Polynomial<C>>& basis, const MonomialOrder& order) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace omalous::exact
