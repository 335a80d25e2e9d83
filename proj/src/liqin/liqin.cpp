#include "omalous/liqin/liqin.hpp"

#include <algorithm>

#include "omalous/checked.hpp"
#include "omalous/error.hpp"
#include "omalous/exactmath/binomial.hpp"

namespace omalous::liqin {

using checked::add;
using checked::mul;
using checked::sub;

std::string to_string(Sign s) { return s == Sign::PlusK ? "plus" : "minus"; }

Sign sign_from_string(const std::string& s) {
    if (s == "plus" || s == "plus_K" || s == "+K") return Sign::PlusK;
    if (s == "minus" || s == "minus_K" || s == "-K") return Sign::MinusK;
    throw DomainError("InvalidSign", "sign must be 'plus' or 'minus', got '" + s + "'");
}

std::string to_string(C1Description d) {
    switch (d) {
        case C1Description::PlusK:
            return "plus_K";
        case C1Description::MinusK:
            return "minus_K";
        case C1Description::Custom:
            return "custom";
    }
    return "custom";
}

C1Description c1_description_from_string(const std::string& s) {
    if (s == "plus_K") return C1Description::PlusK;
    if (s == "minus_K") return C1Description::MinusK;
    if (s == "custom") return C1Description::Custom;
    throw DomainError("ParseError", "unknown c1 description '" + s + "'");
}

namespace {

void require_rank(std::int64_t rank) {
    if (rank < 2) throw DomainError("InvalidRank", "rank must be >= 2, got " + std::to_string(rank));
}

std::int64_t half_rank_product(std::int64_t rank) {
    // r(r-1) is even, so the halving is exact.
    return mul(rank, rank - 1) / 2;
}

}  // namespace

BundleNumerics tangent_numerics(const SurfaceData& s) {
    return BundleNumerics{2, -s.K_dot_L, s.K_squared, s.c2_top, C1Description::MinusK};
}

Rational slope(std::int64_t c1_dot_L, std::int64_t rank) {
    if (rank < 1) throw DomainError("InvalidRank", "slope needs rank >= 1");
    return Rational(c1_dot_L, rank);
}

OmalityReport check_omality(const BundleNumerics& e, const SurfaceData& s, bool allow_dual) {
    OmalityReport r;
    r.expected_c1_dot_L = -s.K_dot_L;
    r.expected_c1_squared = s.K_squared;
    r.expected_c2 = s.c2_top;
    r.c1_dot_L_matches = e.c1_dot_L == r.expected_c1_dot_L;
    if (!r.c1_dot_L_matches && allow_dual && e.c1_dot_L == s.K_dot_L) {
        r.c1_dot_L_matches = true;
        r.matched_dual = true;
    }
    r.c1_squared_matches = e.c1_squared == r.expected_c1_squared;
    r.c2_matches = e.c2 == r.expected_c2;
    r.omalous = r.c1_dot_L_matches && r.c1_squared_matches && r.c2_matches;
    return r;
}

std::int64_t c1_dot_L(const SurfaceData& s, Sign sign) { return sign == Sign::PlusK ? s.K_dot_L : -s.K_dot_L; }

surface::DivisorClass cb_system_class(std::int64_t rank, Sign sign) {
    // rL - c1 + K: c1 = +K gives rL, c1 = -K gives rL + 2K.
    return surface::DivisorClass{rank, sign == Sign::PlusK ? 0 : 2};
}

std::int64_t AlphaTerms::reconstruct(std::int64_t rank) const {
    return add(add(mul(rank - 1, add(add(1, max_used), excess_term)), c1L_term), L2_term);
}

AlphaResult alpha(const SurfaceData& s, std::int64_t rank, Sign sign) {
    require_rank(rank);
    const auto h0 = s.h0(cb_system_class(rank, sign));
    if (!h0) {
        throw DomainError("MissingH0Evaluator", "surface has no h0 value for rL - c1 + K with r = " +
                                                    std::to_string(rank) + ", sign " + to_string(sign));
    }
    AlphaResult out;
    out.rank = rank;
    out.sign = sign;
    out.terms.pg_term = s.p_g;
    out.terms.h0_term = *h0;
    out.terms.max_used = std::max(s.p_g, *h0);
    out.terms.excess_term = mul(mul(4, mul(rank - 1, rank - 1)), s.L_squared);
    out.terms.c1L_term = mul(rank - 1, c1_dot_L(s, sign));
    out.terms.L2_term = -mul(half_rank_product(rank), s.L_squared);
    out.alpha = out.terms.reconstruct(rank);
    return out;
}

GoodnessReport is_good(const SurfaceData& s, std::int64_t rank) {
    GoodnessReport r;
    r.rank = rank;
    r.c2_target = s.c2_top;
    for (Sign sign : {Sign::PlusK, Sign::MinusK}) {
        SignedMargin& m = sign == Sign::PlusK ? r.plus : r.minus;
        m.bound = alpha(s, rank, sign);
        m.margin = sub(s.c2_top, m.bound.alpha);
        m.passes = m.margin >= 0;
    }
    r.sign_used = r.minus.margin > r.plus.margin ? Sign::MinusK : Sign::PlusK;
    const SignedMargin& best = r.sign_used == Sign::PlusK ? r.plus : r.minus;
    r.alpha = best.bound.alpha;
    r.margin = best.margin;
    r.verdict = r.margin >= 0;
    return r;
}

QPolynomial alpha_polynomial(std::int64_t rank) {
    require_rank(rank);
    const exact::Variables vars{"d"};
    const QPolynomial d = QPolynomial::variable(vars, "d", Rational(1));
    auto constant = [&](const Rational& c) { return QPolynomial::constant(vars, c); };
    const QPolynomial one = constant(Rational(1));
    // p_g = C(d-1, 3) as a polynomial in d.
    const QPolynomial p_g = (d - one) * (d - constant(Rational(2))) * (d - constant(Rational(3))) *
                            Rational(1, 6);
    const Rational r1(rank - 1);
    const QPolynomial bracket = one + p_g + d * Rational(4 * (rank - 1) * (rank - 1));
    const QPolynomial k_dot_l = d * (d - constant(Rational(4)));
    return bracket * r1 + k_dot_l * r1 - d * Rational(half_rank_product(rank));
}

QPolynomial margin_polynomial(std::int64_t rank) {
    const QPolynomial a = alpha_polynomial(rank);
    const exact::Variables& vars = a.vars();
    const QPolynomial d = QPolynomial::variable(vars, "d", Rational(1));
    const QPolynomial c2 = d.pow(3) - d.pow(2) * Rational(4) + d * Rational(6);
    return c2 - a;
}

std::int64_t stable_regime_start(std::int64_t rank) {
    require_rank(rank);
    const std::int64_t h0_const = exact::binomial(rank + 3, 3);
    std::int64_t d = rank + 1;
    while (exact::binomial(d - 1, 3) < h0_const) ++d;
    return d;
}

std::int64_t cauchy_bound(const QPolynomial& p) {
    if (p.is_zero() || p.vars().size() != 1) {
        throw DomainError("InvalidArgument", "Cauchy bound needs a nonzero univariate polynomial");
    }
    const int n = p.degree();
    const Rational lead = *p.find(exact::Monomial({n}));
    Rational worst(0);
    for (const auto& [m, c] : p.terms()) {
        if (m[0] == n) continue;
        worst = std::max(worst, (c / lead).abs());
    }
    const mpz_class bound = worst.ceil() + 1;
    if (!bound.fits_slong_p()) throw DomainError("Overflow", "Cauchy bound exceeds 64 bits");
    return bound.get_si();
}

D0Report find_d0(std::int64_t rank, std::int64_t d_min, std::int64_t scan_cap) {
    require_rank(rank);
    if (d_min < 1) throw DomainError("InvalidDegree", "d_min must be >= 1");
    if (scan_cap < d_min) throw DomainError("InvalidArgument", "scan cap must be >= d_min");

    D0Report rep;
    rep.rank = rank;
    rep.margin_polynomial = margin_polynomial(rank);
    const auto coeff = [&](int k) {
        const Rational* c = rep.margin_polynomial.find(exact::Monomial({k}));
        return c ? *c : Rational(0);
    };
    rep.leading_coefficient = coeff(3);
    if (rep.leading_coefficient.sign() <= 0) {
        throw DomainError("NoGoodD0", "rank " + std::to_string(rank) + ": d^3 coefficient of c2 - alpha is " +
                                          rep.leading_coefficient.str() + " and the d^2 coefficient is " +
                                          coeff(2).str() + ", so the margin is eventually negative");
    }
    rep.cauchy_bound = cauchy_bound(rep.margin_polynomial);
    rep.regime_start = stable_regime_start(rank);
    rep.scan_begin = d_min;
    rep.scan_end = std::max({d_min, rep.cauchy_bound, rep.regime_start});
    if (rep.scan_end > scan_cap) {
        throw DomainError("ScanCapExceeded", "certificate needs a scan up to d = " + std::to_string(rep.scan_end) +
                                                 " but the cap is " + std::to_string(scan_cap));
    }

    std::optional<std::int64_t> last_failure;
    for (std::int64_t d = rep.scan_begin; d <= rep.scan_end; ++d) {
        const SurfaceData s = surface::hypersurface_invariants(d);
        const GoodnessReport g = is_good(s, rank);
        if (d >= rep.regime_start &&
            Rational(g.plus.margin) != exact::evaluate(rep.margin_polynomial, {Rational(d)})) {
            throw DomainError("InternalError", "stable-regime polynomial disagrees with exact margin at d = " +
                                                   std::to_string(d));
        }
        if (!g.verdict) {
            rep.failures.push_back(d);
            last_failure = d;
        }
    }
    rep.d0 = last_failure ? *last_failure + 1 : rep.scan_begin;
    return rep;
}

std::int64_t required_cycle_length(const SurfaceData& s, std::int64_t rank, Sign sign) {
    require_rank(rank);
    const std::int64_t n = add(sub(s.c2_top, mul(rank - 1, c1_dot_L(s, sign))),
                               mul(half_rank_product(rank), s.L_squared));
    if (n < 0) {
        throw DomainError("NegativeCycleLength",
                          "target c2 is unreachable: forced cycle length would be " + std::to_string(n));
    }
    return n;
}

}  // namespace omalous::liqin
