// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "../support/oracles.hpp"
#include "omalous/cb/cayley_bacharach.hpp"
#include "omalous/error.hpp"
#include "omalous/exactmath/binomial.hpp"
#include "omalous/exactmath/groebner.hpp"
#include "omalous/liqin/liqin.hpp"
#include "omalous/qsc/qsc.hpp"
#include "omalous/surface/surface.hpp"

namespace {

using namespace omalous;
using exact::Monomial;
using exact::MonomialOrder;
using exact::QPolynomial;
using exact::Rational;
using exact::Variables;

// Runtime limits, in seconds.
constexpr double kLimitFormulas = 1.0;
constexpr double kLimitD0 = 10.0;
constexpr double kLimitQuadric = 5.0;
constexpr double kLimitCB = 5.0;

// Frozen outputs of tests/oracles/liqin_oracle.py.
struct SpotValue {
    std::int64_t degree, rank, alpha, margin;
};
constexpr SpotValue kSpotValues[] = {{4, 2, 23, 1}, {5, 2, 31, 24}, {5, 3, 197, -142}};

constexpr int kRandomCases = 1000;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void report(int id, const char* title, const std::function<void(Outcome&)>& body, double limit = 0) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && secs >= limit) out.require(false, "runtime " + std::to_string(secs) + "s over limit");
    if (!out.ok) ++failures;
    std::printf("%s  %d. %s (%.3fs%s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
                limit > 0 ? (", limit " + std::to_string(static_cast<int>(limit)) + "s").c_str() : "",
                out.ok ? "" : ": ", out.detail.c_str());
}

std::int64_t choose3(std::int64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

void formulas(Outcome& o) {
    for (std::int64_t d = 1; d <= 200; ++d) {
        const auto s = surface::hypersurface_invariants(d);
        const auto tag = " at d=" + std::to_string(d);
        o.require(s.c2_top == d * d * d - 4 * d * d + 6 * d, "c2" + tag);
        o.require(s.K_squared == d * (d - 4) * (d - 4), "c1^2" + tag);
        o.require((s.K_squared + s.c2_top) % 12 == 0, "divisibility" + tag);
        o.require(12 * (1 + s.p_g) == s.K_squared + s.c2_top, "Noether" + tag);
        o.require(surface::check_noether(s).holds, "check_noether" + tag);
        o.require(s.p_g == choose3(d - 1), "p_g vs C(d-1,3)" + tag);
    }
}

void d0_range(Outcome& o) {
    for (std::int64_t r = 2; r <= 7; ++r) {
        const auto tag = " at r=" + std::to_string(r);
        const auto m = liqin::margin_polynomial(r);
        const auto* lead = m.find(Monomial({3}));
        o.require((lead ? *lead : Rational(0)) == Rational(7 - r, 6), "leading coefficient" + tag);
        if (r <= 6) {
            const auto rep = liqin::find_d0(r);
            o.require(rep.d0.has_value(), "no d0" + tag);
            o.require(rep.leading_coefficient == Rational(7 - r, 6), "report leading coefficient" + tag);
        } else {
            bool raised = false;
            try {
                liqin::find_d0(r);
            } catch (const DomainError& e) {
                raised = e.code() == "NoGoodD0";
            }
            o.require(raised, "r=7 did not raise NoGoodD0");
            const auto* sub = m.find(Monomial({2}));
            o.require(sub && *sub < Rational(0), "r=7 d^2 coefficient not negative");
        }
    }
}

void spot_values(Outcome& o) {
    for (const auto& v : kSpotValues) {
        const auto s = surface::hypersurface_invariants(v.degree);
        const auto a = liqin::alpha(s, v.rank, liqin::Sign::PlusK);
        const auto tag = " for X" + std::to_string(v.degree) + " r=" + std::to_string(v.rank);
        o.require(a.alpha == v.alpha, "alpha" + tag);
        o.require(s.c2_top - a.alpha == v.margin, "margin" + tag);
        o.require(liqin::is_good(s, v.rank).plus.margin == v.margin, "is_good margin" + tag);
    }
}

void quadric(Outcome& o) {
    const auto classical = qsc::quadric_family_relations(qsc::DeformationMatrices::classical());
    const auto& gb = classical.groebner_basis();
    o.require(gb.size() == 2, "classical basis size");
    if (gb.size() == 2) {
        o.require(exact::to_string(gb[0]) == "a^2 - p", "first basis element");
        o.require(exact::to_string(gb[1]) == "b^2 - q", "second basis element");
    }
    o.require(qsc::check_classical_specialization(qsc::DeformationMatrices::classical()), "check_classical");

    const std::vector<Monomial> expected{Monomial({0, 0}), Monomial({1, 0}), Monomial({0, 1}), Monomial({1, 1})};
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> num(-9, 9), den(1, 4);
    for (int i = 0; i < 100; ++i) {
        auto m = [&] {
            exact::ExactMatrix<Rational> out(2, 2, Rational(0));
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b) out(a, b) = Rational(num(rng), den(rng));
            return out;
        };
        qsc::DeformationMatrices mats{m(), m(), m(), m()};
        try {
            const auto r = qsc::quadric_family_relations(mats);
            o.require(r.staircase() == expected, "staircase of case " + std::to_string(i));
            o.require(r.standard_monomials().size() == 4, "dimension of case " + std::to_string(i));
        } catch (const DomainError& e) {
            o.require(e.code() == "DegenerateDeformation", "unexpected error " + e.code());
        }
    }
}

void ring_laws(Outcome& o) {
    for (int n = 1; n <= 6; ++n) {
        const auto r = qsc::qh_projective_space(n);
        const auto one = exact::RationalFunction(r.params(), Rational(1));
        const auto q = exact::RationalFunction::parameter(r.params(), "q");
        o.require(r.staircase().size() == static_cast<std::size_t>(n + 1), "P^n staircase");
        for (int k = 0; k <= n; ++k) {
            const auto f = exact::RPolynomial::term(r.vars(), Monomial({n + 1 + k}), one);
            o.require(r.reduce(f).reduced == exact::RPolynomial::term(r.vars(), Monomial({k}), q),
                      "normal form in P^" + std::to_string(n));
        }
    }
    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 4; ++m) {
            o.require(qsc::qh_product_projective(n, m).staircase().size() == static_cast<std::size_t>((n + 1) * (m + 1)),
                      "product staircase");
        }
    }
}

void cb_soundness(Outcome& o) {
    const surface::HypersurfaceSpec h{4, oracle::fermat_quartic()};
    const auto pool = oracle::fermat_pool();
    const std::size_t n = pool.size();
    int checked = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) > 6) continue;
        cb::PointCycle z;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) z.points.push_back(pool[i]);
        for (int m = 0; m <= 2; ++m) {
            o.require(cb::cb_check(z, cb::CBSystem{h, m}).holds == oracle::cb_by_kernel(z.points, m),
                      "disagreement on subset " + std::to_string(mask) + " m=" + std::to_string(m));
            ++checked;
        }
    }
    o.require(checked == 3 * 848, "subset count");
    auto pt = [](int a, int b, int c, int d) {
        return cb::ProjectivePoint({Rational(a), Rational(b), Rational(c), Rational(d)});
    };
    o.require(cb::cb_check(cb::PointCycle{{pt(1, 0, 1, 0), pt(0, 1, 0, 1), pt(1, 1, 1, 1)}}, cb::CBSystem{h, 1}).holds,
              "collinear example");
    o.require(!cb::cb_check(cb::PointCycle{{pt(1, 1, 1, 1)}}, cb::CBSystem{h, 1}).holds, "single point example");
}

void whitney(Outcome& o) {
    for (std::int64_t d = 5; d <= 100; ++d) {
        const auto s = surface::hypersurface_invariants(d);
        for (std::int64_t r = 2; r <= 6; ++r) {
            for (const auto sign : {liqin::Sign::PlusK, liqin::Sign::MinusK}) {
                const auto a = liqin::alpha(s, r, sign);
                const std::int64_t lhs =
                    liqin::required_cycle_length(s, r, sign) - (r - 1) * (1 + a.terms.max_used + a.terms.excess_term);
                o.require(lhs == s.c2_top - a.alpha, "identity at d=" + std::to_string(d) + " r=" + std::to_string(r));
            }
        }
    }
}

bool remainder_is_reduced(const QPolynomial& r, const std::vector<QPolynomial>& gs, const MonomialOrder& order) {
    for (const auto& [m, c] : r.terms())
        for (const auto& g : gs)
            if (g.leading_monomial(order).divides(m)) return false;
    return true;
}

void exactmath_properties(Outcome& o) {
    std::mt19937_64 rng(8);
    const Variables v{"x", "y", "z"};
    const std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::degrevlex(), MonomialOrder::block({0})};

    // Division reassembly.
    for (int i = 0; i < kRandomCases; ++i) {
        const auto& order = orders[i % orders.size()];
        const auto f = oracle::random_poly(rng, v, 6, 5, 9);
        std::vector<QPolynomial> gs;
        for (int k = 0; k < 1 + i % 3; ++k) {
            auto g = oracle::random_poly(rng, v, 3, 3, 9);
            if (g.is_zero()) g = oracle::var(v, "x");
            gs.push_back(g);
        }
        const auto res = exact::divide(f, gs, order);
        QPolynomial back = res.remainder;
        for (std::size_t k = 0; k < gs.size(); ++k) back += res.quotients[k] * gs[k];
        o.require(back == f, "division reassembly");
        o.require(remainder_is_reduced(res.remainder, gs, order), "remainder not reduced");
    }

    // Normal forms against fixed Groebner bases.
    std::vector<std::pair<std::vector<QPolynomial>, MonomialOrder>> bases;
    const Variables xy{"x", "y"};
    for (const auto& order : orders) {
        std::vector<QPolynomial> gens{oracle::random_poly(rng, xy, 4, 2, 5) + oracle::var(xy, "x").pow(2),
                                      oracle::random_poly(rng, xy, 4, 2, 5) + oracle::var(xy, "y").pow(2)};
        bases.emplace_back(exact::buchberger(gens, order), order);
    }
    for (int i = 0; i < kRandomCases; ++i) {
        const auto& [gb, order] = bases[i % bases.size()];
        const auto f = oracle::random_poly(rng, xy, 5, 6, 9);
        const auto nf = exact::normal_form(f, gb, order);
        o.require(exact::normal_form(nf, gb, order) == nf, "normal form idempotence");
        o.require(exact::normal_form(f - nf, gb, order).is_zero(), "f - NF(f) not in ideal");
    }
    for (int i = 0; i < kRandomCases; ++i) {
        const auto& [gb, order] = bases[i % bases.size()];
        const auto f = oracle::random_poly(rng, xy, 4, 4, 9);
        const auto g = oracle::random_poly(rng, xy, 4, 4, 9);
        const auto lhs = exact::normal_form(f * g, gb, order);
        const auto rhs = exact::normal_form(exact::normal_form(f, gb, order) * exact::normal_form(g, gb, order), gb, order);
        o.require(lhs == rhs, "normal form multiplicativity");
    }

    // Pascal's rule.
    std::uniform_int_distribution<std::int64_t> nd(1, 60);
    for (int i = 0; i < kRandomCases; ++i) {
        const std::int64_t n = nd(rng);
        std::uniform_int_distribution<std::int64_t> kd(1, n + 2);
        const std::int64_t k = kd(rng);
        o.require(exact::binomial(n, k) == exact::binomial(n - 1, k) + exact::binomial(n - 1, k - 1), "Pascal");
    }

    // Rank under transposition, with planted dependencies.
    std::uniform_int_distribution<int> dim(1, 6), entry(-4, 4);
    for (int i = 0; i < kRandomCases; ++i) {
        const int rows = dim(rng), cols = dim(rng);
        exact::ExactMatrix<Rational> m(rows, cols, Rational(0));
        for (int a = 0; a < rows; ++a)
            for (int b = 0; b < cols; ++b) m(a, b) = Rational(entry(rng), 1 + (entry(rng) & 1));
        if (rows > 1 && i % 2 == 0)
            for (int b = 0; b < cols; ++b) m(rows - 1, b) = m(0, b) * Rational(entry(rng));
        o.require(exact::rank(m) == exact::rank(m.transpose()), "rank transpose invariance");
    }
}

}  // namespace

int main() {
    report(1, "hypersurface formulas and Noether identity for d in [1,200]", formulas, kLimitFormulas);
    report(2, "d0 exists for r in 2..6, NoGoodD0 at r=7, leading coefficient (7-r)/6", d0_range, kLimitD0);
    report(3, "alpha spot values 23/31/197 with margins 1/24/-142", spot_values);
    report(4, "classical quadric specialization and 100 seeded deformations", quadric, kLimitQuadric);
    report(5, "QH*(P^n) normal forms and QH*(P^n x P^m) staircase sizes", ring_laws);
    report(6, "Cayley-Bacharach checker agrees with kernel oracle on the Fermat quartic", cb_soundness, kLimitCB);
    report(7, "cycle length identity n - (r-1)[1+max+4(r-1)^2 L^2] = c2 - alpha", whitney);
    report(8, "exactmath property suite, 1000 seeded cases each", exactmath_properties);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures;
}
