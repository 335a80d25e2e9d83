#include <doctest.h>

#include "../support/oracles.hpp"
#include "omalous/error.hpp"
#include "omalous/liqin/liqin.hpp"

using namespace omalous::liqin;
using omalous::surface::hypersurface_invariants;

namespace {

// Independent per-degree evaluation of c2 - alpha on X_d with plain integers.
std::int64_t choose3(std::int64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

std::int64_t h0_plain(std::int64_t d, std::int64_t m) { return m < 0 ? 0 : choose3(m + 3) - choose3(m - d + 3); }

std::int64_t margin_plain(std::int64_t d, std::int64_t r, bool plus) {
    const std::int64_t c2 = d * d * d - 4 * d * d + 6 * d;
    const std::int64_t pg = choose3(d - 1);
    const std::int64_t kl = d * (d - 4);
    const std::int64_t c1l = plus ? kl : -kl;
    const std::int64_t m = plus ? r : r + 2 * (d - 4);
    const std::int64_t mx = std::max(pg, h0_plain(d, m));
    const std::int64_t a = (r - 1) * (1 + mx + 4 * (r - 1) * (r - 1) * d) + (r - 1) * c1l - r * (r - 1) / 2 * d;
    return c2 - a;
}

bool good_plain(std::int64_t d, std::int64_t r) { return margin_plain(d, r, true) >= 0 || margin_plain(d, r, false) >= 0; }

void check_domain_error(auto&& fn, const std::string& code) {
    try {
        fn();
        FAIL("expected " << code);
    } catch (const omalous::DomainError& e) {
        CHECK(e.code() == code);
    }
}

}  // namespace

TEST_CASE("slope") {
    CHECK(slope(5, 2) == Rational(5, 2));
    CHECK(slope(0, 4) == Rational(0));
    const auto t = tangent_numerics(hypersurface_invariants(5));
    CHECK(slope(t.c1_dot_L, t.rank) == Rational(-5, 2));
}

TEST_CASE("omality") {
    const auto x5 = hypersurface_invariants(5);
    const auto t = tangent_numerics(x5);
    CHECK(t.c1_dot_L == -5);
    CHECK(t.c1_squared == 5);
    CHECK(t.c2 == 55);
    CHECK(check_omality(t, x5).omalous);

    auto off = t;
    off.c2 = 54;
    const auto r = check_omality(off, x5);
    CHECK_FALSE(r.omalous);
    CHECK_FALSE(r.c2_matches);
    CHECK(r.c1_dot_L_matches);

    BundleNumerics dual{2, 5, 5, 55, C1Description::Custom};
    CHECK_FALSE(check_omality(dual, x5).omalous);
    const auto flagged = check_omality(dual, x5, true);
    CHECK(flagged.omalous);
    CHECK(flagged.matched_dual);

    for (std::int64_t d = 1; d <= 100; ++d) {
        const auto s = hypersurface_invariants(d);
        CHECK(check_omality(tangent_numerics(s), s).omalous);
    }
}

TEST_CASE("alpha spot values") {
    const auto a4 = alpha(hypersurface_invariants(4), 2, Sign::PlusK);
    CHECK(a4.alpha == 23);
    CHECK(a4.terms.pg_term == 1);
    CHECK(a4.terms.h0_term == 10);
    CHECK(a4.terms.max_used == 10);
    CHECK(a4.terms.excess_term == 16);
    CHECK(a4.terms.c1L_term == 0);
    CHECK(a4.terms.L2_term == -4);

    const auto a5 = alpha(hypersurface_invariants(5), 2, Sign::PlusK);
    CHECK(a5.alpha == 31);
    CHECK(a5.terms.excess_term == 20);
    CHECK(a5.terms.c1L_term == 5);
    CHECK(a5.terms.L2_term == -5);

    const auto a53 = alpha(hypersurface_invariants(5), 3, Sign::PlusK);
    CHECK(a53.alpha == 197);
    CHECK(a53.terms.h0_term == 20);
    CHECK(a53.terms.excess_term == 80);

    auto bare = hypersurface_invariants(5);
    bare.h0_source = std::monostate{};
    check_domain_error([&] { alpha(bare, 2, Sign::PlusK); }, "MissingH0Evaluator");
    check_domain_error([&] { alpha(hypersurface_invariants(5), 1, Sign::PlusK); }, "InvalidRank");

    // A manual h0 table is honored.
    auto manual = hypersurface_invariants(5);
    manual.h0_source = omalous::surface::H0Table{{{cb_system_class(2, Sign::PlusK), 100}}};
    CHECK(alpha(manual, 2, Sign::PlusK).terms.max_used == 100);
}

TEST_CASE("goodness") {
    const auto g4 = is_good(hypersurface_invariants(4), 2);
    CHECK(g4.verdict);
    CHECK(g4.sign_used == Sign::PlusK);
    CHECK(g4.margin == 1);

    const auto g5 = is_good(hypersurface_invariants(5), 2);
    CHECK(g5.verdict);
    CHECK(g5.plus.bound.alpha == 31);
    CHECK(g5.plus.margin == 24);

    const auto g53 = is_good(hypersurface_invariants(5), 3);
    CHECK_FALSE(g53.verdict);
    CHECK(g53.plus.margin == -142);
    CHECK(g53.minus.bound.alpha > g53.plus.bound.alpha);

    for (std::int64_t d = 5; d <= 100; ++d) {
        const auto s = hypersurface_invariants(d);
        for (std::int64_t r = 2; r <= 6; ++r) {
            CAPTURE(d);
            CAPTURE(r);
            const auto g = is_good(s, r);
            CHECK(g.plus.margin == margin_plain(d, r, true));
            CHECK(g.minus.margin == margin_plain(d, r, false));
            CHECK(g.alpha == g.terms().reconstruct(r));
            CHECK(g.plus.bound.alpha == g.plus.bound.terms.reconstruct(r));
            CHECK(g.minus.bound.alpha == g.minus.bound.terms.reconstruct(r));
            CHECK(g.verdict == (g.margin >= 0));
            CHECK(g.verdict == good_plain(d, r));
            // Sign asymmetry.
            CHECK(g.minus.margin <= g.plus.margin);
            if (d > r + 4) CHECK(g.minus.bound.terms.max_used == g.minus.bound.terms.h0_term);
            // Cycle length versus margin.
            const auto n = required_cycle_length(s, r, Sign::PlusK);
            const auto& t = g.plus.bound.terms;
            CHECK(n - (r - 1) * (1 + t.max_used + t.excess_term) == g.plus.margin);
        }
    }
}

TEST_CASE("margin polynomial leading coefficient") {
    const std::vector<std::vector<Rational>> expected = {
        {0, Rational(31, 6), -4, Rational(5, 6)},   {0, Rational(-56, 3), -4, Rational(2, 3)},
        {0, Rational(-179, 2), -4, Rational(1, 2)}, {0, Rational(-694, 3), -4, Rational(1, 3)},
        {0, Rational(-2809, 6), -4, Rational(1, 6)}, {0, -824, -4, 0},
    };
    for (std::int64_t r = 2; r <= 7; ++r) {
        CAPTURE(r);
        const auto m = margin_polynomial(r);
        for (int k = 0; k <= 3; ++k) {
            const auto* c = m.find(omalous::exact::Monomial({k}));
            const Rational value = c ? *c : Rational(0);
            CHECK(value == expected[r - 2][k]);
        }
        CHECK(m.degree() <= 3);
        if (r < 7) CHECK(m.leading_coefficient(omalous::exact::MonomialOrder::lex()) == Rational(7 - r, 6));
        // The polynomial agrees with the exact margin on the stable regime.
        for (std::int64_t d = stable_regime_start(r); d < stable_regime_start(r) + 50; ++d) {
            CHECK(omalous::exact::evaluate(m, {Rational(d)}) == Rational(margin_plain(d, r, true)));
        }
    }
}

TEST_CASE("find_d0") {
    const std::vector<std::int64_t> frozen = {5, 10, 18, 34, 67};
    for (std::int64_t r = 2; r <= 6; ++r) {
        CAPTURE(r);
        const auto rep = find_d0(r);
        REQUIRE(rep.d0.has_value());
        CHECK(*rep.d0 == frozen[r - 2]);
        CHECK(rep.leading_coefficient == Rational(7 - r, 6));
        CHECK(rep.leading_coefficient > Rational(0));
        // Brute oracle over a wide range.
        std::int64_t last_failure = 4;
        for (std::int64_t d = 5; d <= 10'000; ++d) {
            if (!good_plain(d, r)) last_failure = d;
        }
        CHECK(*rep.d0 == last_failure + 1);
        for (const auto f : rep.failures) CHECK_FALSE(good_plain(f, r));
        // Consistency with is_good.
        for (std::int64_t d = *rep.d0; d <= *rep.d0 + 40; ++d) CHECK(is_good(hypersurface_invariants(d), r).verdict);
    }
    CHECK(find_d0(2).failures.empty());
    CHECK(find_d0(2, 4).d0 == 4);

    try {
        find_d0(7);
        FAIL("expected NoGoodD0");
    } catch (const omalous::DomainError& e) {
        CHECK(e.code() == "NoGoodD0");
        CHECK(std::string(e.what()).find("-4") != std::string::npos);
    }
    check_domain_error([] { find_d0(6, 5, 10); }, "ScanCapExceeded");
}

TEST_CASE("cycle length") {
    const auto x4 = hypersurface_invariants(4);
    const auto x5 = hypersurface_invariants(5);
    CHECK(required_cycle_length(x4, 2, Sign::PlusK) == 28);
    CHECK(required_cycle_length(x5, 2, Sign::PlusK) == 55);

    // Chern class oracle: with the forced length, c2(E) equals c2(X).
    for (const auto* s : {&x4, &x5}) {
        for (std::int64_t r = 2; r <= 4; ++r) {
            for (const auto sign : {Sign::PlusK, Sign::MinusK}) {
                std::int64_t n = 0;
                try {
                    n = required_cycle_length(*s, r, sign);
                } catch (const omalous::DomainError&) {
                    continue;
                }
                std::vector<std::int64_t> lengths(r - 1, 0);
                lengths[0] = n;
                CHECK(oracle::chern_c2(static_cast<int>(r), s->K_squared, c1_dot_L(*s, sign), s->L_squared, lengths) ==
                      Rational(s->c2_top));
            }
        }
    }

    omalous::surface::SurfaceData synthetic;
    synthetic.c2_top = 0;
    synthetic.L_squared = 2;
    synthetic.K_dot_L = 10;
    check_domain_error([&] { required_cycle_length(synthetic, 2, Sign::PlusK); }, "NegativeCycleLength");
}

TEST_CASE("report JSON") {
    const auto s = hypersurface_invariants(5);
    const auto a = alpha(s, 3, Sign::MinusK);
    CHECK(alpha_from_json(to_json(a)) == a);
    const auto g = is_good(s, 2);
    const auto gj = to_json(g);
    CHECK(gj.at("alpha_plus") == 31);
    CHECK(gj.at("margin_plus") == 24);
    CHECK(goodness_from_json(gj) == g);
    const auto o = check_omality(tangent_numerics(s), s);
    CHECK(omality_from_json(to_json(o)) == o);
    const auto d = find_d0(3);
    const auto dj = to_json(d);
    CHECK(dj.at("d0") == 10);
    CHECK(dj.at("certificate").at("leading_coefficient") == "2/3");
    CHECK(d0_from_json(dj) == d);
    CHECK(sign_from_string("minus") == Sign::MinusK);
    CHECK(sign_from_string("plus_K") == Sign::PlusK);
    check_domain_error([] { sign_from_string("sideways"); }, "InvalidSign");
}
