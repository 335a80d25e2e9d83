#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "omalous/error.hpp"
#include "omalous/exactmath/binomial.hpp"
#include "omalous/exactmath/groebner.hpp"
#include "omalous/exactmath/matrix.hpp"
#include "omalous/exactmath/ratfunc.hpp"
#include "omalous/exactmath/serialize.hpp"

using namespace omalous::exact;
using oracle::cst;
using oracle::var;

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("+3/9").str() == "1/3");
    CHECK_THROWS_AS(Rational::parse("1/0"), omalous::DomainError);
    CHECK_THROWS_AS(Rational::parse("1.5"), omalous::DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), omalous::DomainError);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(-1, 3) == 0);
    CHECK(binomial(-5, 0) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK_THROWS_AS(binomial(3, -1), omalous::DomainError);
    SUBCASE("Pascal's rule") {
        for (std::int64_t n = 1; n <= 60; ++n) {
            for (std::int64_t k = 1; k <= 60; ++k) {
                CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
            }
        }
    }
}

TEST_CASE("polynomial arithmetic") {
    const Variables v{"x"};
    const auto x = var(v, "x");
    const auto one = cst(v, Rational(1));
    CHECK((x + one) * (x - one) == x.pow(2) - one);
    CHECK(x + QPolynomial(v) == x);
    CHECK((x - x).is_zero());
    CHECK(QPolynomial(v).degree() == kDegreeMinusInfinity);

    const Variables ab{"a", "b"};
    const auto a = var(ab, "a");
    const auto b = var(ab, "b");
    CHECK((a + b).pow(2) == a.pow(2) + a * b * Rational(2) + b.pow(2));
    CHECK(to_string((a + b).pow(2)) == "a^2 + 2*a*b + b^2");

    CHECK_THROWS_AS(a + x, omalous::DomainError);
}

TEST_CASE("monomial orders") {
    const Monomial x2{2, 0, 0}, xy{1, 1, 0}, z3{0, 0, 3}, y2{0, 2, 0}, xz{1, 0, 1};
    CHECK(MonomialOrder::lex().less(z3, xy));
    CHECK(MonomialOrder::degrevlex().less(xy, z3));
    CHECK(MonomialOrder::degrevlex().less(xz, y2));   // degrevlex: y^2 > xz
    CHECK(MonomialOrder::lex().less(y2, xz));
    // Block: {x} front eliminates x.
    const auto block = MonomialOrder::block({0});
    CHECK(block.less(z3, Monomial({1, 0, 0})));
    CHECK(block.less(y2, xy));

    SUBCASE("total, multiplicative, 1 minimal") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> e(0, 4);
        auto rand_mono = [&] { return Monomial({e(rng), e(rng), e(rng)}); };
        for (const auto& order : {MonomialOrder::lex(), MonomialOrder::degrevlex(), MonomialOrder::block({1})}) {
            for (int i = 0; i < 300; ++i) {
                const auto u = rand_mono(), v = rand_mono(), w = rand_mono();
                CHECK((order.compare(u, v) == 0) == (u == v));
                if (order.less(u, v)) CHECK(order.less(u * w, v * w));
                if (!u.is_one()) CHECK(order.less(Monomial(3), u));
            }
        }
    }
}

TEST_CASE("division") {
    const Variables v{"x", "q"};
    const auto x = var(v, "x");
    const auto q = var(v, "q");
    const auto lex = MonomialOrder::lex();
    const QPolynomial rel = x.pow(3) - q;
    const std::vector<QPolynomial> basis1{rel};

    auto r1 = divide(x.pow(3), basis1, lex);
    CHECK(r1.quotients[0] == cst(v, Rational(1)));
    CHECK(r1.remainder == q);

    auto r2 = divide(x, basis1, lex);
    CHECK(r2.quotients[0].is_zero());
    CHECK(r2.remainder == x);

    auto r3 = divide(x.pow(5), basis1, lex);
    CHECK(r3.remainder == q * x.pow(2));
    CHECK(r3.remainder == oracle::power_rule(x.pow(5), 2));

    CHECK_THROWS_AS(divide(x, std::vector<QPolynomial>{QPolynomial(v)}, lex), omalous::DomainError);
}

TEST_CASE("normal forms") {
    const Variables v{"x", "q"};
    const auto x = var(v, "x");
    const auto q = var(v, "q");
    const auto lex = MonomialOrder::lex();
    const std::vector<QPolynomial> basis{x.pow(3) - q};
    CHECK(normal_form(x.pow(3) - q, basis, lex).is_zero());
    CHECK(normal_form(x.pow(4), basis, lex) == q * x);
    CHECK(normal_form(x.pow(4), basis, lex) == oracle::power_rule(x.pow(4), 2));

    const Variables abpq{"a", "b", "p", "q"};
    const auto a = var(abpq, "a"), b = var(abpq, "b"), p = var(abpq, "p"), qq = var(abpq, "q");
    const auto block = MonomialOrder::block({0, 1});
    const auto gb = buchberger(std::vector<QPolynomial>{a.pow(2) - p, b.pow(2) - qq}, block);
    CHECK(normal_form(a.pow(2) * b.pow(2), gb, block) == p * qq);
}

TEST_CASE("buchberger") {
    SUBCASE("coprime leading terms over the fraction field") {
        const Variables ab{"a", "b"};
        const Variables pq{"p", "q"};
        const RationalFunction one(pq, Rational(1));
        RPolynomial r1 = RPolynomial::term(ab, Monomial({2, 0}), one) -
                         RPolynomial::constant(ab, RationalFunction::parameter(pq, "p"));
        RPolynomial r2 = RPolynomial::term(ab, Monomial({0, 2}), one) -
                         RPolynomial::constant(ab, RationalFunction::parameter(pq, "q"));
        const auto gb = buchberger(std::vector<RPolynomial>{r1, r2}, MonomialOrder::degrevlex());
        REQUIRE(gb.size() == 2);
        CHECK(gb[0] == r1);
        CHECK(gb[1] == r2);
    }
    SUBCASE("single generator is made monic") {
        const Variables v{"x", "q"};
        const auto x = var(v, "x"), q = var(v, "q");
        const auto gb = buchberger(std::vector<QPolynomial>{(x.pow(3) - q) * Rational(3)}, MonomialOrder::lex());
        REQUIRE(gb.size() == 1);
        CHECK(gb[0] == x.pow(3) - q);
    }
    SUBCASE("two generic conics: Bezout count via resultant") {
        const Variables ab{"a", "b"};
        const auto a = var(ab, "a"), b = var(ab, "b");
        auto c = [&](std::int64_t n) { return cst(ab, Rational(n)); };
        // f = a^2 + 2ab - 3b^2 + a - 5, g = 3a^2 - ab + b^2 - 2b + 7
        const QPolynomial f = a.pow(2) + a * b * Rational(2) - b.pow(2) * Rational(3) + a - c(5);
        const QPolynomial g = a.pow(2) * Rational(3) - a * b + b.pow(2) - b * Rational(2) + c(7);
        const auto res = oracle::resultant_quadratics(
            {c(1), b * Rational(2) + c(1), c(-5) - b.pow(2) * Rational(3)},
            {c(3), -b, b.pow(2) - b * Rational(2) + c(7)}, ab);
        CHECK(res.degree_in(0) == 0);
        CHECK(res.degree_in(1) == 4);

        const auto order = MonomialOrder::degrevlex();
        const auto gb = buchberger(std::vector<QPolynomial>{f, g}, order);
        CHECK(is_groebner_basis(gb, order));
        CHECK(normal_form(f, gb, order).is_zero());
        CHECK(normal_form(g, gb, order).is_zero());
        // Count standard monomials in a generous box.
        int standard = 0;
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                const Monomial m({i, j});
                bool divisible = false;
                for (const auto& h : gb) divisible = divisible || h.leading_monomial(order).divides(m);
                standard += divisible ? 0 : 1;
            }
        }
        CHECK(standard == res.degree());
    }
}

TEST_CASE("multivariate gcd and rational functions") {
    const Variables pq{"p", "q"};
    const auto p = var(pq, "p"), q = var(pq, "q");
    const auto one = cst(pq, Rational(1));
    const QPolynomial common = p * q - one;
    const QPolynomial f = common * (p + q) * Rational(6);
    const QPolynomial g = common * (p - q * Rational(2)) * Rational(4);
    CHECK(gcd(f, g) == common);
    CHECK(gcd(p.pow(2) - q.pow(2), p + q) == p + q);
    CHECK(gcd(p, q) == one);
    CHECK(gcd(QPolynomial(pq), p * Rational(3)) == p);

    const RationalFunction r(f, g);
    CHECK(r.numerator() == (p + q) * Rational(3, 2));
    CHECK(r.denominator() == p - q * Rational(2));
    const RationalFunction inv = RationalFunction(g, f);
    CHECK(r * inv == RationalFunction(pq, Rational(1)));
    CHECK((r - r).is_zero());
    const RationalFunction half(pq, Rational(1, 2));
    CHECK((half + half) == RationalFunction(pq, Rational(1)));
    CHECK_THROWS_AS(RationalFunction(p, QPolynomial(pq)), omalous::DomainError);
    CHECK(r.substitute(1, Rational(0)) == RationalFunction(p * Rational(3, 2), p));
}

TEST_CASE("rank") {
    auto m = [](std::vector<std::vector<std::int64_t>> rows) {
        std::vector<std::vector<Rational>> r;
        for (auto& row : rows) r.emplace_back(row.begin(), row.end());
        return ExactMatrix<Rational>(r);
    };
    CHECK(rank(m({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(rank(ExactMatrix<Rational>(2, 4, Rational(0))) == 0);
    CHECK(rank(m({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(ExactMatrix<Rational>(4, 0, Rational(0))) == 0);

    const auto x = solve(m({{2, 1}, {1, 3}}), {Rational(3), Rational(5)});
    CHECK(x[0] == Rational(4, 5));
    CHECK(x[1] == Rational(7, 5));
    CHECK_THROWS_AS(solve(m({{1, 2}, {2, 4}}), {Rational(1), Rational(1)}), omalous::DomainError);
}

TEST_CASE("polynomial JSON") {
    const Variables ab{"a", "b"};
    const auto a = var(ab, "a"), b = var(ab, "b");
    const QPolynomial f = a.pow(2) * Rational(3, 2) - b;
    const auto j = to_json_value(f);
    CHECK(j.dump() == R"({"terms":[{"coeff":"3/2","exps":[2,0]},{"coeff":"-1","exps":[0,1]}],"vars":["a","b"]})");
    CHECK(qpolynomial_from_json(j) == f);
    const auto parsed = qpolynomial_from_json(nlohmann::json::parse(
        R"({"vars": ["a","b"], "terms": [{"coeff": "3/2", "exps": [2,0]}, {"coeff": 4, "exps": [0,0]}]})"));
    CHECK(parsed == a.pow(2) * Rational(3, 2) + cst(ab, Rational(4)));
    CHECK_THROWS_AS(qpolynomial_from_json(nlohmann::json::parse(R"({"vars": ["a"], "terms": [{"coeff": "1", "exps": [1,1]}]})")),
                    omalous::DomainError);

    const Variables pq{"p", "q"};
    RPolynomial r(ab);
    r.add_term(Monomial({1, 1}), RationalFunction(var(pq, "p"), var(pq, "q") + cst(pq, Rational(1))));
    CHECK(rpolynomial_from_json(to_json_value(r, pq)) == r);
}
