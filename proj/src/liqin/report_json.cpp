#include "omalous/error.hpp"
#include "omalous/exactmath/serialize.hpp"
#include "omalous/liqin/liqin.hpp"

namespace omalous::liqin {

using nlohmann::json;

namespace {

template <class F>
auto parsing(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw DomainError("ParseError", std::string(what) + ": " + e.what());
    }
}

json terms_json(const AlphaTerms& t) {
    return {{"pg_term", t.pg_term},         {"h0_term", t.h0_term},   {"max_used", t.max_used},
            {"excess_term", t.excess_term}, {"c1L_term", t.c1L_term}, {"L2_term", t.L2_term}};
}

AlphaTerms terms_from(const json& j) {
    AlphaTerms t;
    t.pg_term = j.at("pg_term").get<std::int64_t>();
    t.h0_term = j.at("h0_term").get<std::int64_t>();
    t.max_used = j.at("max_used").get<std::int64_t>();
    t.excess_term = j.at("excess_term").get<std::int64_t>();
    t.c1L_term = j.at("c1L_term").get<std::int64_t>();
    t.L2_term = j.at("L2_term").get<std::int64_t>();
    return t;
}

json signed_json(const SignedMargin& m) {
    return {{"alpha", to_json(m.bound)}, {"margin", m.margin}, {"passes", m.passes}};
}

SignedMargin signed_from(const json& j) {
    SignedMargin m;
    m.bound = alpha_from_json(j.at("alpha"));
    m.margin = j.at("margin").get<std::int64_t>();
    m.passes = j.at("passes").get<bool>();
    return m;
}

}  // namespace

json to_json(const OmalityReport& r) {
    return {{"omalous", r.omalous},
            {"c1_dot_L_matches", r.c1_dot_L_matches},
            {"c1_squared_matches", r.c1_squared_matches},
            {"c2_matches", r.c2_matches},
            {"matched_dual", r.matched_dual},
            {"expected_c1_dot_L", r.expected_c1_dot_L},
            {"expected_c1_squared", r.expected_c1_squared},
            {"expected_c2", r.expected_c2}};
}

OmalityReport omality_from_json(const json& j) {
    return parsing("omality report", [&] {
        OmalityReport r;
        r.omalous = j.at("omalous").get<bool>();
        r.c1_dot_L_matches = j.at("c1_dot_L_matches").get<bool>();
        r.c1_squared_matches = j.at("c1_squared_matches").get<bool>();
        r.c2_matches = j.at("c2_matches").get<bool>();
        r.matched_dual = j.at("matched_dual").get<bool>();
        r.expected_c1_dot_L = j.at("expected_c1_dot_L").get<std::int64_t>();
        r.expected_c1_squared = j.at("expected_c1_squared").get<std::int64_t>();
        r.expected_c2 = j.at("expected_c2").get<std::int64_t>();
        return r;
    });
}

json to_json(const AlphaResult& r) {
    return {{"rank", r.rank}, {"sign", to_string(r.sign)}, {"alpha", r.alpha}, {"terms", terms_json(r.terms)}};
}

AlphaResult alpha_from_json(const json& j) {
    return parsing("alpha report", [&] {
        AlphaResult r;
        r.rank = j.at("rank").get<std::int64_t>();
        r.sign = sign_from_string(j.at("sign").get<std::string>());
        r.alpha = j.at("alpha").get<std::int64_t>();
        r.terms = terms_from(j.at("terms"));
        return r;
    });
}

json to_json(const GoodnessReport& r) {
    return {{"rank", r.rank},
            {"c2_target", r.c2_target},
            {"verdict", r.verdict},
            {"sign_used", to_string(r.sign_used)},
            {"alpha", r.alpha},
            {"margin", r.margin},
            {"alpha_plus", r.plus.bound.alpha},
            {"margin_plus", r.plus.margin},
            {"alpha_minus", r.minus.bound.alpha},
            {"margin_minus", r.minus.margin},
            {"plus", signed_json(r.plus)},
            {"minus", signed_json(r.minus)}};
}

GoodnessReport goodness_from_json(const json& j) {
    return parsing("goodness report", [&] {
        GoodnessReport r;
        r.rank = j.at("rank").get<std::int64_t>();
        r.c2_target = j.at("c2_target").get<std::int64_t>();
        r.verdict = j.at("verdict").get<bool>();
        r.sign_used = sign_from_string(j.at("sign_used").get<std::string>());
        r.alpha = j.at("alpha").get<std::int64_t>();
        r.margin = j.at("margin").get<std::int64_t>();
        r.plus = signed_from(j.at("plus"));
        r.minus = signed_from(j.at("minus"));
        return r;
    });
}

json to_json(const D0Report& r) {
    json certificate = {{"leading_coefficient", r.leading_coefficient.str()},
                        {"cauchy_bound", r.cauchy_bound},
                        {"regime_start", r.regime_start},
                        {"scanned_range", {r.scan_begin, r.scan_end}},
                        {"margin_polynomial", exact::to_json_value(r.margin_polynomial)}};
    return {{"rank", r.rank},
            {"d0", r.d0 ? json(*r.d0) : json(nullptr)},
            {"failures", r.failures},
            {"certificate", certificate}};
}

D0Report d0_from_json(const json& j) {
    return parsing("d0 report", [&] {
        D0Report r;
        r.rank = j.at("rank").get<std::int64_t>();
        if (!j.at("d0").is_null()) r.d0 = j.at("d0").get<std::int64_t>();
        r.failures = j.at("failures").get<std::vector<std::int64_t>>();
        const json& c = j.at("certificate");
        r.leading_coefficient = exact::rational_from_json(c.at("leading_coefficient"));
        r.cauchy_bound = c.at("cauchy_bound").get<std::int64_t>();
        r.regime_start = c.at("regime_start").get<std::int64_t>();
        r.scan_begin = c.at("scanned_range").at(0).get<std::int64_t>();
        r.scan_end = c.at("scanned_range").at(1).get<std::int64_t>();
        r.margin_polynomial = exact::qpolynomial_from_json(c.at("margin_polynomial"));
        return r;
    });
}

}  // namespace omalous::liqin
